#include "approxjac/core.hpp"

namespace approxjac {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string ExtInt::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, ExtInt e) { return os << e.to_string(); }

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

}  // namespace approxjac
