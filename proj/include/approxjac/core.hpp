#pragma once

// Small shared vocabulary: exact rationals, extended integers, error types.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace approxjac {

// Exponents, inclinations and contact orders. All of them are small.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// A nonnegative integer or +infinity. Used for intersection multiplicities
// and for the lengths/heights of elementary Newton diagrams.
class ExtInt {
public:
    constexpr ExtInt() = default;
    constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit on purpose

    static constexpr ExtInt infinity() {
        ExtInt e;
        e.value_ = kInf;
        return e;
    }

    constexpr bool is_infinite() const { return value_ == kInf; }
    constexpr bool is_finite() const { return value_ != kInf; }

    std::int64_t value() const {
        if (is_infinite()) throw std::logic_error("ExtInt: value() of infinity");
        return value_;
    }

    friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return ExtInt(a.value_ + b.value_);
    }

    friend constexpr bool operator==(ExtInt, ExtInt) = default;
    friend constexpr auto operator<=>(ExtInt a, ExtInt b) { return a.value_ <=> b.value_; }

    std::string to_string() const;

private:
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::int64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ExtInt e);

// Input is structurally invalid for the requested operation (not a branch,
// invalid semigroup, undefined diagram difference, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An independent check disagreed with the computed value.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Floating-point Puiseux machinery could not decide something at the
// requested precision or depth.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace approxjac
