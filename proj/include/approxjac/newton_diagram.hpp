#pragma once

#include "approxjac/core.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace approxjac {

// Inclination L/M of an elementary diagram, with L/inf = 0 and inf/M = +inf.
class Inclination {
public:
    static Inclination of(ExtInt length, ExtInt height);
    static Inclination infinite() { return Inclination(true, Rational(0)); }
    explicit Inclination(Rational r) : infinite_(false), value_(r) {}

    bool is_infinite() const { return infinite_; }
    const Rational& value() const;  // throws for +inf

    friend bool operator==(const Inclination& a, const Inclination& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Inclination& a, const Inclination& b);

    std::string to_string() const;

private:
    Inclination(bool inf, Rational v) : infinite_(inf), value_(v) {}
    bool infinite_;
    Rational value_;
};

// The elementary diagram {L\M} = Newton diagram of x^L + y^M.
struct ElementarySegment {
    ExtInt length;  // L
    ExtInt height;  // M

    ElementarySegment(ExtInt l, ExtInt m);

    Inclination inclination() const { return Inclination::of(length, height); }
    friend bool operator==(const ElementarySegment&, const ElementarySegment&) = default;

    // "{L\M}", with "inf" for infinity.
    std::string to_string() const;
};

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// A Newton diagram: shift + sum of elementary diagrams. Segments are kept in
// the canonical decomposition (strictly increasing inclinations, equal
// inclinations merged). The shift is the translation by a monomial x^a y^b;
// x^a y^b is also expressible as {a\inf} + {inf\b}, and equality compares the
// two forms as the same set.
class NewtonDiagram {
public:
    NewtonDiagram() = default;
    explicit NewtonDiagram(std::vector<ElementarySegment> segments, LatticePoint shift = {});

    const std::vector<ElementarySegment>& segments() const { return segments_; }
    const LatticePoint& shift() const { return shift_; }
    bool is_empty() const { return segments_.empty() && shift_ == LatticePoint{}; }

    // Same set with the shift folded into {a\inf} and {inf\b} segments.
    NewtonDiagram normalized() const;

    // Corner points of the staircase from top-left to bottom-right. Infinite
    // segments contribute only a translation of the chain.
    std::vector<LatticePoint> vertices() const;

    std::vector<Inclination> inclinations() const;

    // Sum of lengths/heights of the finite segments.
    std::int64_t finite_length() const;
    std::int64_t finite_height() const;

    friend bool operator==(const NewtonDiagram& a, const NewtonDiagram& b);

    // "{8\2}+{13\3}", "{}" for the empty diagram, shift prefixed when nonzero.
    std::string to_string() const;

private:
    std::vector<ElementarySegment> segments_;
    LatticePoint shift_;
};

// Lower-left staircase of ConvexHull(points + R_+^2). Throws
// std::invalid_argument for an empty point set.
NewtonDiagram diagram_from_support(const std::vector<LatticePoint>& points);

NewtonDiagram minkowski_sum(const NewtonDiagram& a, const NewtonDiagram& b);

std::vector<ElementarySegment> canonical_decomposition(const NewtonDiagram& d);

// Per-inclination subtraction a - b. Every segment of b must have a partner of
// the same inclination in a that is at least as large. Throws ValidationError
// ("difference not representable") otherwise.
NewtonDiagram diagram_difference(const NewtonDiagram& a, const NewtonDiagram& b);

enum class RenderFormat { Ascii, Svg };

std::string render(const NewtonDiagram& d, RenderFormat format);

}  // namespace approxjac
