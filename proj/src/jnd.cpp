#include "approxjac/jnd.hpp"

#include <algorithm>

namespace approxjac {

namespace {

void check_k(const Semigroup& s, int k) {
    if (s.g() == 0) throw ValidationError("smooth branch has no approximate jacobian diagrams");
    if (k < 0 || k > s.g() - 1)
        throw ValidationError("k = " + std::to_string(k) + " out of range 0.." + std::to_string(s.g() - 1));
}

ValidationError not_a_family(const std::string& why) {
    return ValidationError("family is not a branch jacobian family: " + why);
}

std::int64_t exact_int(const Rational& r, const char* what) {
    if (r.denominator() != 1) throw not_a_family(std::string(what) + " = " + to_string(r) + " is not an integer");
    return r.numerator();
}

const ElementarySegment& last_finite(const NewtonDiagram& d) {
    const auto& segs = d.segments();
    if (segs.empty()) throw not_a_family("empty diagram");
    const ElementarySegment& s = segs.back();
    if (s.length.is_infinite() || s.height.is_infinite()) throw not_a_family("infinite segment");
    return s;
}

}  // namespace

NewtonDiagram jnd_formula(const Semigroup& s, int k) {
    check_k(s, k);
    const std::int64_t mu_k = milnor_from_semigroup(approximate_root_semigroup(s, k));
    const std::int64_t mbar = s.mbar(k);
    std::vector<ElementarySegment> segs;
    segs.emplace_back(ExtInt(s.l(k) * (mu_k + mbar - 1)), ExtInt(mu_k + mbar - 1));
    std::int64_t prod = 1;  // n_{k+2} ... n_{i-1}
    for (int i = k + 2; i <= s.g(); ++i) {
        if (i > k + 2) prod *= s.n(i - 1);
        segs.emplace_back(ExtInt((s.n(i) - 1) * s.gen(i)), ExtInt(mbar * prod * (s.n(i) - 1)));
    }
    return NewtonDiagram(std::move(segs));
}

std::vector<Rational> jacobian_invariants(const Semigroup& s, int k) {
    check_k(s, k);
    std::vector<Rational> out{Rational(s.l(k))};
    for (int i = k + 2; i <= s.g(); ++i) out.emplace_back(s.l(i - 1) * s.gen(i), s.gen(k + 1));
    return out;
}

JndFamily jnd_family(const Semigroup& s) {
    if (s.g() == 0) throw ValidationError("smooth branch has no approximate jacobian diagrams");
    JndFamily fam{s, {}};
    for (int k = 0; k < s.g(); ++k) fam.diagrams.push_back(jnd_formula(s, k));
    return fam;
}

RecoveryData recovery_data(const std::vector<NewtonDiagram>& family) {
    if (family.empty()) throw not_a_family("empty family");
    const std::size_t g = family.size();
    const NewtonDiagram& lastd = family.back();
    if (lastd.segments().size() != 1) throw not_a_family("last diagram must be a single segment");
    const ElementarySegment& s = last_finite(lastd);
    RecoveryData rd;
    rd.iota = Rational(s.length.value(), s.height.value());
    for (std::size_t r = 0; r + 1 < g; ++r) rd.H.push_back(last_finite(family[r]).height.value());
    if (g >= 2) rd.Llen = last_finite(family[g - 2]).length.value();
    return rd;
}

Semigroup recover_semigroup(const std::vector<NewtonDiagram>& family) {
    for (const auto& d : family)
        if (!(d.shift() == LatticePoint{})) throw not_a_family("diagram has a nonzero shift");
    const RecoveryData rd = recovery_data(family);
    const std::size_t g = family.size();
    std::vector<std::int64_t> gens;
    if (g == 1) {
        const ElementarySegment& s = family[0].segments().front();
        gens.push_back(exact_int(rd.iota, "b0bar"));
        gens.push_back(s.height.value() + 1);
    } else {
        const Inclination first = family[0].segments().front().inclination();
        if (first.is_infinite()) throw not_a_family("infinite inclination");
        gens.push_back(exact_int(first.value(), "b0bar"));
        if (rd.iota <= Rational(1)) throw not_a_family("last inclination must exceed 1");
        const Rational denom = rd.iota - 1;
        for (std::size_t r = 0; r + 1 < g; ++r)
            gens.push_back(exact_int(rd.iota * rd.H[r] / denom, "b_{r+1}bar"));
        gens.push_back(exact_int(Rational(rd.Llen) / denom, "b_gbar"));
    }
    Semigroup s = [&] {
        try {
            return Semigroup(gens);
        } catch (const ValidationError& e) {
            throw not_a_family(e.what());
        }
    }();
    if (rd.iota != Rational(s.l(s.g() - 1))) throw not_a_family("last inclination differs from l_{g-1}");
    const JndFamily check = jnd_family(s);
    for (std::size_t k = 0; k < g; ++k)
        if (!(check.diagrams[k] == family[k]))
            throw not_a_family("diagram " + std::to_string(k) + " does not match " + s.to_string());
    return s;
}

Semigroup recover_semigroup(const std::vector<std::pair<int, NewtonDiagram>>& labelled) {
    std::vector<std::pair<int, NewtonDiagram>> sorted = labelled;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<NewtonDiagram> family;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].first != static_cast<int>(i))
            throw not_a_family("diagram indices must be exactly 0.." + std::to_string(sorted.size() - 1) +
                               " (got k = " + std::to_string(sorted[i].first) +
                               "); a partial family does not determine the semigroup");
        family.push_back(sorted[i].second);
    }
    return recover_semigroup(family);
}

}  // namespace approxjac
