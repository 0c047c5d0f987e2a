#include "approxjac/verify.hpp"

#include "approxjac/jnd.hpp"
#include "approxjac/resultant.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace approxjac {

namespace {

std::int64_t integral(const Rational& r, const std::string& what) {
    if (r.denominator() != 1)
        throw VerificationError(what + " = " + to_string(r) + " is not an integer");
    return r.numerator();
}

// Sum of contacts over all pairs; nullopt when some pair agrees on the
// whole expansion window.
std::optional<Rational> pair_sum(const std::vector<PuiseuxSeries>& a, const std::vector<PuiseuxSeries>& b,
                                 const PuiseuxOptions& opts) {
    Rational total(0);
    for (const auto& x : a)
        for (const auto& y : b) {
            const auto c = try_contact(x, y, opts);
            if (!c) return std::nullopt;
            total += *c;
        }
    return total;
}

struct Attempt {
    std::vector<ContactClass> classes;
    bool undecidable = false;
};

Attempt classify(const ContactAnalysis& a, const PuiseuxOptions& opts) {
    const Semigroup& s = a.semigroup;
    const CharSequence ch = semigroup_to_char(s);
    const int g = s.g();
    const int k = a.k;
    const std::int64_t b0 = s.gen(0);
    const Rational bound(ch[k + 1], b0);

    Attempt out;
    ContactClass residual;
    residual.index = k + 1;
    residual.residual = true;
    residual.class_contact = bound;
    residual.x_power = a.jacobian_x_power;
    std::map<int, ContactClass> by_index;
    for (int i = k + 2; i <= g; ++i) {
        ContactClass c;
        c.index = i;
        c.class_contact = Rational(ch[i], b0);
        by_index.emplace(i, std::move(c));
    }

    for (const auto& sigma : a.jacobian_roots) {
        std::optional<Rational> best;
        for (const auto& gamma : a.f_roots) {
            const auto c = try_contact(sigma, gamma, opts);
            if (!c) {
                out.undecidable = true;
                return out;
            }
            if (!best || *c > *best) best = *c;
        }
        ContactClass* target = nullptr;
        if (*best < bound) {
            target = &residual;
        } else {
            for (auto& [i, c] : by_index)
                if (c.class_contact == *best) target = &c;
            if (!target)
                throw VerificationError("jacobian root with contact " + to_string(*best) +
                                        " >= b_{k+1}/b_0 = " + to_string(bound) +
                                        " is not a characteristic ratio b_i/b_0");
        }
        target->roots.push_back(sigma);
        target->root_contacts.push_back(*best);
    }

    std::vector<ContactClass> classes{std::move(residual)};
    for (auto& [i, c] : by_index) classes.push_back(std::move(c));
    for (auto& c : classes) {
        const auto fsum = pair_sum(c.roots, a.f_roots, opts);
        const auto ksum = pair_sum(c.roots, a.fk_roots, opts);
        if (!fsum || !ksum) {
            out.undecidable = true;
            return out;
        }
        const std::string label = "class " + std::to_string(c.index);
        c.f_intersection = integral(*fsum, label + " (f, G)_0 root sum") + static_cast<std::int64_t>(c.x_power) * b0;
        c.fk_intersection =
            integral(*ksum, label + " (f^(k), G)_0 root sum") + static_cast<std::int64_t>(c.x_power) * a.fk.deg_y();
        c.x_intersection = c.x_power > 0 ? ExtInt::infinity() : ExtInt(static_cast<std::int64_t>(c.roots.size()));
    }
    out.classes = std::move(classes);
    return out;
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

ContactAnalysis analyze_contacts(const BiPoly& f, int k, const PuiseuxOptions& opts,
                                 const std::optional<BiPoly>& root_candidate) {
    const BranchAnalysis br = analyze_branch(f);
    const Semigroup& s = br.semigroup;
    if (s.g() == 0) throw ValidationError("smooth branch has no approximate jacobian diagrams");
    if (k < 0 || k > s.g() - 1)
        throw ValidationError("k = " + std::to_string(k) + " out of range 0.." + std::to_string(s.g() - 1));

    ContactAnalysis a;
    a.semigroup = s;
    a.k = k;
    a.fk = root_candidate ? *root_candidate : br.roots[static_cast<std::size_t>(k)];
    if (a.fk.deg_y() != br.roots[static_cast<std::size_t>(k)].deg_y() || !a.fk.is_monic_in_y())
        throw ValidationError("root candidate must be monic in y of degree " +
                              std::to_string(br.roots[static_cast<std::size_t>(k)].deg_y()));
    a.jacobian = jacobian_det(a.fk, f);
    if (a.jacobian.is_zero()) throw VerificationError("jacobian vanishes identically");
    a.exact_f_total = intersection_multiplicity(f, a.jacobian);
    a.exact_fk_total = intersection_multiplicity(a.fk, a.jacobian);

    const CharSequence ch = semigroup_to_char(s);
    const Rational base_depth = Rational(ch[s.g()], s.gen(0)) + 1;

    PuiseuxOptions popts = opts;
    std::optional<ContactAnalysis> fallback;
    std::string last_error;
    for (int tier = opts.min_tier; tier <= opts.max_tier; ++tier) {
        popts.min_tier = tier;
        Rational depth = base_depth;
        for (int deepen = 0; deepen < 4; ++deepen, depth *= 2) {
            try {
                const auto fe = puiseux_expansion(f, depth, popts);
                const auto ke = puiseux_expansion(a.fk, depth, popts);
                const auto je = puiseux_expansion(a.jacobian, depth, popts);
                if (static_cast<std::int64_t>(fe.roots.size()) != s.gen(0))
                    throw VerificationError("branch has " + std::to_string(fe.roots.size()) + " roots, expected " +
                                            std::to_string(s.gen(0)));
                a.depth = depth;
                a.tier = std::max({fe.tier, ke.tier, je.tier});
                a.f_roots = fe.roots;
                a.fk_roots = ke.roots;
                a.jacobian_roots = je.roots;
                a.jacobian_x_power = je.x_power;
                Attempt att = classify(a, popts);
                if (att.undecidable) continue;
                a.classes = std::move(att.classes);
                std::int64_t tf = 0, tk = 0;
                for (const auto& c : a.classes) {
                    tf += c.f_intersection;
                    tk += c.fk_intersection;
                }
                a.totals_match = a.exact_f_total == ExtInt(tf) && a.exact_fk_total == ExtInt(tk);
                if (a.totals_match) return a;
                if (!fallback) fallback = a;
                last_error = "class totals disagree with exact resultant totals";
                break;
            } catch (const AmbiguousContact& e) {
                last_error = e.what();
                break;
            } catch (const NumericalError& e) {
                last_error = e.what();
                break;
            }
        }
    }
    if (fallback) return *fallback;
    throw NumericalError("contact analysis failed at every precision tier: " + last_error);
}

std::vector<ContactClass> contact_classes(const BiPoly& J, const BiPoly& f, const BiPoly& fk, const Semigroup& s,
                                          int k, const PuiseuxOptions& opts) {
    const ContactAnalysis a = analyze_contacts(f, k, opts);
    if (!(a.jacobian == J) || !(a.fk == fk) || !(a.semigroup == s))
        throw ValidationError("contact_classes: J, f^(k) or the semigroup do not belong to f");
    return a.classes;
}

NewtonDiagram diagram_from_classes(const std::vector<ContactClass>& classes) {
    std::vector<ElementarySegment> segs;
    std::optional<Inclination> prev;
    for (const auto& c : classes) {
        if (c.f_intersection <= 0 || c.fk_intersection <= 0)
            throw VerificationError("contact class " + std::to_string(c.index) + " is empty");
        ElementarySegment seg(ExtInt(c.f_intersection), ExtInt(c.fk_intersection));
        if (prev && !(*prev < seg.inclination()))
            throw VerificationError("class inclinations are not strictly increasing at class " +
                                    std::to_string(c.index));
        prev = seg.inclination();
        segs.push_back(seg);
    }
    return NewtonDiagram(std::move(segs));
}

NewtonDiagram jnd_oracle(const BiPoly& f, int k, const PuiseuxOptions& opts) {
    const ContactAnalysis a = analyze_contacts(f, k, opts);
    if (!a.totals_match)
        throw VerificationError("class intersection totals disagree with exact resultants at every precision tier");
    return diagram_from_classes(a.classes);
}

bool conjugate_closed(const std::vector<PuiseuxSeries>& roots, const PuiseuxOptions& opts) {
    const std::size_t n = roots.size();
    if (n == 0) return true;
    std::vector<std::size_t> image(n);
    std::vector<bool> taken(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        PuiseuxSeries tw = roots[i];
        for (auto& t : tw.terms) {
            const double angle = 2.0 * std::numbers::pi * boost::rational_cast<double>(t.exponent);
            t.coeff *= std::polar(1.0, angle);
        }
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
            if (taken[j]) continue;
            if (!try_contact(tw, roots[j], opts)) {
                image[i] = j;
                taken[j] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    std::size_t len = 0, cur = 0;
    do {
        cur = image[cur];
        ++len;
    } while (cur != 0 && len <= n);
    return len == n;
}

bool numerically_irreducible(const BiPoly& f, const PuiseuxOptions& opts) {
    const Semigroup s = semigroup_of(f);
    const CharSequence ch = semigroup_to_char(s);
    Rational depth = Rational(ch[s.g()], s.gen(0)) + 1;
    PuiseuxOptions popts = opts;
    for (int tier = opts.min_tier; tier <= opts.max_tier; ++tier) {
        popts.min_tier = tier;
        try {
            const auto e = puiseux_expansion(f, depth, popts);
            if (static_cast<std::int64_t>(e.roots.size()) != s.gen(0)) return false;
            return conjugate_closed(e.roots, popts);
        } catch (const NumericalError&) {
        }
    }
    throw NumericalError("irreducibility check undecidable at every precision tier");
}

std::vector<CheckResult> check_root_candidate(const BiPoly& f, int k, const BiPoly& candidate) {
    const Semigroup s = semigroup_of(f);
    if (k < 0 || k > s.g() - 1)
        throw ValidationError("k = " + std::to_string(k) + " out of range 0.." + std::to_string(s.g() - 1));
    const BiPoly fk = characteristic_roots(f)[static_cast<std::size_t>(k)];
    std::vector<CheckResult> out;
    auto add = [&](std::string name, std::string expected, std::string actual) {
        const bool ok = expected == actual;
        out.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    };
    add("candidate_monic", "true", candidate.is_monic_in_y() ? "true" : "false");
    add("candidate_degree", str(fk.deg_y()), str(candidate.deg_y()));
    add("candidate_contact", str(s.gen(k + 1)), intersection_multiplicity(f, candidate).to_string());
    std::string sg;
    try {
        sg = semigroup_of(candidate).to_string();
    } catch (const ValidationError& e) {
        sg = std::string("not a branch: ") + e.what();
    }
    add("candidate_semigroup", approximate_root_semigroup(s, k).to_string(), sg);

    const CharSequence ch = semigroup_to_char(s);
    const Rational expected(ch[k + 1], s.gen(0));
    std::string got;
    try {
        const Rational depth = Rational(ch[s.g()], s.gen(0)) + 1;
        got = to_string(contact(puiseux_expand(f, depth), puiseux_expand(candidate, depth)));
    } catch (const NumericalError& e) {
        got = e.what();
    }
    add("candidate_numeric_contact", to_string(expected), got);
    return out;
}

bool VerificationReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["polynomial"] = polynomial;
    j["k"] = k;
    j["semigroup"] = semigroup;
    j["formula"] = formula;
    j["oracle"] = oracle;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks)
        cs.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["checks"] = cs;
    j["pass"] = pass();
    return j;
}

namespace {

VerificationReport verify_impl(const BiPoly& f, int k, const std::optional<BiPoly>& candidate,
                               const PuiseuxOptions& opts) {
    VerificationReport rep;
    rep.polynomial = f.to_string();
    rep.k = k;
    const Semigroup s = semigroup_of(f);
    rep.semigroup = s.gens();
    const NewtonDiagram formula = jnd_formula(s, k);
    rep.formula = formula.to_string();
    auto add = [&](std::string name, std::string expected, std::string actual) {
        const bool ok = expected == actual;
        rep.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    };

    if (k < 0 || k > s.g() - 1)
        throw ValidationError("k = " + std::to_string(k) + " out of range 0.." + std::to_string(s.g() - 1));
    const BiPoly fk = candidate ? *candidate : characteristic_roots(f)[static_cast<std::size_t>(k)];
    if (candidate) {
        for (auto& c : check_root_candidate(f, k, fk)) rep.checks.push_back(std::move(c));
        if (!rep.pass()) {
            rep.oracle = "unavailable";
            return rep;
        }
    }
    const BiPoly J = jacobian_det(fk, f);
    const std::int64_t mu_k = milnor_from_semigroup(approximate_root_semigroup(s, k));

    // Exact checks that do not need the expansion.
    const ExtInt fkJ = intersection_multiplicity(fk, J);
    add("teissier_identity", str(mu_k + s.gen(k + 1) - 1), fkJ.to_string());
    add("milnor_number_of_approximate_root", str(mu_k), str(milnor_number(fk)));

    ContactAnalysis a;
    try {
        a = analyze_contacts(f, k, opts, candidate);
    } catch (const std::exception& e) {
        rep.oracle = "unavailable";
        rep.checks.push_back({"contact_classes", "classification", e.what(), false});
        return rep;
    }

    std::int64_t tf = 0, tk = 0;
    for (const auto& c : a.classes) {
        tf += c.f_intersection;
        tk += c.fk_intersection;
    }
    add("exact_total_f", a.exact_f_total.to_string(), str(tf));
    add("exact_total_fk", a.exact_fk_total.to_string(), str(tk));

    try {
        rep.oracle = diagram_from_classes(a.classes).to_string();
    } catch (const VerificationError& e) {
        rep.oracle = std::string("invalid: ") + e.what();
    }
    if (!candidate) add("oracle_equals_formula", rep.formula, rep.oracle);

    const CharSequence ch = semigroup_to_char(s);
    const int g = s.g();
    const std::int64_t b0 = s.gen(0);

    // Class root counts (the x-intersection of each non-residual factor).
    for (const auto& c : a.classes) {
        if (c.residual) {
            bool below = true;
            for (const auto& t : c.root_contacts) below = below && t < c.class_contact;
            add("residual_contact_bound", "all < " + to_string(c.class_contact), below ? "all < " + to_string(c.class_contact) : "violated");
            continue;
        }
        std::int64_t expected = s.n(c.index) - 1;
        for (int i = 1; i < c.index; ++i) expected *= s.n(i);
        add("class_root_count[i=" + std::to_string(c.index) + "]", str(expected), str(static_cast<std::int64_t>(c.roots.size())));
    }

    // Root-count identities for contact thresholds above b_{k+1}/b_0.
    auto count_at_least = [&](const PuiseuxSeries& gamma, const Rational& tau) {
        std::int64_t n = 0;
        for (const auto& sigma : a.jacobian_roots) {
            const auto c = try_contact(sigma, gamma, opts);
            if (!c || *c >= tau) ++n;
        }
        return n;
    };
    auto observed = [&](const Rational& tau) {
        std::set<std::int64_t> seen;
        for (const auto& gamma : a.f_roots) seen.insert(count_at_least(gamma, tau));
        std::string out;
        for (auto v : seen) out += (out.empty() ? "" : ",") + str(v);
        return out;
    };
    try {
        for (int j = k + 1; j <= g; ++j) {
            const Rational lo(ch[j], b0);
            const Rational hi = j < g ? Rational(ch[j + 1], b0) : lo + Rational(1, 2 * b0);
            for (const Rational& tau : {(lo + hi) / 2, hi}) {
                add("close_root_count[j=" + std::to_string(j) + ",tau=" + to_string(tau) + "]", str(s.l(j) - 1), observed(tau));
                std::int64_t total = 0;
                for (const auto& t : a.classes)
                    for (const auto& rc : t.root_contacts) total += rc >= tau ? 1 : 0;
                std::int64_t prod = 1;
                for (int i = 1; i <= j; ++i) prod *= s.n(i);
                add("contact_tail_count[tau=" + to_string(tau) + "]", str(b0 - prod), str(total));
            }
        }
        const Rational tau0(ch[k + 1], b0);
        add("close_root_count[tau=" + to_string(tau0) + "]", str(s.n(k + 1) * (s.l(k + 1) - 1)), observed(tau0));
    } catch (const NumericalError& e) {
        rep.checks.push_back({"close_root_count", "decidable contacts", e.what(), false});
    }

    add("conjugate_closure", "single cycle of " + str(b0), conjugate_closed(a.f_roots, opts) ? "single cycle of " + str(b0) : "not closed");

    auto residual_check = [&](const std::string& name, const BiPoly& h, const std::vector<PuiseuxSeries>& roots) {
        bool ok = true;
        Rational worst = a.depth;
        for (const auto& r : roots) {
            const Rational o = substitution_order(h, r, opts.contact_tolerance);
            if (o < worst) worst = o;
            ok = ok && o > a.depth - 1;
        }
        rep.checks.push_back({name, "> " + to_string(a.depth - 1), to_string(worst), ok});
    };
    residual_check("substitution_residual[f]", f, a.f_roots);
    residual_check("substitution_residual[f^(k)]", fk, a.fk_roots);
    residual_check("substitution_residual[jacobian]", J, a.jacobian_roots);
    return rep;
}

}  // namespace

VerificationReport verify_decomposition(const BiPoly& f, int k, const PuiseuxOptions& opts) {
    return verify_impl(f, k, std::nullopt, opts);
}

VerificationReport verify_decomposition(const BiPoly& f, int k, const BiPoly& root_candidate,
                                        const PuiseuxOptions& opts) {
    return verify_impl(f, k, root_candidate, opts);
}

}  // namespace approxjac
