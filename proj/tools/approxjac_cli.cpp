#include "approxjac/branch.hpp"
#include "approxjac/jnd.hpp"
#include "approxjac/json_io.hpp"
#include "approxjac/parse.hpp"
#include "approxjac/puiseux.hpp"
#include "approxjac/resultant.hpp"
#include "approxjac/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace approxjac;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kValidation = 1, kVerification = 2, kParse = 3 };

std::vector<std::int64_t> parse_gens(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ValidationError("semigroup: '" + item + "' is not an integer");
        }
    }
    return out;
}

// "all" or a single index.
std::vector<int> parse_k(const std::string& text, int g) {
    if (g == 0) throw ValidationError("smooth branch has no approximate jacobian diagrams");
    std::vector<int> ks;
    if (text == "all") {
        for (int k = 0; k < g; ++k) ks.push_back(k);
        return ks;
    }
    try {
        std::size_t used = 0;
        const int k = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        ks.push_back(k);
    } catch (const std::logic_error&) {
        throw ValidationError("--k expects an integer or 'all', got '" + text + "'");
    }
    return ks;
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string vertex_chain(const NewtonDiagram& d) {
    std::string s;
    for (const auto& p : d.vertices()) s += " (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    return s;
}

std::string svg_path_for(const std::string& base, int k, bool many) {
    if (!many) return base;
    const auto dot = base.rfind('.');
    const std::string suffix = "_k" + std::to_string(k);
    if (dot == std::string::npos || dot < base.find_last_of('/') + 1) return base + suffix;
    return base.substr(0, dot) + suffix + base.substr(dot);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot write " + path);
    os << content;
}

json family_subset(const Semigroup& s, const std::vector<int>& ks) {
    json j;
    j["semigroup"] = s.gens();
    json ds = json::array();
    for (int k : ks) ds.push_back(json{{"k", k}, {"segments", diagram_to_json(jnd_formula(s, k))["segments"]}});
    j["diagrams"] = ds;
    return j;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
};

int cmd_semigroup(const Context& c, const std::string& expr, bool as_json, bool check_irreducible) {
    const BiPoly f = parse_poly(expr);
    const Semigroup s = semigroup_of(f);
    const CharSequence ch = semigroup_to_char(s);
    std::vector<std::int64_t> l, n;
    for (int k = 0; k <= s.g(); ++k) l.push_back(s.l(k));
    for (int k = 1; k <= s.g(); ++k) n.push_back(s.n(k));
    const std::int64_t mu = milnor_from_semigroup(s);
    const std::int64_t mu_exact = milnor_number(f);
    const bool irreducible = !check_irreducible || numerically_irreducible(f);
    if (as_json) {
        json j{{"polynomial", f.to_string()},
               {"semigroup", s.gens()},
               {"characteristic", ch.values()},
               {"l", l},
               {"n", n},
               {"milnor", mu},
               {"milnor_exact", mu_exact}};
        if (check_irreducible) j["numerically_irreducible"] = irreducible;
        c.out << j.dump() << "\n";
    } else {
        c.out << "semigroup: " << s.to_string() << "\n"
              << "characteristic: " << ch.to_string() << "\n"
              << "l: " << join(l) << "\n"
              << "n: " << join(n) << "\n"
              << "milnor: " << mu << " (exact: " << mu_exact << ")\n";
        if (check_irreducible) c.out << "numerically irreducible: " << (irreducible ? "yes" : "no") << "\n";
    }
    if (!irreducible) {
        c.err << "roots do not form a single monodromy cycle\n";
        return kVerification;
    }
    if (mu != mu_exact) {
        c.err << "milnor number mismatch: semigroup " << mu << " vs exact " << mu_exact << "\n";
        return kVerification;
    }
    return kOk;
}

int cmd_roots(const Context& c, const std::string& expr, bool as_json) {
    const BiPoly f = parse_poly(expr);
    const BranchAnalysis br = analyze_branch(f);
    if (as_json) {
        json rs = json::array();
        for (const auto& r : br.roots) rs.push_back(r.to_string());
        c.out << json{{"semigroup", br.semigroup.gens()}, {"roots", rs}}.dump() << "\n";
    } else {
        for (std::size_t k = 0; k < br.roots.size(); ++k)
            c.out << "f^(" << k << ") = " << br.roots[k].to_string() << "\n";
    }
    return kOk;
}

int cmd_puiseux(const Context& c, const std::string& expr, const std::string& depth_text, bool as_json) {
    const BiPoly f = parse_poly(expr);
    std::int64_t num = 0, den = 1;
    const auto slash = depth_text.find('/');
    try {
        num = std::stoll(depth_text.substr(0, slash));
        if (slash != std::string::npos) den = std::stoll(depth_text.substr(slash + 1));
    } catch (const std::logic_error&) {
        throw ValidationError("--depth expects a rational number");
    }
    if (den <= 0 || num <= 0) throw ValidationError("--depth must be a positive rational");
    const PuiseuxExpansion ex = puiseux_expansion(f, Rational(num, den));
    if (as_json) {
        json rs = json::array();
        for (const auto& r : ex.roots) {
            json terms = json::array();
            for (const auto& t : r.terms)
                terms.push_back(json{{"exponent", to_string(t.exponent)}, {"re", t.coeff.real()}, {"im", t.coeff.imag()}});
            rs.push_back(json{{"terms", terms}, {"truncation_order", to_string(r.truncation_order)}});
        }
        c.out << json{{"x_power", ex.x_power}, {"roots", rs}}.dump() << "\n";
    } else {
        c.out << "x-power: " << ex.x_power << "\n";
        for (const auto& r : ex.roots) c.out << "y = " << r.to_string() << "\n";
    }
    return kOk;
}

int cmd_jnd(const Context& c, const std::string& gens, const std::string& expr, const std::string& ktext, bool verify,
            bool as_json, const std::string& svg, bool ascii, const std::string& root_expr = "") {
    if (gens.empty() == expr.empty()) throw ValidationError("jnd: give exactly one of --semigroup or --f");
    std::optional<BiPoly> f;
    const Semigroup s = [&] {
        if (!gens.empty()) return Semigroup(parse_gens(gens));
        f = parse_poly(expr);
        return semigroup_of(*f);
    }();
    if (verify && !f) throw ValidationError("jnd: --verify needs --f");
    const std::vector<int> ks = parse_k(ktext, s.g());
    for (int k : ks) (void)jnd_formula(s, k);  // range errors before output
    std::optional<BiPoly> candidate;
    if (!root_expr.empty()) {
        if (ks.size() != 1) throw ValidationError("--root needs a single --k");
        candidate = parse_poly(root_expr);
    }

    int status = kOk;
    json reports = json::array();
    for (int k : ks) {
        const NewtonDiagram d = jnd_formula(s, k);
        if (!svg.empty()) write_file(svg_path_for(svg, k, ks.size() > 1), render(d, RenderFormat::Svg));
        if (verify) {
            const VerificationReport rep = candidate ? verify_decomposition(*f, k, *candidate) : verify_decomposition(*f, k);
            if (!rep.pass()) status = kVerification;
            if (as_json) {
                reports.push_back(rep.to_json());
            } else {
                c.out << "k=" << k << ": formula " << rep.formula << "  oracle " << rep.oracle << "  "
                      << (rep.pass() ? "PASS" : "FAIL") << "\n";
                for (const auto& ch : rep.checks)
                    c.out << "  [" << (ch.pass ? "ok" : "FAIL") << "] " << ch.name << ": expected " << ch.expected
                          << ", got " << ch.actual << "\n";
            }
        } else if (!as_json) {
            c.out << "k=" << k << ": " << d.to_string() << "\n";
            c.out << "  vertices:" << vertex_chain(d) << "\n";
            if (ascii) c.out << render(d, RenderFormat::Ascii);
        }
    }
    if (as_json) {
        if (verify) c.out << json{{"semigroup", s.gens()}, {"reports", reports}}.dump() << "\n";
        else if (ks.size() == static_cast<std::size_t>(s.g())) c.out << family_to_json(jnd_family(s)).dump() << "\n";
        else c.out << family_subset(s, ks).dump() << "\n";
    }
    return status;
}

int cmd_verify(const Context& c, const std::string& expr, const std::string& ktext, bool as_json,
               const std::string& root_expr) {
    return cmd_jnd(c, "", expr, ktext, true, as_json, "", false, root_expr);
}

int cmd_recover(const Context& c, const std::string& path, bool as_json) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot read " + path);
    json j;
    try {
        j = json::parse(is);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
    }
    const FamilyInput in = family_from_json(j);
    const Semigroup s = recover_semigroup(in.diagrams);
    if (!in.semigroup.empty() && in.semigroup != s.gens())
        throw ValidationError("family is not a branch jacobian family: file declares <" + join(in.semigroup) +
                              "> but the diagrams encode " + s.to_string());
    if (as_json) c.out << json{{"semigroup", s.gens()}}.dump() << "\n";
    else c.out << join(s.gens()) << "\n";
    return kOk;
}

int cmd_invariants(const Context& c, const std::string& gens, const std::string& ktext, bool as_json) {
    const Semigroup s(parse_gens(gens));
    const std::vector<int> ks = parse_k(ktext, s.g());
    json arr = json::array();
    for (int k : ks) {
        const auto inv = jacobian_invariants(s, k);
        std::vector<std::string> txt;
        for (const auto& r : inv) txt.push_back(to_string(r));
        if (as_json) {
            arr.push_back(json{{"k", k}, {"invariants", txt}});
        } else {
            c.out << "k=" << k << ":";
            for (const auto& t : txt) c.out << " " << t;
            c.out << "\n";
        }
    }
    if (as_json) c.out << json{{"semigroup", s.gens()}, {"invariants", arr}}.dump() << "\n";
    return kOk;
}

int cmd_demo(const Context& c, bool as_json) {
    const std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> pairs{
        {{4, 14, 31}, {4, 6, 35}}, {{4, 6, 37}, {6, 10, 31}}};
    std::vector<Semigroup> all;
    json collisions = json::array();
    bool collide = true;
    for (const auto& [a, b] : pairs) {
        const Semigroup sa(a), sb(b);
        all.push_back(sa);
        all.push_back(sb);
        const NewtonDiagram da = jnd_formula(sa, 1), db = jnd_formula(sb, 1);
        collide = collide && da == db;
        if (as_json)
            collisions.push_back(json{{"semigroups", {a, b}}, {"k", 1}, {"diagram", da.to_string()}, {"equal", da == db}});
        else
            c.out << "k=1: " << sa.to_string() << " -> " << da.to_string() << ", " << sb.to_string() << " -> "
                  << db.to_string() << (da == db ? "  (equal)" : "  (different)") << "\n";
    }
    std::vector<JndFamily> fams;
    for (const auto& s : all) fams.push_back(jnd_family(s));
    bool distinct = true;
    for (std::size_t i = 0; i < fams.size(); ++i)
        for (std::size_t j = i + 1; j < fams.size(); ++j) {
            bool same = fams[i].diagrams.size() == fams[j].diagrams.size();
            for (std::size_t k = 0; same && k < fams[i].diagrams.size(); ++k)
                same = fams[i].diagrams[k] == fams[j].diagrams[k];
            distinct = distinct && !same;
        }
    if (as_json) {
        json fj = json::array();
        for (const auto& f : fams) fj.push_back(family_to_json(f));
        c.out << json{{"collisions", collisions}, {"families", fj}, {"families_pairwise_distinct", distinct}}.dump()
              << "\n";
    } else {
        for (const auto& f : fams) {
            c.out << "family " << f.semigroup.to_string() << ":";
            for (std::size_t k = 0; k < f.diagrams.size(); ++k) c.out << " k=" << k << " " << f.diagrams[k].to_string();
            c.out << "\n";
        }
        c.out << "full families pairwise distinct: " << (distinct ? "yes" : "no") << "\n";
    }
    return collide && distinct ? kOk : kVerification;
}

void report_error(const Context& c, bool as_json, const std::string& kind, const std::string& message, int line = 0,
                  int column = 0) {
    if (as_json) {
        json e{{"kind", kind}, {"message", message}};
        if (line > 0) {
            e["line"] = line;
            e["column"] = column;
        }
        c.err << json{{"error", e}}.dump() << "\n";
    } else {
        c.err << "error: " << message << "\n";
    }
}

int run_batch(const std::string& path, std::ostream& out, std::ostream& err);

// One command line (without the program name).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    const Context c{out, err};
    const bool as_json = std::find(args.begin(), args.end(), "--json") != args.end();

    CLI::App app{"Approximate jacobian Newton diagrams of plane branches"};
    app.require_subcommand(0, 1);
    std::string batch;
    app.add_option("--batch", batch, "Run one command per line of FILE in parallel; output keeps input order");

    std::string expr, gens, ktext = "all", svg, family, depth = "2", root_expr;
    bool json_flag = false, verify = false, ascii = false, check_irreducible = false;

    auto* sg = app.add_subcommand("semigroup", "Semigroup, characteristic, l/n sequences and Milnor number of a branch");
    sg->add_option("--f", expr, "Polynomial expression")->required();
    sg->add_flag("--json", json_flag);
    sg->add_flag("--check-irreducible", check_irreducible, "Also check that the Puiseux roots form one monodromy cycle");

    auto* rt = app.add_subcommand("roots", "Characteristic approximate roots f^(0..g-1)");
    rt->add_option("--f", expr, "Polynomial expression")->required();
    rt->add_flag("--json", json_flag);

    auto* pu = app.add_subcommand("puiseux", "Newton-Puiseux roots through the origin");
    pu->add_option("--f", expr, "Polynomial expression")->required();
    pu->add_option("--depth", depth, "Truncation order (rational)");
    pu->add_flag("--json", json_flag);

    auto* jn = app.add_subcommand("jnd", "Approximate jacobian Newton diagrams");
    jn->add_option("--semigroup", gens, "Generators, comma separated");
    jn->add_option("--f", expr, "Polynomial expression");
    jn->add_option("--k", ktext, "Index k or 'all'");
    jn->add_flag("--verify", verify, "Compare with the root-grouping oracle (needs --f)");
    jn->add_flag("--json", json_flag);
    jn->add_flag("--ascii", ascii, "Draw the staircase");
    jn->add_option("--svg", svg, "Write SVG (with _kK suffix when several diagrams)");

    auto* vf = app.add_subcommand("verify", "Full verification report for a branch");
    vf->add_option("--f", expr, "Polynomial expression")->required();
    vf->add_option("--k", ktext, "Index k or 'all'");
    vf->add_option("--root", root_expr, "Use this polynomial in place of f^(k) (single k)");
    vf->add_flag("--json", json_flag);

    auto* rc = app.add_subcommand("recover", "Recover the semigroup from a diagram family");
    rc->add_option("--family", family, "Family JSON file")->required();
    rc->add_flag("--json", json_flag);

    auto* iv = app.add_subcommand("invariants", "Jacobian invariants (diagram inclinations)");
    iv->add_option("--semigroup", gens, "Generators, comma separated")->required();
    iv->add_option("--k", ktext, "Index k or 'all'");
    iv->add_flag("--json", json_flag);

    auto* dm = app.add_subcommand("demo-noninjectivity", "Show colliding single diagrams with distinct families");
    dm->add_flag("--json", json_flag);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        report_error(c, as_json, "usage", e.what());
        return kValidation;
    }

    try {
        if (!batch.empty()) return run_batch(batch, out, err);
        if (*sg) return cmd_semigroup(c, expr, json_flag, check_irreducible);
        if (*rt) return cmd_roots(c, expr, json_flag);
        if (*pu) return cmd_puiseux(c, expr, depth, json_flag);
        if (*jn) return cmd_jnd(c, gens, expr, ktext, verify, json_flag, svg, ascii);
        if (*vf) return cmd_verify(c, expr, ktext, json_flag, root_expr);
        if (*rc) return cmd_recover(c, family, json_flag);
        if (*iv) return cmd_invariants(c, gens, ktext, json_flag);
        if (*dm) return cmd_demo(c, json_flag);
        out << app.help();
        return kOk;
    } catch (const ParseError& e) {
        report_error(c, as_json, "parse", e.what(), e.line(), e.column());
        return kParse;
    } catch (const ValidationError& e) {
        report_error(c, as_json, "validation", e.what());
        return kValidation;
    } catch (const VerificationError& e) {
        report_error(c, as_json, "verification", e.what());
        return kVerification;
    } catch (const NumericalError& e) {
        report_error(c, as_json, "numerical", e.what());
        return kVerification;
    } catch (const std::invalid_argument& e) {
        report_error(c, as_json, "validation", e.what());
        return kValidation;
    }
}

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream is(path);
    if (!is) {
        err << "error: cannot read " << path << "\n";
        return kValidation;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(is, line);) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    struct Result {
        std::string out, err;
        int status = 0;
    };
    std::vector<Result> results(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
            std::ostringstream o, e;
            std::vector<std::string> args;
            try {
                args = CLI::detail::split_up(lines[i]);
            } catch (const std::exception& ex) {
                e << "error: " << ex.what() << "\n";
                results[i] = {o.str(), e.str(), kValidation};
                continue;
            }
            if (std::find(args.begin(), args.end(), "--batch") != args.end()) {
                results[i] = {"", "error: nested --batch\n", kValidation};
                continue;
            }
            const int st = run(args, o, e);
            results[i] = {o.str(), e.str(), st};
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(lines.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    int status = kOk;
    for (const auto& r : results) {
        out << r.out;
        err << r.err;
        status = std::max(status, r.status);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), std::cout, std::cerr);
}
