#include "approxjac/json_io.hpp"

namespace approxjac {

namespace {

using nlohmann::json;

json ext_to_json(ExtInt e) { return e.is_infinite() ? json("inf") : json(e.value()); }

ExtInt ext_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "inf") throw ValidationError("diagram JSON: expected integer or \"inf\"");
        return ExtInt::infinity();
    }
    if (!j.is_number_integer()) throw ValidationError("diagram JSON: expected integer or \"inf\"");
    return ExtInt(j.get<std::int64_t>());
}

json segments_to_json(const NewtonDiagram& d) {
    json segs = json::array();
    for (const auto& s : d.segments()) segs.push_back(json::array({ext_to_json(s.length), ext_to_json(s.height)}));
    return segs;
}

std::vector<ElementarySegment> segments_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("diagram JSON: \"segments\" must be an array");
    std::vector<ElementarySegment> segs;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw ValidationError("diagram JSON: segment must be [L, M]");
        segs.emplace_back(ext_from_json(p[0]), ext_from_json(p[1]));
    }
    return segs;
}

}  // namespace

nlohmann::json diagram_to_json(const NewtonDiagram& d) {
    json j;
    j["shift"] = json::array({d.shift().x, d.shift().y});
    j["segments"] = segments_to_json(d);
    return j;
}

NewtonDiagram diagram_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("segments")) throw ValidationError("diagram JSON: missing \"segments\"");
    LatticePoint shift;
    if (j.contains("shift")) {
        const auto& s = j["shift"];
        if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
            throw ValidationError("diagram JSON: \"shift\" must be [a, b]");
        shift = {s[0].get<std::int64_t>(), s[1].get<std::int64_t>()};
    }
    return NewtonDiagram(segments_from_json(j["segments"]), shift);
}

nlohmann::json family_to_json(const JndFamily& f) {
    json j;
    j["semigroup"] = f.semigroup.gens();
    json ds = json::array();
    for (std::size_t k = 0; k < f.diagrams.size(); ++k)
        ds.push_back(json{{"k", static_cast<int>(k)}, {"segments", segments_to_json(f.diagrams[k])}});
    j["diagrams"] = ds;
    return j;
}

FamilyInput family_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("diagrams") || !j["diagrams"].is_array())
        throw ValidationError("family JSON: missing \"diagrams\" array");
    FamilyInput in;
    if (j.contains("semigroup")) {
        for (const auto& v : j["semigroup"]) {
            if (!v.is_number_integer()) throw ValidationError("family JSON: semigroup entries must be integers");
            in.semigroup.push_back(v.get<std::int64_t>());
        }
    }
    int next = 0;
    for (const auto& d : j["diagrams"]) {
        if (!d.is_object()) throw ValidationError("family JSON: diagram must be an object");
        int k = next;
        if (d.contains("k")) {
            if (!d["k"].is_number_integer()) throw ValidationError("family JSON: \"k\" must be an integer");
            k = d["k"].get<int>();
        }
        ++next;
        in.diagrams.emplace_back(k, diagram_from_json(d));
    }
    return in;
}

}  // namespace approxjac
