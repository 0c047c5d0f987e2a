#pragma once

#include "approxjac/jnd.hpp"
#include "approxjac/newton_diagram.hpp"

#include <nlohmann/json.hpp>

#include <utility>
#include <vector>

namespace approxjac {

// {"shift":[a,b],"segments":[[L,M],...]} with "inf" for infinity.
nlohmann::json diagram_to_json(const NewtonDiagram& d);
NewtonDiagram diagram_from_json(const nlohmann::json& j);

// {"semigroup":[...],"diagrams":[{"k":0,"segments":[[L,M],...]},...]}
nlohmann::json family_to_json(const JndFamily& f);

// Parsed family file; the "semigroup" key is optional on input.
struct FamilyInput {
    std::vector<std::int64_t> semigroup;
    std::vector<std::pair<int, NewtonDiagram>> diagrams;
};
FamilyInput family_from_json(const nlohmann::json& j);

}  // namespace approxjac
