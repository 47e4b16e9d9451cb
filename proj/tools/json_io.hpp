#pragma once

#include <json.hpp>

#include "scminor/construction.hpp"
#include "scminor/minor_model.hpp"
#include "scminor/oracle.hpp"
#include "scminor/topology.hpp"

namespace scminor {

// {"k": 3, "branch_sets": [[1,2],[3,4],[0]]}
nlohmann::ordered_json to_json(const MinorModel& m);
MinorModel minor_model_from_json(const nlohmann::ordered_json& j);

// {"answer": "yes", "witness": {...} | null, "expansions": 42}
nlohmann::ordered_json to_json(const MinorResult& r);

nlohmann::ordered_json to_json(const ContractionPlan& plan);
nlohmann::ordered_json to_json(const Certificate& c);
nlohmann::ordered_json to_json(const TopologyReport& r);

}  // namespace scminor
