#pragma once

#include <string>

#include <json.hpp>

#include "distgraph/portrait.hpp"

namespace distgraph {

// Angles are written as "p/q" strings when exact, numbers otherwise.
nlohmann::json portrait_to_json(const CriticalPortrait& p);
CriticalPortrait portrait_from_json(const nlohmann::json& j);

}  // namespace distgraph
