#pragma once

#include <string>

#include <json.hpp>

#include "distgraph/graph.hpp"

namespace distgraph {

nlohmann::json certificate_to_json(const InvariantCertificate& c);

// Throws Parse on schema errors.
InvariantCertificate certificate_from_json(const nlohmann::json& j);

// Pretty-printed document terminated by a newline. Doubles are written in
// shortest round-trip form, so parse(serialize(c)) is bit-exact.
std::string serialize_certificate(const InvariantCertificate& c);

InvariantCertificate parse_certificate(const std::string& text);

}  // namespace distgraph
