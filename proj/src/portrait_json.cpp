#include "distgraph/portrait_json.hpp"

#include "distgraph/error.hpp"

namespace distgraph {

using nlohmann::json;

namespace {

json angle_to_json(const Angle& a) {
  if (a.exact())
    return std::to_string(a.num()) + "/" + std::to_string(a.den());
  return a.value();
}

Angle angle_from_json(const json& j) {
  if (j.is_string()) return Angle::parse(j.get<std::string>());
  if (j.is_number()) return Angle::real(j.get<double>());
  throw Error(ErrorCode::Parse, "angle must be a number or \"p/q\" string");
}

}  // namespace

json portrait_to_json(const CriticalPortrait& p) {
  json criticals = json::array();
  for (const auto& c : p.criticals) {
    json angles = json::array();
    for (const auto& a : c.co_angles) angles.push_back(angle_to_json(a));
    criticals.push_back({{"d", c.local_degree},
                         {"n", c.depth},
                         {"y_frac", c.level_frac},
                         {"co_angles", std::move(angles)}});
  }
  return json{{"degree", p.degree},
              {"base_angle", angle_to_json(p.base_angle)},
              {"criticals", std::move(criticals)}};
}

CriticalPortrait portrait_from_json(const json& j) {
  try {
    CriticalPortrait p;
    p.degree = j.at("degree").get<int>();
    p.base_angle = angle_from_json(j.at("base_angle"));
    for (const auto& c : j.at("criticals")) {
      CriticalSpec spec;
      spec.local_degree = c.at("d").get<int>();
      spec.depth = c.at("n").get<int>();
      spec.level_frac = c.at("y_frac").get<double>();
      for (const auto& a : c.at("co_angles"))
        spec.co_angles.push_back(angle_from_json(a));
      p.criticals.push_back(std::move(spec));
    }
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("portrait: ") + e.what());
  }
}

}  // namespace distgraph
