#include "distgraph/certificate_json.hpp"

#include "distgraph/error.hpp"

namespace distgraph {

using nlohmann::json;

json certificate_to_json(const InvariantCertificate& c) {
  json graph = json::array();
  for (const auto& p : c.graph.points()) {
    graph.push_back({
        {"position", p.position},
        {"label",
         {{"d", p.label.local_degree()},
          {"n", p.label.depth()},
          {"pair",
           json::array({p.label.first().entries(),
                        p.label.second().entries()})}}},
    });
  }
  return json{{"degree", c.degree}, {"graph", std::move(graph)}};
}

InvariantCertificate certificate_from_json(const json& j) {
  try {
    InvariantCertificate c;
    c.degree = j.at("degree").get<int>();
    std::vector<LabelledPoint> points;
    for (const auto& item : j.at("graph")) {
      const auto& label = item.at("label");
      const auto& pair = label.at("pair");
      if (!pair.is_array() || pair.size() != 2)
        throw Error(ErrorCode::Parse, "label pair must have two entries");
      points.push_back(LabelledPoint{
          item.at("position").get<double>(),
          CriticalLabel(label.at("d").get<int>(), label.at("n").get<int>(),
                        ComponentNumber(pair[0].get<std::vector<int>>()),
                        ComponentNumber(pair[1].get<std::vector<int>>()))});
    }
    c.graph = DistinguishingGraph(std::move(points));
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("certificate: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, std::string("certificate: ") + e.what());
  }
}

std::string serialize_certificate(const InvariantCertificate& c) {
  // One labelled point per line keeps diffs of certificate files readable.
  const json j = certificate_to_json(c);
  std::string out = "{\n  \"degree\": " + j.at("degree").dump() + ",\n";
  const auto& graph = j.at("graph");
  if (graph.empty()) return out + "  \"graph\": []\n}\n";
  out += "  \"graph\": [\n";
  for (std::size_t i = 0; i < graph.size(); ++i)
    out += "    " + graph[i].dump() + (i + 1 < graph.size() ? ",\n" : "\n");
  return out + "  ]\n}\n";
}

InvariantCertificate parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return certificate_from_json(j);
}

}  // namespace distgraph
