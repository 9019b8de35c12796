#include "gbsr/report_json.hpp"

#include <nlohmann/json.hpp>

namespace gbsr {

namespace {

using nlohmann::json;

json moves_json(const std::vector<Move>& moves) {
  json out = json::array();
  for (const auto& m : moves) out.push_back(to_string(m));
  return out;
}

json graph_value(const Graph& g) {
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_name(v));
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"name", e.name},
                     {"from", g.vertex_name(e.at(Side::A).vertex)},
                     {"labelFrom", e.at(Side::A).label},
                     {"labelTo", e.at(Side::B).label},
                     {"to", g.vertex_name(e.at(Side::B).vertex)}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

}  // namespace

std::string graph_json(const Graph& g) { return graph_value(g).dump(2); }

std::string verdict_json(const Graph& g, const RigidityVerdict& v) {
  json violations = json::array();
  for (const auto& x : v.violations) {
    json item = {{"vertex", g.vertex_name(x.vertex)},
                 {"endE", g.end_name(x.e)},
                 {"endF", g.end_name(x.f)},
                 {"condition", std::string(to_string(x.kind))}};
    if (x.kind == ViolationKind::Induction) item["divisor"] = x.divisor;
    violations.push_back(std::move(item));
  }
  json out = {{"reduced", v.reduced},
              {"ascending", v.ascending},
              {"stronglySlideFree", v.strongly_slide_free},
              {"rigid", v.rigid},
              {"violations", violations}};
  return out.dump(2);
}

std::string explore_json(const ExploreReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"graph", graph_value(c.graph)},
                       {"fingerprint", c.fingerprint},
                       {"count", c.count},
                       {"representativeMoves", moves_json(c.moves)}});
  }
  json out = {{"classes", classes},
              {"rigid", std::string(to_string(r.rigid))},
              {"witness", moves_json(r.witness)},
              {"ascending", r.ascending},
              {"boundsHit", r.bounds_hit},
              {"statesExpanded", r.states_expanded},
              {"transitions", r.transitions}};
  return out.dump(2);
}

}  // namespace gbsr
