#include "hedrite/report.hpp"

#include "hedrite/circuits.hpp"
#include "hedrite/golden.hpp"
#include "hedrite/io.hpp"
#include "hedrite/link_export.hpp"
#include "hedrite/structure.hpp"
#include "hedrite/symmetry.hpp"

namespace hedrite {

using nlohmann::json;

namespace {

json structure_section(const PlaneGraph& g, std::optional<int> i) {
  json s;
  auto roads = rail_roads(g);
  s["irreducible"] = roads.empty();
  s["railroads"] = json::array();
  for (const auto& r : roads) {
    s["railroads"].push_back({{"faces", r.faces},
                              {"self_intersecting", r.self_intersecting},
                              {"bounding_circuits", r.bounding_circuits}});
  }
  s["connectivity"] = to_string(vertex_connectivity_class(g));
  s["family"] = i ? json(to_string(classify_family(g))) : json(nullptr);
  s["shift"] = nullptr;
  if (i == 4 && central_circuits(g).size() == 2) {
    Shift sh = shift(g);
    s["shift"] = {{"n", sh.n}, {"j", sh.j}};
  }
  return s;
}

}  // namespace

json analyze(const PlaneGraph& g) {
  if (!g.is_four_valent()) throw Error("analysis needs a 4-valent map");
  json out;
  const auto i = is_i_hedrite(g);
  out["n"] = g.num_vertices();
  out["i"] = i ? json(*i) : json(nullptr);

  json fv = json::object();
  for (const auto& [k, count] : face_vector(g).p) fv[std::to_string(k)] = count;
  out["face_vector"] = fv;

  auto cs = central_circuits(g);
  out["cc"] = cc_vector(g).to_string();
  out["circuits"] = json::array();
  for (const auto& c : cs) {
    out["circuits"].push_back({{"length", c.length},
                               {"self_intersections", c.self_intersections},
                               {"int", intersection_vector(g, c).to_string()}});
  }
  out["pure"] = is_pure(g);
  out["balanced"] = is_balanced(g);
  out["structure"] = structure_section(g, i);
  out["group"] = to_string(point_group(g));

  LinkDiagram link = to_link(g);
  out["link"] = {{"components", link.components.size()},
                 {"composite", link.composite},
                 {"gauss", gauss_to_string(gauss_code(link))},
                 {"dt", link.components.size() == 1 ? json(dt_to_string(dt_code(link)))
                                                    : json(nullptr)}};

  out["catalog"] = nullptr;
  if (i) {
    if (auto id = match_catalog(make_record(g))) out["catalog"] = *id;
  }
  return out;
}

json record_to_json(const HedriteRecord& r) {
  return {{"i", r.i},
          {"n", r.n},
          {"id", r.local_id},
          {"code", code_to_hex(r.canonical_code)},
          {"group", to_string(r.point_group)},
          {"cc", r.cc_vector.to_string()},
          {"irreducible", r.irreducible},
          {"pure", r.pure},
          {"balanced", r.balanced},
          {"three_connected", r.three_connected},
          {"family", to_string(r.family)},
          {"graph", to_json(r.graph)}};
}

}  // namespace hedrite
