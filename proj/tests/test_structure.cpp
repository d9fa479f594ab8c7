#include "support.hpp"

#include "hedrite/circuits.hpp"
#include "hedrite/structure.hpp"
#include "hedrite/transform.hpp"

#include <doctest.h>

#include <set>

using namespace hedrite;
using testing::catalog;

namespace {

// Smallest j whose two-circuit model is isomorphic to g, by trying them all.
std::optional<int> shift_by_search(const PlaneGraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  for (int j = 0; j <= n / 2; ++j) {
    try {
      if (is_isomorphic(build_4hedrite(n, j), g)) return j;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

std::string label(const HedriteRecord& r) {
  auto id = match_catalog(r);
  return std::to_string(r.i) + ":" + (id ? *id : "?");
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("connectivity") {
  CHECK(vertex_connectivity_class(catalog(4, 6, "6-1")) == Connectivity::two);
  CHECK(vertex_connectivity_class(catalog(8, 6, "6-1")) == Connectivity::three_or_more);
  for (const auto& r : testing::census15()) {
    CHECK(vertex_connectivity_class(r.graph) != Connectivity::one);
  }
}

TEST_CASE("rail-roads") {
  CHECK(!rail_roads(catalog(4, 4, "4-2")).empty());
  CHECK(rail_roads(catalog(8, 6, "6-1")).empty());
  auto roads = rail_roads(catalog(6, 13, "13-11"));
  REQUIRE(!roads.empty());
  CHECK(std::any_of(roads.begin(), roads.end(), [](const RailRoad& r) { return r.self_intersecting; }));

  CHECK(is_irreducible(testing::fixture("8-hedrite-20-1.txt")));
  CHECK(!is_irreducible(catalog(4, 8, "8-3")));
  CHECK(is_irreducible(catalog(4, 2, "2-1")));
}

TEST_CASE("rail-road sides are central circuits running alongside") {
  for (const auto& r : testing::census15()) {
    auto cs = central_circuits(r.graph);
    for (const auto& road : rail_roads(r.graph)) {
      for (FaceId f : road.faces) CHECK(r.graph.face_size(f) == 4);
      const auto& a = cs[road.bounding_circuits[0]];
      const auto& b = cs[road.bounding_circuits[1]];
      CHECK(a.length == b.length);
      CHECK(a.self_intersections == b.self_intersections);
    }
  }
}

TEST_CASE("self-intersecting rail-roads up to 15 vertices") {
  std::set<std::string> found;
  for (const auto& r : testing::census15()) {
    for (const auto& road : rail_roads(r.graph)) {
      if (road.self_intersecting) found.insert(label(r));
    }
  }
  CHECK(found == std::set<std::string>{"5:12-3", "5:14-6", "6:12-12", "6:13-11"});

  // 12-12 is the 2-inflation of 6-hedrite 5-1 along its self-intersecting circuit.
  const PlaneGraph& small = catalog(6, 5, "5-1");
  auto cs = central_circuits(small);
  auto it = std::find_if(cs.begin(), cs.end(), [](const CentralCircuit& c) { return c.self_intersections > 0; });
  REQUIRE(it != cs.end());
  CHECK(is_isomorphic(inflate_circuit(small, *it, 2), catalog(6, 12, "12-12")));
}

TEST_CASE("graph of curvatures") {
  auto cg = curvature_graph(catalog(8, 6, "6-1"));
  CHECK(cg.nodes.size() == 8);
  for (FaceId f : cg.nodes) CHECK(cg.degree(f) == 3);
  for (const auto& e : cg.edges) CHECK(e.faces.empty());

  cg = curvature_graph(catalog(4, 8, "8-1"));
  CHECK(cg.nodes.size() == 4);
  for (FaceId f : cg.nodes) CHECK(cg.degree(f) == 2);

  const PlaneGraph& g = catalog(5, 6, "6-2");
  cg = curvature_graph(g);
  std::multiset<int> degrees;
  for (FaceId f : cg.nodes) degrees.insert(cg.degree(f));
  CHECK(degrees == std::multiset<int>{2, 2, 2, 3, 3});

  for (const auto& r : testing::census15()) {
    auto c = curvature_graph(r.graph);
    CHECK(c.nodes.size() == static_cast<std::size_t>(r.i));
    for (FaceId f : c.nodes) CHECK(c.degree(f) == static_cast<int>(r.graph.face_size(f)));
  }
}

TEST_CASE("patch curvature") {
  const PlaneGraph& oct = catalog(8, 6, "6-1");
  std::vector<FaceId> all(oct.num_faces());
  std::iota(all.begin(), all.end(), 0);
  CHECK(patch_curvature(oct, all) == 8);

  for (int c = 0; c < 3; ++c) {
    std::vector<int> cut{c};
    auto regions = cut_regions(oct, cut);
    REQUIRE(regions.size() == 2);
    for (const auto& region : regions) {
      CHECK(region.size() == 4);
      CHECK(patch_curvature(oct, region) == 4);
      CHECK(boundary_arc_count(oct, region) == 0);
    }
  }

  const PlaneGraph& g = catalog(4, 8, "8-3");
  for (FaceId f = 0; f < static_cast<FaceId>(g.num_faces()); ++f) {
    if (g.face_size(f) == 4) {
      std::vector<FaceId> one{f};
      CHECK(patch_curvature(g, one) == 0);
    }
  }
}

TEST_CASE("regular patches satisfy c = 4 - q") {
  for (const auto& r : testing::census15()) {
    if (r.n > 10) continue;
    const int k = static_cast<int>(central_circuits(r.graph).size());
    for (int a = 0; a < k; ++a) {
      for (int b = a; b < k; ++b) {
        std::vector<int> cut{a};
        if (b != a) cut.push_back(b);
        int sum = 0;
        bool all_disks = true;
        for (const auto& region : cut_regions(r.graph, cut)) {
          try {
            int c = patch_curvature(r.graph, region);
            CHECK(c == 4 - boundary_arc_count(r.graph, region));
            sum += c;
          } catch (const Error&) {
            all_disks = false;
          }
        }
        if (all_disks) CHECK(sum == 8);
      }
    }
  }
}

TEST_CASE("separating rings") {
  const PlaneGraph& oct = catalog(8, 6, "6-1");
  CHECK(!separating_ring(oct, 0, 1));

  const PlaneGraph& g = catalog(4, 8, "8-3");
  auto cs = central_circuits(g);
  auto m = intersection_matrix(g, cs);
  int rings = 0;
  for (int a = 0; a < static_cast<int>(cs.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(cs.size()); ++b) {
      auto ring = separating_ring(g, a, b);
      CHECK(ring.has_value() == (m[a][b] == 0));
      if (ring) {
        ++rings;
        for (FaceId f : *ring) CHECK(g.face_size(f) == 4);
      }
    }
  }
  CHECK(rings == 2);

  for (const auto& r : testing::census15()) {
    for (const auto& road : rail_roads(r.graph)) {
      if (road.self_intersecting) continue;
      auto ring = separating_ring(r.graph, road.bounding_circuits[0], road.bounding_circuits[1]);
      REQUIRE(ring.has_value());
      CHECK(std::set<FaceId>(ring->begin(), ring->end()) ==
            std::set<FaceId>(road.faces.begin(), road.faces.end()));
    }
  }
}

TEST_CASE("families") {
  CHECK(classify_family(catalog(4, 4, "4-2")) == FamilyLabel{FamilyKind::J4, 2});
  CHECK(classify_family(catalog(6, 6, "6-2")) == FamilyLabel{FamilyKind::I6, 3});
  CHECK(classify_family(catalog(8, 6, "6-1")).kind == FamilyKind::none);

  PlaneGraph i5 = build_family(FamilyKind::I5, 2);
  CHECK(i5.num_vertices() == 5);
  CHECK(is_i_hedrite(i5) == 5);
  CHECK(point_group(i5) == PointGroup::C2v);
  CHECK(cc_vector(i5).to_string() == ";10");

  PlaneGraph j4 = build_family(FamilyKind::J4, 3);
  CHECK(j4.num_vertices() == 6);
  CHECK(point_group(j4) == PointGroup::D2h);
  CHECK(cc_vector(j4).to_string() == "2^3,6;");

  PlaneGraph i4 = build_family(FamilyKind::I4, 2);
  CHECK(i4.num_vertices() == 6);
  CHECK(point_group(i4) == PointGroup::D2d);
  CHECK(cc_vector(i4).to_string() == "6^2;");

  CHECK_THROWS_AS(build_family(FamilyKind::I6, 1), Error);
  CHECK_THROWS_AS(build_family(FamilyKind::none, 3), Error);
}

TEST_CASE("family builders against the catalog") {
  for (int m = 2; m <= 7; ++m) {
    for (FamilyKind k : {FamilyKind::I6, FamilyKind::I5, FamilyKind::I4, FamilyKind::J4}) {
      PlaneGraph g = build_family(k, m);
      CAPTURE(to_string(k));
      CAPTURE(m);
      CHECK(is_i_hedrite(g));
      // I6 with m = 2 is 6-hedrite 4-1, whose simple graph is K4.
      if (k != FamilyKind::I6 || m > 2) CHECK(vertex_connectivity_class(g) == Connectivity::two);
      CHECK(classify_family(g) == FamilyLabel{k, m});
    }
    PlaneGraph k4 = build_family(FamilyKind::K4, m);
    CHECK(k4.num_vertices() == static_cast<std::size_t>(4 * m));
    std::vector<int> lengths = cc_vector(k4).simple;
    std::vector<int> expected(m, 4);
    expected.push_back(4 * m);
    std::sort(expected.begin(), expected.end());
    CHECK(lengths == expected);
  }
}

TEST_CASE("2-gon configurations") {
  auto rep = two_gon_configuration(catalog(4, 2, "2-1"));
  CHECK(rep.adjacent_2gons);
  rep = two_gon_configuration(catalog(5, 3, "3-1"));
  CHECK(rep.vertex_sharing_2gons);
  rep = two_gon_configuration(catalog(8, 6, "6-1"));
  CHECK(!rep.adjacent_2gons);
  CHECK(!rep.vertex_sharing_2gons);
  for (const auto& r : testing::census15()) {
    auto t = two_gon_configuration(r.graph);
    if (t.adjacent_2gons) {
      CHECK((t.forced == "4-hedrite 2-1" || classify_family(r.graph).kind == FamilyKind::J4));
    }
  }
}

TEST_CASE("shift of two-circuit 4-hedrites") {
  CHECK(shift(catalog(4, 2, "2-1")).j == 0);
  CHECK(shift(catalog(4, 4, "4-1")).j == 1);
  Shift s = shift(catalog(4, 8, "8-1"));
  CHECK(is_isomorphic(build_4hedrite(8, s.j), catalog(4, 8, "8-1")));
  int checked = 0;
  for (const auto& r : testing::census15()) {
    if (r.i != 4 || central_circuits(r.graph).size() != 2) continue;
    auto j = shift_by_search(r.graph);
    REQUIRE(j.has_value());
    CHECK(shift(r.graph).j == *j);
    ++checked;
  }
  CHECK(checked == 9);
  CHECK_THROWS_AS(shift(catalog(4, 8, "8-3")), Error);
}

}  // TEST_SUITE
