#include "support.hpp"

#include "hedrite/circuits.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hedrite;
using testing::catalog;

namespace {

// Vertices visited by a circuit, counted with multiplicity.
std::multiset<VertexId> visits(const PlaneGraph& g, const CentralCircuit& c) {
  std::multiset<VertexId> out;
  for (Dart d : c.darts) out.insert(g.vertex_of(d));
  return out;
}

}  // namespace

TEST_SUITE("circuits") {

TEST_CASE("central circuits of small graphs") {
  auto cs = central_circuits(catalog(4, 2, "2-1"));
  REQUIRE(cs.size() == 2);
  for (const auto& c : cs) {
    CHECK(c.length == 2);
    CHECK(c.self_intersections == 0);
  }

  cs = central_circuits(catalog(5, 3, "3-1"));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].length == 6);
  CHECK(cs[0].self_intersections == 3);

  cs = central_circuits(catalog(8, 6, "6-1"));
  REQUIRE(cs.size() == 3);
  for (const auto& c : cs) {
    CHECK(c.length == 4);
    CHECK(c.self_intersections == 0);
  }
}

TEST_CASE("CC vectors") {
  CHECK(cc_vector(catalog(6, 8, "8-5")).to_string() == "4,6^2;");
  CHECK(cc_vector(catalog(5, 6, "6-1")).to_string() == "4;8");
  CHECK(cc_vector(catalog(4, 2, "2-1")).to_string() == "2^2;");
  CHECK(cc_vector(catalog(5, 3, "3-1")).to_string() == ";6");
  bool found = false;
  for (const auto& r : enumerate(7, 15)) {
    found |= r.point_group == PointGroup::C1 && r.cc_vector.to_string() == "6;24";
  }
  CHECK(found);
}

TEST_CASE("circuits partition the edges and self-intersections match visits") {
  for (const auto& r : testing::census15()) {
    auto cs = central_circuits(r.graph);
    int total = 0;
    std::vector<int> used(r.graph.num_darts(), 0);
    for (const auto& c : cs) {
      total += c.length;
      for (Dart d : c.darts) {
        ++used[d];
        ++used[r.graph.theta(d)];
      }
      auto v = visits(r.graph, c);
      int twice = 0;
      for (auto it = v.begin(); it != v.end(); it = v.upper_bound(*it)) twice += v.count(*it) == 2;
      CHECK(twice == c.self_intersections);
      CHECK(c.length % 2 == 0);
    }
    CHECK(total == 2 * r.n);
    CHECK(std::all_of(used.begin(), used.end(), [](int k) { return k == 1; }));
  }
}

TEST_CASE("intersection vectors") {
  for (const auto& iv : intersection_vectors(catalog(8, 6, "6-1"))) {
    CHECK(iv.to_string() == "(0;2^2)");
    CHECK(iv == IntersectionVector{0, {2, 2}});
  }
  auto iv = intersection_vectors(catalog(5, 3, "3-1"));
  REQUIRE(iv.size() == 1);
  CHECK(iv[0] == IntersectionVector{3, {}});
  for (const auto& v : intersection_vectors(catalog(4, 2, "2-1"))) {
    CHECK(v == IntersectionVector{0, {2}});
  }
}

TEST_CASE("intersection counts agree with shared vertices") {
  for (const auto& r : testing::census15()) {
    if (r.n > 12) continue;
    auto cs = central_circuits(r.graph);
    auto m = intersection_matrix(r.graph, cs);
    for (std::size_t a = 0; a < cs.size(); ++a) {
      auto va = visits(r.graph, cs[a]);
      for (std::size_t b = 0; b < cs.size(); ++b) {
        if (a == b) continue;
        auto vb = visits(r.graph, cs[b]);
        int shared = 0;
        for (VertexId v : std::set<VertexId>(va.begin(), va.end())) shared += vb.count(v) > 0;
        CHECK(m[a][b] == shared);
      }
    }
  }
}

TEST_CASE("purity") {
  CHECK(is_pure(catalog(8, 6, "6-1")));
  CHECK(!is_pure(catalog(5, 3, "3-1")));
  for (const auto& r : enumerate(7, 11)) CHECK(!is_pure(r.graph));
}

TEST_CASE("balance") {
  for (const auto& r : testing::census15()) {
    if (r.i == 4) CHECK(is_balanced(r.graph));
  }
  CHECK(!is_balanced(catalog(6, 12, "12-12")));
  CHECK(is_balanced(catalog(8, 14, "14-7")));
}

TEST_CASE("class bipartition of a single circuit") {
  const PlaneGraph& g = catalog(5, 3, "3-1");
  auto a = class_bipartition(g);
  auto b = class_bipartition(g, true);
  REQUIRE(a.size() == 3);
  for (int x : a) CHECK((x == 1 || x == 2));
  bool same = a == b;
  bool swapped = true;
  for (std::size_t k = 0; k < a.size(); ++k) swapped &= a[k] == 3 - b[k];
  CHECK((same || swapped));

  auto c = class_bipartition(catalog(6, 4, "4-1"));
  CHECK(c.size() == 4);
  CHECK_THROWS_AS(class_bipartition(catalog(4, 2, "2-1")), Error);
}

TEST_CASE("chess colouring is proper") {
  for (const auto& r : testing::census15()) {
    if (r.n > 10) continue;
    auto col = chess_colouring(r.graph);
    for (std::size_t d = 0; d < r.graph.num_darts(); ++d) {
      Dart x = static_cast<Dart>(d);
      CHECK(col[r.graph.face_of(x)] != col[r.graph.face_of(r.graph.theta(x))]);
    }
  }
}

}  // TEST_SUITE
