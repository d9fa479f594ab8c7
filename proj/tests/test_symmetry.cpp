#include "support.hpp"

#include "hedrite/symmetry.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace hedrite;
using testing::catalog;

namespace {

// Roots reproducing the canonical code, split by orientation.
std::pair<int, int> code_stabiliser(const PlaneGraph& g) {
  const CanonicalCode best = canonical_code(g);
  CanonicalCode c;
  int fwd = 0, rev = 0;
  for (Dart r = 0; r < static_cast<Dart>(g.num_darts()); ++r) {
    for (bool reversed : {false, true}) {
      rooted_code(g, r, reversed, c);
      if (c == best) ++(reversed ? rev : fwd);
    }
  }
  return {fwd, rev};
}

std::set<PointGroup> groups(std::initializer_list<const char*> names) {
  std::set<PointGroup> out;
  for (const char* s : names) out.insert(point_group_from_string(s));
  return out;
}

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("automorphism group orders") {
  CHECK(automorphisms(catalog(8, 6, "6-1")).size() == 48);
  CHECK(automorphisms(catalog(5, 10, "10-2")).size() == 1);
  CHECK(automorphisms(catalog(4, 2, "2-1")).size() == 16);
}

TEST_CASE("point groups of catalog entries") {
  CHECK(point_group(catalog(8, 6, "6-1")) == PointGroup::Oh);
  CHECK(point_group(catalog(6, 8, "8-5")) == PointGroup::D2h);
  CHECK(point_group(catalog(8, 8, "8-1")) == PointGroup::D4d);
  CHECK(point_group(catalog(8, 12, "12-1")) == PointGroup::D3d);
  CHECK(point_group(catalog(4, 2, "2-1")) == PointGroup::D4h);
  CHECK(point_group(testing::fixture("8-hedrite-30-1.txt")) == PointGroup::O);
}

TEST_CASE("labels round trip") {
  for (PointGroup p : all_point_groups()) CHECK(point_group_from_string(to_string(p)) == p);
  CHECK(all_point_groups().size() == 18);
  CHECK(order(PointGroup::Oh) == 48);
  CHECK(order(PointGroup::S4) == 4);
  CHECK_THROWS_AS(point_group_from_string("Td"), Error);
}

TEST_CASE("automorphisms agree with the canonical-code stabiliser") {
  for (const auto& r : testing::census15()) {
    auto auts = automorphisms(r.graph);
    int preserving = 0;
    for (const auto& a : auts) preserving += a.orientation_preserving;
    auto [fwd, rev] = code_stabiliser(r.graph);
    CHECK(static_cast<int>(auts.size()) == fwd + rev);
    CHECK(std::max(fwd, rev) == preserving);
    CHECK(order(r.point_group) == static_cast<int>(auts.size()));
  }
}

TEST_CASE("automorphisms commute with the map") {
  const PlaneGraph& g = catalog(6, 8, "8-5");
  for (const auto& a : automorphisms(g)) {
    const auto& p = a.dart_permutation;
    for (Dart d = 0; d < static_cast<Dart>(g.num_darts()); ++d) {
      CHECK(p[g.theta(d)] == g.theta(p[d]));
      CHECK(p[g.sigma(d)] == (a.orientation_preserving ? g.sigma(p[d]) : g.sigma_inv(p[d])));
    }
  }
}

TEST_CASE("allowed groups per i") {
  std::map<int, std::set<PointGroup>> allowed{
      {4, groups({"D2", "D2d", "D2h", "D4", "D4h"})},
      {5, groups({"C1", "Cs", "C2", "C2v", "D3", "D3h"})},
      {6, groups({"C1", "Cs", "C2", "Ci", "C2v", "C2h", "D2", "D2h", "D2d"})},
      {7, groups({"C1", "Cs", "C2", "C2v"})},
  };
  for (const auto& r : testing::census15()) {
    if (r.i < 8) CHECK(allowed[r.i].count(r.point_group) == 1);
  }
}

TEST_CASE("smallest vertex counts per group") {
  std::map<std::pair<int, PointGroup>, int> first;
  for (const auto& r : testing::census15()) first.try_emplace({r.i, r.point_group}, r.n);
  auto at = [&](int i, const char* g) {
    auto it = first.find({i, point_group_from_string(g)});
    return it == first.end() ? -1 : it->second;
  };
  CHECK(at(4, "D4h") == 2);
  CHECK(at(4, "D2h") == 4);
  CHECK(at(4, "D2d") == 6);
  CHECK(at(4, "D4") == 10);
  CHECK(at(4, "D2") == 12);
  CHECK(at(6, "D2d") == 4);
  CHECK(at(6, "C2v") == 5);
  CHECK(at(6, "D2h") == 6);
  CHECK(at(6, "C2") == 6);
  CHECK(at(6, "Cs") == 9);
  CHECK(at(6, "C1") == 9);
  CHECK(at(6, "C2h") == 10);
  CHECK(at(6, "D2") == 12);
  CHECK(at(6, "Ci") == -1);
}

}  // TEST_SUITE
