#include "support.hpp"

#include "hedrite/io.hpp"
#include "hedrite/plane_graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

using namespace hedrite;
using testing::catalog;

TEST_SUITE("core_graph") {

TEST_CASE("two vertices joined by four parallel edges") {
  PlaneGraph g = decode("2\n4 7 6 5 0 3 2 1\n0 1 2 3 4 5 6 7\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_faces() == 4);
  for (const auto& f : faces(g)) CHECK(f.size() == 2);
  CHECK(is_i_hedrite(g) == 4);
}

TEST_CASE("decode errors name the offending element") {
  CHECK_THROWS_WITH_AS(decode("2\n0 7 6 5 4 3 2 1\n0 1 2 3 4 5 6 7\n"),
                       doctest::Contains("non-involutive pairing at dart 0"), Error);
  CHECK_THROWS_WITH_AS(decode("2\n4 7 6 5 0 3 2 9\n0 1 2 3 4 5 6 7\n"),
                       doctest::Contains("malformed permutation"), Error);
  CHECK_THROWS_WITH_AS(decode("2\n1 0 5 4 3 2 7 6\n0 1 2 3 4 5 6 7\n"),
                       doctest::Contains("loop at vertex"), Error);
  CHECK_THROWS_AS(decode("2\n4 7 6 5 0 3 2\n0 1 2 3 4 5 6 7\n"), Error);
  // Two separate 2-vertex components.
  CHECK_THROWS_WITH_AS(
      PlaneGraph({4, 7, 6, 5, 0, 3, 2, 1, 12, 15, 14, 13, 8, 11, 10, 9},
                 {1, 2, 3, 0, 5, 6, 7, 4, 9, 10, 11, 8, 13, 14, 15, 12}),
      doctest::Contains("disconnected map"), Error);
  // Two vertices, theta pairs 0-4, 1-5, 2-6, 3-7: torus embedding.
  CHECK_THROWS_WITH_AS(PlaneGraph({4, 5, 6, 7, 0, 1, 2, 3}, {1, 2, 3, 0, 5, 6, 7, 4}),
                       doctest::Contains("nonzero genus"), Error);
  CHECK_THROWS_WITH_AS(decode_json(nlohmann::json{{"n", 2}, {"theta", {4, 7, 6, 5, 0, 3, 2, 1}},
                                                  {"rotation", {{0, 1, 2}, {3, 4, 5, 6, 7}}}}),
                       doctest::Contains("non-4-valent vertex"), Error);
}

TEST_CASE("face vectors of small catalog entries") {
  auto fv = face_vector(catalog(8, 6, "6-1"));
  CHECK(fv.count(3) == 8);
  CHECK(fv.count(4) == 0);
  CHECK(fv.i_value == 8);

  fv = face_vector(catalog(5, 3, "3-1"));
  CHECK(fv.count(2) == 3);
  CHECK(fv.count(3) == 2);
  CHECK(fv.i_value == 5);

  fv = face_vector(catalog(6, 4, "4-1"));
  CHECK(fv.count(2) == 2);
  CHECK(fv.count(3) == 4);
  CHECK(fv.i_value == 6);

  CHECK(is_i_hedrite(catalog(7, 7, "7-1")) == 7);
}

TEST_CASE("a map with a pentagon has no i value") {
  // The 5-cycle: two pentagonal faces.
  std::vector<Dart> theta(10), sigma(10);
  for (Dart v = 0; v < 5; ++v) {
    theta[2 * v] = 2 * ((v + 1) % 5) + 1;
    theta[2 * ((v + 1) % 5) + 1] = 2 * v;
    sigma[2 * v] = 2 * v + 1;
    sigma[2 * v + 1] = 2 * v;
  }
  PlaneGraph cycle(theta, sigma);
  CHECK(face_vector(cycle).count(5) == 2);
  CHECK(!face_vector(cycle).i_value);
  CHECK(!is_i_hedrite(cycle));
}

TEST_CASE("face sizes sum to the dart count and the curvature sum is 8") {
  for (const auto& r : testing::census15()) {
    const auto fv = face_vector(r.graph);
    int total = 0, curvature = 0;
    for (const auto& [k, c] : fv.p) {
      total += k * c;
      curvature += (4 - k) * c;
    }
    CHECK(total == 4 * r.n);
    CHECK(curvature == 8);
    CHECK(2 * fv.count(2) + fv.count(3) == 8);
  }
}

TEST_CASE("dual") {
  PlaneGraph d = dual(catalog(4, 2, "2-1"));
  CHECK(d.num_vertices() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(d.degree(v) == 2);

  const PlaneGraph& oct = catalog(8, 6, "6-1");
  PlaneGraph cube = dual(oct);
  CHECK(cube.num_vertices() == 8);
  CHECK(cube.num_faces() == 6);
  CHECK(is_isomorphic(dual(cube), oct));
}

TEST_CASE("medial") {
  CHECK(is_isomorphic(medial(catalog(8, 6, "6-1")), catalog(8, 12, "12-4")));
  CHECK(is_isomorphic(medial(catalog(4, 2, "2-1")), catalog(4, 4, "4-1")));
  CHECK(is_isomorphic(medial(catalog(5, 3, "3-1")), catalog(5, 6, "6-2")));
  for (const auto& r : testing::census15()) {
    if (r.n > 8) continue;
    PlaneGraph m = medial(r.graph);
    CHECK(m.num_vertices() == 2 * static_cast<std::size_t>(r.n));
    CHECK(m.is_four_valent());
    CHECK(is_isomorphic(m, medial(dual(r.graph))));
  }
}

TEST_CASE("canonical code invariance") {
  std::mt19937 rng(12345);
  for (const auto& r : testing::census15()) {
    if (r.n > 10) continue;
    std::vector<Dart> perm(r.graph.num_darts());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(relabel(r.graph, perm)) == r.canonical_code);
    CHECK(canonical_code(mirror(r.graph)) == r.canonical_code);
  }
  CHECK(!is_isomorphic(catalog(8, 12, "12-4"), catalog(8, 12, "12-5")));
}

TEST_CASE("dart-code and JSON round trips") {
  for (const auto& r : testing::census15()) {
    if (r.n > 9) continue;
    CHECK(canonical_code(decode(encode(r.graph))) == r.canonical_code);
    CHECK(canonical_code(decode(to_json(r.graph).dump())) == r.canonical_code);
  }
  std::istringstream mixed("# name=a\n2\n4 7 6 5 0 3 2 1\n0 1 2 3 4 5 6 7\n\n" +
                           to_json(catalog(5, 3, "3-1")).dump() + "\n" +
                           nlohmann::json{{"graph", to_json(catalog(8, 6, "6-1"))}}.dump() +
                           "\n");
  auto entries = read_stream(mixed);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].header.at("name") == "a");
  CHECK(entries[1].graph.num_vertices() == 3);
  CHECK(entries[2].graph.num_vertices() == 6);
}

}  // TEST_SUITE
