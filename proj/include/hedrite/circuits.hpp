#pragma once

#include "hedrite/plane_graph.hpp"

#include <string>
#include <vector>

namespace hedrite {

// A central circuit as the cyclic sequence of darts leaving its vertices.
// Successor: psi(d) = sigma^2(theta(d)), i.e. walk along d, then leave the
// reached vertex by the edge opposite the one we came in on. The reversed
// traversal is the theta-image of `darts`.
struct CentralCircuit {
  std::vector<Dart> darts;
  int length = 0;
  int self_intersections = 0;

  bool operator==(const CentralCircuit&) const = default;
};

// Circuits ordered by their least dart; `darts` starts with that dart.
std::vector<CentralCircuit> central_circuits(const PlaneGraph& g);

// circuit_of[d] = index into central_circuits(g) of the circuit through edge(d).
std::vector<int> circuit_index(const PlaneGraph& g, const std::vector<CentralCircuit>& cs);

// Lengths sorted increasingly.
struct CCVector {
  std::vector<int> simple;
  std::vector<int> self_intersecting;

  bool operator==(const CCVector&) const = default;
  auto operator<=>(const CCVector&) const = default;
  std::string to_string() const;  // e.g. "4,6^2;" or ";8"
};

CCVector cc_vector(const PlaneGraph& g);

// others: intersection sizes with every other circuit (zeros included), decreasing.
struct IntersectionVector {
  int c0 = 0;
  std::vector<int> others;

  bool operator==(const IntersectionVector&) const = default;
  auto operator<=>(const IntersectionVector&) const = default;
  std::string to_string() const;  // e.g. "(0;2^2)"
};

IntersectionVector intersection_vector(const PlaneGraph& g, const CentralCircuit& c);
std::vector<IntersectionVector> intersection_vectors(const PlaneGraph& g);

// Number of vertices where circuits a and b cross (a != b).
std::vector<std::vector<int>> intersection_matrix(const PlaneGraph& g,
                                                  const std::vector<CentralCircuit>& cs);

bool is_pure(const PlaneGraph& g);
bool is_balanced(const PlaneGraph& g);

// Proper 2-colouring of the faces of a 4-valent plane graph (0/1 per face),
// face 0 gets colour 0.
std::vector<int> chess_colouring(const PlaneGraph& g);

// Class I (1) / Class II (2) label per vertex for a graph with one central
// circuit. The circuit is oriented from its least dart; the corner examined
// at each vertex is the one whose face has colour `shaded`. `reverse` walks
// the circuit the other way.
std::vector<int> class_bipartition(const PlaneGraph& g, bool reverse = false, int shaded = 0);

std::string format_multiset(const std::vector<int>& values);  // "a^k,b" in the given order

}  // namespace hedrite
