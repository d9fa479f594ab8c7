#pragma once

#include "hedrite/circuits.hpp"
#include "hedrite/plane_graph.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hedrite {

enum class Connectivity { one = 1, two = 2, three_or_more = 3 };

// Exhaustive cut-vertex / cut-pair search on the underlying simple graph.
// Graphs with at most 3 vertices and no cut vertex count as three_or_more.
Connectivity vertex_connectivity_class(const PlaneGraph& g);
std::string to_string(Connectivity c);

// A closed strip of 4-gons. step k enters faces[k] through entry[k] and leaves
// through the opposite side; the side edges lie on the two bounding circuits
// (indices into central_circuits(g)).
struct RailRoad {
  std::vector<FaceId> faces;
  std::vector<Dart> entry;
  bool self_intersecting = false;
  std::array<int, 2> bounding_circuits{-1, -1};
};

std::vector<RailRoad> rail_roads(const PlaneGraph& g);
bool is_irreducible(const PlaneGraph& g);

// Chain of 4-gons between two curved (2- or 3-gonal) faces, crossing opposite
// edges; `faces` holds the 4-gons only, so adjacent curved faces give an
// empty chain.
struct PseudoRoad {
  FaceId from = -1;
  FaceId to = -1;
  Dart from_dart = -1;  // dart of `from` on the first crossed edge
  Dart to_dart = -1;    // dart of `to` on the last crossed edge
  std::vector<FaceId> faces;
};

struct CurvatureGraph {
  std::vector<FaceId> nodes;
  std::vector<PseudoRoad> edges;

  int degree(FaceId f) const;
};

CurvatureGraph curvature_graph(const PlaneGraph& g);

// Sum of (4 - size) over a face region whose union is a closed disk, or over
// all faces (then 8). Throws if the region is not a disk.
int patch_curvature(const PlaneGraph& g, std::span<const FaceId> region);

// Number of boundary vertices of a disk region where the boundary turns
// instead of continuing straight along a central circuit.
int boundary_arc_count(const PlaneGraph& g, std::span<const FaceId> region);

// Connected face regions left after cutting along the edges of the given
// circuits (indices into central_circuits(g)).
std::vector<std::vector<FaceId>> cut_regions(const PlaneGraph& g, std::span<const int> circuits);

// The ring of 4-gons between two disjoint circuits, or nullopt if they meet.
std::optional<std::vector<FaceId>> separating_ring(const PlaneGraph& g, int c1, int c2);

enum class FamilyKind { none, I6, I5, I4, J4, K4 };

struct FamilyLabel {
  FamilyKind kind = FamilyKind::none;
  int m = 0;

  bool operator==(const FamilyLabel&) const = default;
};

std::string to_string(FamilyKind k);
std::string to_string(const FamilyLabel& f);

// I6: n = 2m, I5: n = 2m+1, I4: n = 2m+2, J4: n = 2m, K4: n = 4m; m >= 2.
PlaneGraph build_family(FamilyKind kind, int m);
FamilyLabel classify_family(const PlaneGraph& g);

struct TwoGonReport {
  bool adjacent_2gons = false;
  bool vertex_sharing_2gons = false;  // share a vertex but no edge
  std::string forced;                 // what the configuration forces, e.g. "J4(3)"
};

TwoGonReport two_gon_configuration(const PlaneGraph& g);

// The 4-hedrite with two central circuits: C1 visits positions 0..n-1, the
// second circuit crosses it with chords x <-> -1-x on the left and
// x <-> 2j-1-x on the right.
PlaneGraph build_4hedrite(int n, int j);

struct Shift {
  int n = 0;
  int j = 0;
};

Shift shift(const PlaneGraph& g);

}  // namespace hedrite
