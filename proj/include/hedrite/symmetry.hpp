#pragma once

#include "hedrite/plane_graph.hpp"

#include <string>
#include <vector>

namespace hedrite {

struct MapAutomorphism {
  std::vector<Dart> dart_permutation;
  bool orientation_preserving = true;
};

// The full automorphism group, reflections included. Each element is fixed by
// the image of dart 0 and its orientation behaviour.
std::vector<MapAutomorphism> automorphisms(const PlaneGraph& g);

enum class PointGroup {
  C1, Cs, Ci, C2, C2v, C2h, S4, D2, D2d, D2h, D3, D3h, D3d, D4, D4d, D4h, O, Oh
};

std::string to_string(PointGroup p);
PointGroup point_group_from_string(const std::string& s);
int order(PointGroup p);
const std::vector<PointGroup>& all_point_groups();

// Schoenflies label of Aut(g); throws for groups outside the list above.
PointGroup point_group(const PlaneGraph& g);

}  // namespace hedrite
