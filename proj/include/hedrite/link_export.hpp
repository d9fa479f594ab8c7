#pragma once

#include "hedrite/plane_graph.hpp"

#include <string>
#include <vector>

namespace hedrite {

// One visit of a strand to a crossing.
struct Passage {
  VertexId crossing = -1;
  Dart dart = -1;  // dart leaving the crossing along the strand
  bool over = false;
};

// Alternating diagram with one component per central circuit. The faces are
// chess-coloured; a strand passes over where the corner to its left, between
// its outgoing dart and the next one ccw, is shaded. The shading is chosen so
// that dart 0 passes over.
struct LinkDiagram {
  std::vector<std::vector<Passage>> components;
  int crossings = 0;
  bool composite = false;
};

LinkDiagram to_link(const PlaneGraph& g);

bool is_alternating(const LinkDiagram& d);

// Signed 1-based crossing labels in order of first appearance; + over, - under.
std::vector<std::vector<int>> gauss_code(const LinkDiagram& d);
std::string gauss_to_string(const std::vector<std::vector<int>>& code);

// Dowker-Thistlethwaite code of a knot diagram, minimised over start,
// direction and mirror image. Even entries are negative where the even visit
// passes over.
std::vector<int> dt_code(const LinkDiagram& d);
std::string dt_to_string(const std::vector<int>& code);

// Two edges bounding the same pair of faces whose removal splits the graph.
bool has_composite_cut(const PlaneGraph& g);

}  // namespace hedrite
