#pragma once

#include "hedrite/circuits.hpp"
#include "hedrite/plane_graph.hpp"
#include "hedrite/structure.hpp"

#include <vector>

namespace hedrite {

struct Inflation {
  PlaneGraph graph;
  std::vector<Dart> origin;  // new dart -> dart of the input it copies
};

// Replaces circuit k by multiplicity[k] parallel copies (1 keeps it).
Inflation inflate(const PlaneGraph& g, const std::vector<int>& multiplicity);

PlaneGraph inflate_circuit(const PlaneGraph& g, int circuit, int t);
PlaneGraph inflate_circuit(const PlaneGraph& g, const CentralCircuit& c, int t);
PlaneGraph inflate_all(const PlaneGraph& g, int t);

// Removes a central circuit, splicing the circuits that crossed it.
PlaneGraph delete_circuit(const PlaneGraph& g, int circuit);

// Collapses a rail-road onto one central circuit.
PlaneGraph reduce(const PlaneGraph& g, const RailRoad& r);

PlaneGraph goldberg_coxeter(const PlaneGraph& g, int k, int l);

}  // namespace hedrite
