#pragma once

#include "hedrite/circuits.hpp"
#include "hedrite/plane_graph.hpp"
#include "hedrite/structure.hpp"
#include "hedrite/symmetry.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hedrite {

// One isomorphism class, as produced by the generator.
struct Generated {
  CanonicalCode code;
  PlaneGraph graph;  // laid out so that its own labelling is the canonical one
};

// All i-hedrites with n vertices, one per isomorphism class (mirror images
// identified), sorted by canonical code. The serial version is the reference
// for the OpenMP one; `threads` <= 0 means "use the default".
std::vector<Generated> generate_serial(int i, int n);
std::vector<Generated> generate(int i, int n, int threads = 0);

// Worker count: HEDRITE_THREADS if set, else the OpenMP default.
int default_threads();

struct HedriteRecord {
  int i = 0;
  int n = 0;
  int local_id = 0;
  CanonicalCode canonical_code;
  PlaneGraph graph;
  PointGroup point_group = PointGroup::C1;
  CCVector cc_vector;
  bool irreducible = false;
  bool pure = false;
  bool balanced = false;
  bool three_connected = false;
  FamilyLabel family;
};

HedriteRecord make_record(const PlaneGraph& g, int local_id = 0);

std::vector<HedriteRecord> enumerate(int i, int n, int threads = 0);

// All i-hedrites with 2 <= n <= n_max, ordered by (n, i, local_id). The
// callback, if given, sees each (i, n) batch as soon as it is complete.
using CensusSink = std::function<void(int i, int n, const std::vector<HedriteRecord>&)>;
std::vector<HedriteRecord> full_census(int n_max, const CensusSink& sink = {}, int threads = 0);

// Header fields in the key=value form used by dart-code streams.
std::string record_header(const HedriteRecord& r);

}  // namespace hedrite
