#pragma once

#include "hedrite/enumerate.hpp"
#include "hedrite/plane_graph.hpp"

#include <json.hpp>

namespace hedrite {

// Full analysis of one 4-valent map. Sections that need an i-hedrite are
// null for other maps.
nlohmann::json analyze(const PlaneGraph& g);

// Compact census record; "graph" decodes back to the same map.
nlohmann::json record_to_json(const HedriteRecord& r);

}  // namespace hedrite
