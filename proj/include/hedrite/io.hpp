#pragma once

#include "hedrite/plane_graph.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hedrite {

// Dart-code text:
//   n
//   theta(0) theta(1) ... theta(4n-1)
//   r(0) r(1) ... r(4n-1)      positions 4v..4v+3 hold the darts of v, ccw
// A JSON object {"n":..., "theta":[...], "rotation":[...]} is accepted as well;
// "rotation" may be flat or a list of per-vertex lists. A census record
// carrying the graph under "graph" decodes to that graph.
PlaneGraph decode(std::string_view text);
PlaneGraph decode_json(const nlohmann::json& j);

// Requires a 4-valent graph. Vertices keep their numbering.
std::string encode(const PlaneGraph& g);
nlohmann::json to_json(const PlaneGraph& g);

// One graph of a stream plus the key=value pairs of its '#' header lines.
struct StreamEntry {
  std::map<std::string, std::string> header;
  PlaneGraph graph;
};

// Reads any mix of dart-code blocks and JSON lines. A JSON line may either
// be a bare graph object or carry the graph under "graph".
std::vector<StreamEntry> read_stream(std::istream& in);
std::vector<StreamEntry> read_file(const std::string& path);

}  // namespace hedrite
