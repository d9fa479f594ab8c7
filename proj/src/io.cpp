#include "hedrite/io.hpp"

#include <fstream>
#include <sstream>

namespace hedrite {

namespace {

std::vector<long long> parse_ints(std::string_view line, const char* what) {
  std::vector<long long> out;
  std::istringstream ss{std::string(line)};
  std::string tok;
  while (ss >> tok) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw Error(std::string("malformed ") + what + ": token '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

PlaneGraph build(long long n, const std::vector<long long>& theta,
                 const std::vector<std::vector<long long>>& rotation) {
  if (n <= 0) throw Error("vertex count must be positive");
  const std::size_t darts = 4 * static_cast<std::size_t>(n);
  if (theta.size() != darts) {
    throw Error("malformed permutation theta: expected " + std::to_string(darts) + " entries, got " +
                std::to_string(theta.size()));
  }
  if (rotation.size() != static_cast<std::size_t>(n)) {
    throw Error("rotation lists " + std::to_string(rotation.size()) + " vertices, expected " +
                std::to_string(n));
  }
  std::vector<Dart> th(darts), sigma(darts, -1), owner(darts, -1);
  for (std::size_t d = 0; d < darts; ++d) {
    if (theta[d] < 0 || theta[d] >= static_cast<long long>(darts)) {
      throw Error("malformed permutation theta: dart " + std::to_string(d) + " maps to " +
                  std::to_string(theta[d]));
    }
    th[d] = static_cast<Dart>(theta[d]);
  }
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    const auto& r = rotation[v];
    if (r.size() != 4) {
      throw Error("non-4-valent vertex " + std::to_string(v) + ": " + std::to_string(r.size()) +
                  " darts");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      long long d = r[k];
      if (d < 0 || d >= static_cast<long long>(darts)) {
        throw Error("malformed permutation rotation: dart " + std::to_string(d) + " out of range");
      }
      if (owner[d] >= 0) {
        throw Error("malformed permutation rotation: dart " + std::to_string(d) + " listed twice");
      }
      owner[d] = static_cast<Dart>(v);
      sigma[d] = static_cast<Dart>(r[(k + 1) % 4]);
    }
  }
  for (std::size_t d = 0; d < darts; ++d) {
    if (th[d] == static_cast<Dart>(d) || th[th[d]] != static_cast<Dart>(d)) {
      throw Error("non-involutive pairing at dart " + std::to_string(d));
    }
    if (owner[d] == owner[th[d]]) {
      throw Error("loop at vertex " + std::to_string(owner[d]) + " (dart " + std::to_string(d) + ")");
    }
  }
  return PlaneGraph(std::move(th), std::move(sigma));
}

std::vector<std::vector<long long>> split_rotation(const std::vector<long long>& flat) {
  if (flat.size() % 4 != 0) {
    throw Error("non-4-valent vertex: rotation length " + std::to_string(flat.size()) +
                " is not a multiple of 4");
  }
  std::vector<std::vector<long long>> out;
  for (std::size_t i = 0; i < flat.size(); i += 4) out.emplace_back(flat.begin() + i, flat.begin() + i + 4);
  return out;
}

bool starts_json(std::string_view s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

}  // namespace

PlaneGraph decode_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("graph") && !j.contains("theta")) return decode_json(j["graph"]);
  if (!j.is_object() || !j.contains("n") || !j.contains("theta") || !j.contains("rotation")) {
    throw Error("JSON graph needs fields n, theta, rotation");
  }
  try {
    long long n = j.at("n").get<long long>();
    auto theta = j.at("theta").get<std::vector<long long>>();
    const auto& rot = j.at("rotation");
    std::vector<std::vector<long long>> rotation;
    if (!rot.empty() && rot.front().is_array()) {
      rotation = rot.get<std::vector<std::vector<long long>>>();
    } else {
      rotation = split_rotation(rot.get<std::vector<long long>>());
    }
    return build(n, theta, rotation);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed JSON graph: ") + e.what());
  }
}

PlaneGraph decode(std::string_view text) {
  if (starts_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("malformed JSON: ") + e.what());
    }
    return decode_json(j);
  }
  std::vector<std::string> lines;
  std::istringstream ss{std::string(text)};
  std::string line;
  while (std::getline(ss, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t\r")] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() != 3) {
    throw Error("dart-code needs 3 non-empty lines, got " + std::to_string(lines.size()));
  }
  auto head = parse_ints(lines[0], "vertex count");
  if (head.size() != 1) throw Error("first line must hold the vertex count only");
  return build(head[0], parse_ints(lines[1], "theta"),
               split_rotation(parse_ints(lines[2], "rotation")));
}

std::string encode(const PlaneGraph& g) {
  if (!g.is_four_valent()) throw Error("dart-code needs a 4-valent graph");
  std::ostringstream out;
  out << g.num_vertices() << '\n';
  for (std::size_t d = 0; d < g.num_darts(); ++d) {
    if (d) out << ' ';
    out << g.theta(static_cast<Dart>(d));
  }
  out << '\n';
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (Dart d : g.darts_of(static_cast<VertexId>(v))) {
      if (v || d != g.darts_of(0).front()) out << ' ';
      out << d;
    }
  }
  out << '\n';
  return out.str();
}

nlohmann::json to_json(const PlaneGraph& g) {
  nlohmann::json rotation = nlohmann::json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto span = g.darts_of(static_cast<VertexId>(v));
    rotation.push_back(std::vector<Dart>(span.begin(), span.end()));
  }
  return {{"n", g.num_vertices()}, {"theta", g.theta_perm()}, {"rotation", rotation}};
}

std::vector<StreamEntry> read_stream(std::istream& in) {
  std::vector<StreamEntry> out;
  std::map<std::string, std::string> header;
  std::vector<std::string> block;
  std::string line;
  auto flush_block = [&]() {
    if (block.empty()) return;
    std::string text;
    for (const auto& l : block) text += l + '\n';
    out.push_back({std::move(header), decode(text)});
    header.clear();
    block.clear();
  };
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      flush_block();
      std::istringstream hs(line.substr(first + 1));
      std::string tok;
      while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq != std::string::npos) header[tok.substr(0, eq)] = tok.substr(eq + 1);
      }
      continue;
    }
    if (line[first] == '{') {
      flush_block();
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed JSON line: ") + e.what());
      }
      const nlohmann::json& gj = j.contains("graph") ? j["graph"] : j;
      std::map<std::string, std::string> fields = std::move(header);
      header.clear();
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "graph") continue;
        fields[it.key()] = it->is_string() ? it->get<std::string>() : it->dump();
      }
      out.push_back({std::move(fields), decode_json(gj)});
      continue;
    }
    block.push_back(line);
    if (block.size() == 3) flush_block();
  }
  if (!block.empty()) throw Error("truncated dart-code block at end of stream");
  return out;
}

std::vector<StreamEntry> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_stream(in);
}

}  // namespace hedrite
