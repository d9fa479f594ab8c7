#include "hedrite/link_export.hpp"

#include "hedrite/circuits.hpp"

#include <algorithm>
#include <map>

namespace hedrite {

bool has_composite_cut(const PlaneGraph& g) {
  std::map<std::pair<FaceId, FaceId>, std::vector<Dart>> between;
  for (std::size_t x = 0; x < g.num_darts(); ++x) {
    Dart d = static_cast<Dart>(x);
    if (d > g.theta(d)) continue;
    std::pair<FaceId, FaceId> key = std::minmax(g.face_of(d), g.face_of(g.theta(d)));
    if (key.first != key.second) between[key].push_back(d);
  }
  for (const auto& [faces, edges] : between) {
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        auto removed = [&](Dart d) {
          for (Dart e : {edges[a], edges[b]}) {
            if (d == e || d == g.theta(e)) return true;
          }
          return false;
        };
        std::vector<char> seen(g.num_vertices(), 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
          VertexId v = stack.back();
          stack.pop_back();
          for (Dart d : g.darts_of(v)) {
            if (removed(d)) continue;
            VertexId w = g.vertex_of(g.theta(d));
            if (!seen[w]) {
              seen[w] = 1;
              ++reached;
              stack.push_back(w);
            }
          }
        }
        if (reached != g.num_vertices()) return true;
      }
    }
  }
  return false;
}

LinkDiagram to_link(const PlaneGraph& g) {
  auto colour = chess_colouring(g);
  const int shaded = colour[g.face_of(g.sigma(0))];
  LinkDiagram d;
  d.crossings = static_cast<int>(g.num_vertices());
  for (const auto& c : central_circuits(g)) {
    std::vector<Passage> strand;
    for (Dart x : c.darts) {
      strand.push_back({g.vertex_of(x), x, colour[g.face_of(g.sigma(x))] == shaded});
    }
    d.components.push_back(std::move(strand));
  }
  d.composite = has_composite_cut(g);
  return d;
}

bool is_alternating(const LinkDiagram& d) {
  std::map<VertexId, int> over_count, visits;
  for (const auto& strand : d.components) {
    for (std::size_t k = 0; k < strand.size(); ++k) {
      if (strand[k].over == strand[(k + 1) % strand.size()].over) return false;
      over_count[strand[k].crossing] += strand[k].over;
      ++visits[strand[k].crossing];
    }
  }
  for (const auto& [v, c] : visits) {
    if (c != 2 || over_count[v] != 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> gauss_code(const LinkDiagram& d) {
  std::map<VertexId, int> label;
  std::vector<std::vector<int>> out;
  for (const auto& strand : d.components) {
    std::vector<int> seq;
    for (const auto& p : strand) {
      auto [it, fresh] = label.emplace(p.crossing, static_cast<int>(label.size()) + 1);
      seq.push_back(p.over ? it->second : -it->second);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

std::string gauss_to_string(const std::vector<std::vector<int>>& code) {
  std::string s;
  for (std::size_t c = 0; c < code.size(); ++c) {
    if (c) s += " / ";
    for (std::size_t k = 0; k < code[c].size(); ++k) {
      if (k) s += ' ';
      s += (code[c][k] > 0 ? "+" : "") + std::to_string(code[c][k]);
    }
  }
  return s;
}

std::vector<int> dt_code(const LinkDiagram& d) {
  if (d.components.size() != 1) {
    throw Error("DT code needs a knot diagram, got " + std::to_string(d.components.size()) +
                " components");
  }
  const auto& strand = d.components.front();
  const int len = static_cast<int>(strand.size());
  std::vector<int> best_abs, best;
  for (int dir : {1, -1}) {
    for (int start = 0; start < len; ++start) {
      // label t+1 is the t-th visit in this traversal
      std::map<VertexId, std::vector<int>> visits;
      std::vector<bool> over(len + 1);
      for (int t = 0; t < len; ++t) {
        const auto& p = strand[((start + dir * t) % len + len) % len];
        visits[p.crossing].push_back(t + 1);
        over[t + 1] = p.over;
      }
      std::vector<int> code;
      for (int odd = 1; odd <= len; odd += 2) {
        const auto& pair = visits[strand[((start + dir * (odd - 1)) % len + len) % len].crossing];
        int even = pair[0] == odd ? pair[1] : pair[0];
        if (even % 2) throw Error("crossing visited twice with the same parity");
        code.push_back(over[even] ? -even : even);
      }
      if (!code.empty() && code.front() < 0) {
        for (int& x : code) x = -x;
      }
      std::vector<int> abs_code;
      for (int x : code) abs_code.push_back(std::abs(x));
      if (best.empty() || abs_code < best_abs || (abs_code == best_abs && code < best)) {
        best_abs = abs_code;
        best = code;
      }
    }
  }
  return best;
}

std::string dt_to_string(const std::vector<int>& code) {
  std::string s;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(code[k]);
  }
  return s;
}

}  // namespace hedrite
