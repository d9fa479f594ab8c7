#include "hedrite/circuits.hpp"

#include <algorithm>
#include <map>

namespace hedrite {

namespace {

Dart psi(const PlaneGraph& g, Dart d) { return g.opposite(g.theta(d)); }

void require_four_valent(const PlaneGraph& g) {
  if (!g.is_four_valent()) throw Error("central circuits need a 4-valent graph");
}

}  // namespace

std::string format_multiset(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (!s.empty()) s += ',';
    s += std::to_string(values[i]);
    if (j - i > 1) s += '^' + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::vector<CentralCircuit> central_circuits(const PlaneGraph& g) {
  require_four_valent(g);
  std::vector<CentralCircuit> out;
  std::vector<char> seen(g.num_darts(), 0);
  for (std::size_t s = 0; s < g.num_darts(); ++s) {
    if (seen[s]) continue;
    CentralCircuit c;
    Dart d = static_cast<Dart>(s);
    do {
      c.darts.push_back(d);
      d = psi(g, d);
    } while (d != static_cast<Dart>(s));
    for (Dart x : c.darts) {
      if (seen[x] || seen[g.theta(x)]) throw Error("central circuit meets its own reversal");
      seen[x] = 1;
      seen[g.theta(x)] = 1;
    }
    c.length = static_cast<int>(c.darts.size());
    std::vector<int> visits(g.num_vertices(), 0);
    for (Dart x : c.darts) ++visits[g.vertex_of(x)];
    c.self_intersections = static_cast<int>(std::count(visits.begin(), visits.end(), 2));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> circuit_index(const PlaneGraph& g, const std::vector<CentralCircuit>& cs) {
  std::vector<int> idx(g.num_darts(), -1);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (Dart d : cs[k].darts) {
      idx[d] = static_cast<int>(k);
      idx[g.theta(d)] = static_cast<int>(k);
    }
  }
  return idx;
}

std::string CCVector::to_string() const {
  return format_multiset(simple) + ';' + format_multiset(self_intersecting);
}

CCVector cc_vector(const PlaneGraph& g) {
  CCVector v;
  for (const auto& c : central_circuits(g)) {
    (c.self_intersections > 0 ? v.self_intersecting : v.simple).push_back(c.length);
  }
  std::sort(v.simple.begin(), v.simple.end());
  std::sort(v.self_intersecting.begin(), v.self_intersecting.end());
  return v;
}

std::string IntersectionVector::to_string() const {
  return '(' + std::to_string(c0) + ';' + format_multiset(others) + ')';
}

std::vector<std::vector<int>> intersection_matrix(const PlaneGraph& g,
                                                  const std::vector<CentralCircuit>& cs) {
  auto idx = circuit_index(g, cs);
  std::vector<std::vector<int>> m(cs.size(), std::vector<int>(cs.size(), 0));
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto darts = g.darts_of(static_cast<VertexId>(v));
    int a = idx[darts[0]], b = idx[darts[1]];
    if (a != b) {
      ++m[a][b];
      ++m[b][a];
    }
  }
  return m;
}

std::vector<IntersectionVector> intersection_vectors(const PlaneGraph& g) {
  auto cs = central_circuits(g);
  auto m = intersection_matrix(g, cs);
  std::vector<IntersectionVector> out;
  for (std::size_t a = 0; a < cs.size(); ++a) {
    IntersectionVector iv;
    iv.c0 = cs[a].self_intersections;
    for (std::size_t b = 0; b < cs.size(); ++b) {
      if (b != a) iv.others.push_back(m[a][b]);
    }
    std::sort(iv.others.rbegin(), iv.others.rend());
    out.push_back(std::move(iv));
  }
  return out;
}

IntersectionVector intersection_vector(const PlaneGraph& g, const CentralCircuit& c) {
  auto cs = central_circuits(g);
  if (!c.darts.empty() && static_cast<std::size_t>(c.darts.front()) < g.num_darts()) {
    auto idx = circuit_index(g, cs);
    int k = idx[c.darts.front()];
    std::vector<Dart> mine = c.darts, fwd = cs[k].darts, rev;
    for (Dart d : fwd) rev.push_back(g.theta(d));
    std::sort(mine.begin(), mine.end());
    std::sort(fwd.begin(), fwd.end());
    std::sort(rev.begin(), rev.end());
    if (mine == fwd || mine == rev) return intersection_vectors(g)[k];
  }
  throw Error("circuit does not belong to this graph");
}

bool is_pure(const PlaneGraph& g) {
  for (const auto& c : central_circuits(g)) {
    if (c.self_intersections > 0) return false;
  }
  return true;
}

bool is_balanced(const PlaneGraph& g) {
  auto cs = central_circuits(g);
  auto ivs = intersection_vectors(g);
  std::map<int, IntersectionVector> by_length;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    auto [it, fresh] = by_length.emplace(cs[k].length, ivs[k]);
    if (!fresh && it->second != ivs[k]) return false;
  }
  return true;
}

std::vector<int> chess_colouring(const PlaneGraph& g) {
  std::vector<int> colour(g.num_faces(), -1);
  std::vector<FaceId> stack{0};
  colour[0] = 0;
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (Dart d : g.face(f)) {
      FaceId h = g.face_of(g.theta(d));
      if (colour[h] < 0) {
        colour[h] = 1 - colour[f];
        stack.push_back(h);
      } else if (colour[h] == colour[f]) {
        throw Error("faces are not 2-colourable");
      }
    }
  }
  return colour;
}

std::vector<int> class_bipartition(const PlaneGraph& g, bool reverse, int shaded) {
  auto cs = central_circuits(g);
  if (cs.size() != 1) {
    throw Error("class bipartition needs exactly one central circuit, got " +
                std::to_string(cs.size()));
  }
  std::vector<char> outgoing(g.num_darts(), 0);
  for (Dart d : cs[0].darts) outgoing[reverse ? g.theta(d) : d] = 1;
  auto colour = chess_colouring(g);
  std::vector<int> cls(g.num_vertices(), 0);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (Dart x : g.darts_of(static_cast<VertexId>(v))) {
      Dart y = g.sigma(x);
      if (colour[g.face_of(y)] != shaded) continue;
      cls[v] = outgoing[x] == outgoing[y] ? 1 : 2;
      break;
    }
  }
  return cls;
}

}  // namespace hedrite
