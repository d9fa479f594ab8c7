#include "hedrite/structure.hpp"

#include "hedrite/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace hedrite {

// ---------------------------------------------------------------- connectivity

namespace {

std::vector<std::vector<VertexId>> simple_adjacency(const PlaneGraph& g) {
  std::vector<std::set<VertexId>> nb(g.num_vertices());
  for (std::size_t d = 0; d < g.num_darts(); ++d) {
    VertexId u = g.vertex_of(static_cast<Dart>(d));
    VertexId v = g.vertex_of(g.theta(static_cast<Dart>(d)));
    if (u != v) nb[u].insert(v);
  }
  std::vector<std::vector<VertexId>> out;
  for (auto& s : nb) out.emplace_back(s.begin(), s.end());
  return out;
}

bool connected_without(const std::vector<std::vector<VertexId>>& adj, VertexId r1, VertexId r2) {
  const std::size_t n = adj.size();
  std::vector<char> seen(n, 0);
  if (r1 >= 0) seen[r1] = 1;
  if (r2 >= 0) seen[r2] = 1;
  std::size_t left = n - (r1 >= 0) - (r2 >= 0 && r2 != r1);
  if (left == 0) return true;
  VertexId start = 0;
  while (seen[start]) ++start;
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == left;
}

}  // namespace

Connectivity vertex_connectivity_class(const PlaneGraph& g) {
  auto adj = simple_adjacency(g);
  const auto n = static_cast<VertexId>(adj.size());
  for (VertexId v = 0; v < n; ++v) {
    if (!connected_without(adj, v, -1)) return Connectivity::one;
  }
  if (n <= 3) return Connectivity::three_or_more;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!connected_without(adj, u, v)) return Connectivity::two;
    }
  }
  return Connectivity::three_or_more;
}

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::one: return "1";
    case Connectivity::two: return "2";
    default: return ">=3";
  }
}

// ------------------------------------------------------------------- strips

namespace {

Dart face_dart(const PlaneGraph& g, Dart x, int steps) {
  auto f = g.face(g.face_of(x));
  int k = (g.index_in_face(x) + steps) % static_cast<int>(f.size());
  return f[k];
}

bool is_quad(const PlaneGraph& g, FaceId f) { return g.face_size(f) == 4; }
bool is_curved(const PlaneGraph& g, FaceId f) { return g.face_size(f) < 4; }

}  // namespace

std::vector<RailRoad> rail_roads(const PlaneGraph& g) {
  auto cs = central_circuits(g);
  auto cidx = circuit_index(g, cs);
  std::vector<std::array<char, 2>> visited(g.num_faces(), {0, 0});
  std::vector<RailRoad> out;
  for (std::size_t fi = 0; fi < g.num_faces(); ++fi) {
    FaceId f0 = static_cast<FaceId>(fi);
    if (!is_quad(g, f0)) continue;
    for (int parity = 0; parity < 2; ++parity) {
      if (visited[f0][parity]) continue;
      RailRoad r;
      Dart start = g.face(f0)[parity];
      Dart x = start;
      bool closed = false;
      while (true) {
        FaceId f = g.face_of(x);
        visited[f][g.index_in_face(x) % 2] = 1;
        r.faces.push_back(f);
        r.entry.push_back(x);
        Dart next = g.theta(face_dart(g, x, 2));
        if (!is_quad(g, g.face_of(next))) break;
        if (next == start) {
          closed = true;
          break;
        }
        x = next;
      }
      if (!closed) continue;
      std::set<int> left, right;
      for (Dart e : r.entry) {
        left.insert(cidx[face_dart(g, e, 1)]);
        right.insert(cidx[face_dart(g, e, 3)]);
      }
      if (left.size() != 1 || right.size() != 1 || *left.begin() == *right.begin()) {
        throw Error("rail-road sides do not follow two distinct central circuits");
      }
      r.bounding_circuits = {*left.begin(), *right.begin()};
      std::vector<FaceId> sorted = r.faces;
      std::sort(sorted.begin(), sorted.end());
      r.self_intersecting = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool is_irreducible(const PlaneGraph& g) { return rail_roads(g).empty(); }

int CurvatureGraph::degree(FaceId f) const {
  int d = 0;
  for (const auto& e : edges) d += (e.from == f) + (e.to == f);
  return d;
}

CurvatureGraph curvature_graph(const PlaneGraph& g) {
  CurvatureGraph cg;
  std::set<std::pair<Dart, Dart>> seen;
  for (std::size_t fi = 0; fi < g.num_faces(); ++fi) {
    FaceId f = static_cast<FaceId>(fi);
    if (!is_curved(g, f)) continue;
    cg.nodes.push_back(f);
    for (Dart x : g.face(f)) {
      PseudoRoad road;
      road.from = f;
      road.from_dart = x;
      Dart y = g.theta(x);
      std::size_t guard = 0;
      while (is_quad(g, g.face_of(y))) {
        road.faces.push_back(g.face_of(y));
        y = g.theta(face_dart(g, y, 2));
        if (++guard > g.num_darts()) throw Error("pseudo-road does not terminate");
      }
      road.to = g.face_of(y);
      road.to_dart = y;
      auto key = std::minmax(x, y);
      if (!seen.insert(key).second) continue;
      cg.edges.push_back(std::move(road));
    }
  }
  return cg;
}

// -------------------------------------------------------------------- patches

namespace {

struct DiskBoundary {
  bool whole_sphere = false;
  std::vector<Dart> darts;  // boundary darts of region faces, in walking order
};

DiskBoundary disk_boundary(const PlaneGraph& g, std::span<const FaceId> region) {
  if (region.empty()) throw Error("region is empty");
  std::vector<char> in(g.num_faces(), 0);
  for (FaceId f : region) {
    if (f < 0 || static_cast<std::size_t>(f) >= g.num_faces()) throw Error("face id out of range");
    in[f] = 1;
  }
  DiskBoundary out;
  std::size_t count = std::count(in.begin(), in.end(), 1);
  if (count == g.num_faces()) {
    out.whole_sphere = true;
    return out;
  }
  auto boundary = [&](Dart d) { return in[g.face_of(d)] && !in[g.face_of(g.theta(d))]; };

  // Faces connected through interior edges.
  std::vector<char> seen(g.num_faces(), 0);
  std::vector<FaceId> stack{region[0]};
  seen[region[0]] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (Dart d : g.face(f)) {
      FaceId h = g.face_of(g.theta(d));
      if (in[h] && !seen[h]) {
        seen[h] = 1;
        ++reached;
        stack.push_back(h);
      }
    }
  }
  if (reached != count) throw Error("region is not a disk: faces are not connected");

  // Euler characteristic of the closed region.
  std::set<VertexId> verts;
  std::set<std::pair<Dart, Dart>> edges;
  for (FaceId f : region) {
    for (Dart d : g.face(f)) {
      verts.insert(g.vertex_of(d));
      edges.insert(std::minmax(d, g.theta(d)));
    }
  }
  long chi = static_cast<long>(verts.size()) - static_cast<long>(edges.size()) + static_cast<long>(count);
  if (chi != 1) throw Error("region is not a disk: Euler characteristic " + std::to_string(chi));

  // Boundary: every vertex carries 0 or 2 boundary edges, and they form one cycle.
  std::vector<int> per_vertex(g.num_vertices(), 0);
  std::vector<Dart> all;
  for (std::size_t x = 0; x < g.num_darts(); ++x) {
    Dart d = static_cast<Dart>(x);
    if (boundary(d)) {
      all.push_back(d);
      ++per_vertex[g.vertex_of(d)];
      ++per_vertex[g.vertex_of(g.theta(d))];
    }
  }
  for (int c : per_vertex) {
    if (c != 0 && c != 2) throw Error("region is not a disk: boundary is not a simple cycle");
  }
  Dart d = all.front();
  do {
    out.darts.push_back(d);
    Dart c = g.sigma(g.theta(d));
    while (!boundary(c)) c = g.sigma(c);
    d = c;
  } while (d != all.front() && out.darts.size() <= all.size());
  if (out.darts.size() != all.size()) {
    throw Error("region is not a disk: boundary has several components");
  }
  return out;
}

}  // namespace

int patch_curvature(const PlaneGraph& g, std::span<const FaceId> region) {
  disk_boundary(g, region);
  std::set<FaceId> unique(region.begin(), region.end());
  int c = 0;
  for (FaceId f : unique) c += 4 - static_cast<int>(g.face_size(f));
  return c;
}

int boundary_arc_count(const PlaneGraph& g, std::span<const FaceId> region) {
  auto b = disk_boundary(g, region);
  if (b.whole_sphere) return 0;
  int q = 0;
  for (std::size_t k = 0; k < b.darts.size(); ++k) {
    Dart in = b.darts[k];
    Dart out = b.darts[(k + 1) % b.darts.size()];
    if (out != g.opposite(g.theta(in))) ++q;
  }
  return q;
}

std::vector<std::vector<FaceId>> cut_regions(const PlaneGraph& g, std::span<const int> circuits) {
  auto cs = central_circuits(g);
  auto cidx = circuit_index(g, cs);
  std::vector<char> cut(cs.size(), 0);
  for (int c : circuits) {
    if (c < 0 || static_cast<std::size_t>(c) >= cs.size()) throw Error("circuit index out of range");
    cut[c] = 1;
  }
  std::vector<int> comp(g.num_faces(), -1);
  std::vector<std::vector<FaceId>> out;
  for (std::size_t s = 0; s < g.num_faces(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<FaceId> region;
    std::vector<FaceId> stack{static_cast<FaceId>(s)};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      region.push_back(f);
      for (Dart d : g.face(f)) {
        if (cut[cidx[d]]) continue;
        FaceId h = g.face_of(g.theta(d));
        if (comp[h] < 0) {
          comp[h] = comp[s];
          stack.push_back(h);
        }
      }
    }
    std::sort(region.begin(), region.end());
    out.push_back(std::move(region));
  }
  return out;
}

std::optional<std::vector<FaceId>> separating_ring(const PlaneGraph& g, int c1, int c2) {
  auto cs = central_circuits(g);
  if (c1 == c2 || c1 < 0 || c2 < 0 || static_cast<std::size_t>(std::max(c1, c2)) >= cs.size()) {
    throw Error("separating_ring needs two distinct circuits of the graph");
  }
  auto m = intersection_matrix(g, cs);
  if (m[c1][c2] > 0) return std::nullopt;
  if (cs[c1].self_intersections > 0 || cs[c2].self_intersections > 0) {
    throw Error("disjoint central circuits must be simple");
  }
  auto cidx = circuit_index(g, cs);
  int pair[2] = {c1, c2};
  std::vector<FaceId> ring;
  int rings = 0;
  for (const auto& region : cut_regions(g, pair)) {
    bool touches1 = false, touches2 = false;
    for (FaceId f : region) {
      for (Dart d : g.face(f)) {
        touches1 |= cidx[d] == c1;
        touches2 |= cidx[d] == c2;
      }
    }
    if (touches1 && touches2) {
      ++rings;
      ring = region;
    }
  }
  if (rings != 1) throw Error("expected exactly one region between two disjoint circuits");
  for (FaceId f : ring) {
    if (!is_quad(g, f)) throw Error("region between disjoint circuits holds a non-4-gon");
  }
  return ring;
}

// -------------------------------------------------------------------- families

namespace {

// Plane map from vertex positions and the departure angle of every edge end;
// the rotation at each vertex is the counterclockwise angular order.
class MapBuilder {
 public:
  int add_vertex(double x, double y) {
    pos_.push_back({x, y});
    return static_cast<int>(pos_.size()) - 1;
  }
  double direction(int u, int v) const {
    return std::atan2(pos_[v][1] - pos_[u][1], pos_[v][0] - pos_[u][0]) * 180.0 / M_PI;
  }
  void edge(int u, double au, int v, double av) { ends_.push_back({u, au, v, av}); }
  void segment(int u, int v, double offset = 0) {
    edge(u, direction(u, v) + offset, v, direction(v, u) - offset);
  }
  PlaneGraph build() const {
    const std::size_t darts = 2 * ends_.size();
    std::vector<Dart> theta(darts), sigma(darts);
    std::vector<std::vector<std::pair<double, Dart>>> around(pos_.size());
    auto norm = [](double a) {
      a = std::fmod(a, 360.0);
      return a < 0 ? a + 360.0 : a;
    };
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      Dart a = static_cast<Dart>(2 * e), b = a + 1;
      theta[a] = b;
      theta[b] = a;
      around[ends_[e].u].push_back({norm(ends_[e].au), a});
      around[ends_[e].v].push_back({norm(ends_[e].av), b});
    }
    for (auto& list : around) {
      std::sort(list.begin(), list.end());
      for (std::size_t k = 0; k < list.size(); ++k) {
        sigma[list[k].second] = list[(k + 1) % list.size()].second;
      }
    }
    return PlaneGraph(std::move(theta), std::move(sigma));
  }

 private:
  struct End {
    int u;
    double au;
    int v;
    double av;
  };
  std::vector<std::array<double, 2>> pos_;
  std::vector<End> ends_;
};

enum class Cap { bowtie, double_edge };

// m nested pairs joined by complete bipartite links, capped at both ends.
PlaneGraph capped_rhombi(int m, Cap inner, Cap outer) {
  MapBuilder b;
  std::vector<std::array<int, 2>> pairs;
  for (int k = 1; k <= m; ++k) {
    if (k % 2) {
      pairs.push_back({b.add_vertex(-k, 0), b.add_vertex(k, 0)});
    } else {
      pairs.push_back({b.add_vertex(0, k), b.add_vertex(0, -k)});
    }
  }
  for (int k = 0; k + 1 < m; ++k) {
    for (int p : pairs[k]) {
      for (int q : pairs[k + 1]) b.segment(p, q);
    }
  }
  auto [a1, b1] = pairs.front();
  if (inner == Cap::double_edge) {
    b.segment(a1, b1, 20);
    b.segment(a1, b1, -20);
  } else {
    int c = b.add_vertex(0, 0);
    for (int p : {a1, b1}) {
      b.segment(c, p, 5);
      b.segment(c, p, -5);
    }
  }
  auto [am, bm] = pairs.back();
  if (outer == Cap::double_edge) {
    double base = b.direction(am, bm), back = b.direction(bm, am);
    b.edge(am, base + 100, bm, back - 100);
    b.edge(am, base + 120, bm, back - 120);
  } else {
    double rad = b.direction(am, bm) * M_PI / 180.0 + M_PI / 2;
    int c = b.add_vertex(3.0 * m * std::cos(rad), 3.0 * m * std::sin(rad));
    for (int p : {am, bm}) {
      b.segment(c, p, 5);
      b.segment(c, p, -5);
    }
  }
  return b.build();
}

PlaneGraph family_graph(FamilyKind kind, int m) {
  switch (kind) {
    case FamilyKind::I6: return capped_rhombi(m, Cap::double_edge, Cap::double_edge);
    case FamilyKind::I5: return capped_rhombi(m, Cap::bowtie, Cap::double_edge);
    case FamilyKind::I4: return capped_rhombi(m, Cap::bowtie, Cap::bowtie);
    case FamilyKind::J4: return inflate_circuit(build_4hedrite(2, 0), 0, m);
    case FamilyKind::K4: return inflate_circuit(build_4hedrite(4, 1), 0, m);
    default: throw Error("no family graph for kind none");
  }
}

bool matches(const PlaneGraph& g, FamilyKind kind, int m) {
  if (m < 1) return false;
  return is_isomorphic(g, family_graph(kind, m));
}

}  // namespace

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::I6: return "I6";
    case FamilyKind::I5: return "I5";
    case FamilyKind::I4: return "I4";
    case FamilyKind::J4: return "J4";
    case FamilyKind::K4: return "K4";
    default: return "none";
  }
}

std::string to_string(const FamilyLabel& f) {
  if (f.kind == FamilyKind::none) return "none";
  return to_string(f.kind) + "(" + std::to_string(f.m) + ")";
}

PlaneGraph build_family(FamilyKind kind, int m) {
  if (kind == FamilyKind::none) throw Error("cannot build family 'none'");
  if (m < 2) throw Error("family parameter m must be at least 2, got " + std::to_string(m));
  return family_graph(kind, m);
}

FamilyLabel classify_family(const PlaneGraph& g) {
  auto i = is_i_hedrite(g);
  if (!i) return {};
  const int n = static_cast<int>(g.num_vertices());
  std::vector<FamilyLabel> candidates;
  if (*i == 6 && n % 2 == 0) candidates.push_back({FamilyKind::I6, n / 2});
  if (*i == 5 && n % 2 == 1) candidates.push_back({FamilyKind::I5, (n - 1) / 2});
  if (*i == 4 && n % 2 == 0) {
    candidates.push_back({FamilyKind::I4, (n - 2) / 2});
    candidates.push_back({FamilyKind::J4, n / 2});
  }
  if (*i == 4 && n % 4 == 0) candidates.push_back({FamilyKind::K4, n / 4});
  for (const auto& f : candidates) {
    if (f.m >= 2 && matches(g, f.kind, f.m)) return f;
  }
  return {};
}

TwoGonReport two_gon_configuration(const PlaneGraph& g) {
  TwoGonReport r;
  std::vector<FaceId> digons;
  for (std::size_t f = 0; f < g.num_faces(); ++f) {
    if (g.face_size(static_cast<FaceId>(f)) == 2) digons.push_back(static_cast<FaceId>(f));
  }
  for (std::size_t a = 0; a < digons.size(); ++a) {
    for (std::size_t b = a + 1; b < digons.size(); ++b) {
      bool edge = false, vertex = false;
      for (Dart x : g.face(digons[a])) {
        edge |= g.face_of(g.theta(x)) == digons[b];
        for (Dart y : g.face(digons[b])) vertex |= g.vertex_of(x) == g.vertex_of(y);
      }
      r.adjacent_2gons |= edge;
      r.vertex_sharing_2gons |= vertex && !edge;
    }
  }
  const int n = static_cast<int>(g.num_vertices());
  if (r.adjacent_2gons) {
    if (matches(g, FamilyKind::J4, n / 2)) {
      r.forced = n == 2 ? "4-hedrite 2-1" : "J4(" + std::to_string(n / 2) + ")";
    } else {
      throw Error("adjacent 2-gons outside 4-hedrite 2-1 and J4");
    }
  } else if (r.vertex_sharing_2gons) {
    if (n % 2 == 0 && matches(g, FamilyKind::I4, (n - 2) / 2)) {
      r.forced = n == 4 ? "4-hedrite 4-1" : "I4(" + std::to_string((n - 2) / 2) + ")";
    } else if (n % 2 == 1 && matches(g, FamilyKind::I5, (n - 1) / 2)) {
      r.forced = n == 3 ? "5-hedrite 3-1" : "I5(" + std::to_string((n - 1) / 2) + ")";
    } else {
      throw Error("vertex-sharing 2-gons outside 4-1, I4, 3-1 and I5");
    }
  }
  return r;
}

// ---------------------------------------------------------------------- shift

PlaneGraph build_4hedrite(int n, int j) {
  if (n < 2 || n % 2) throw Error("build_4hedrite needs an even n >= 2");
  auto mod = [n](int x) { return ((x % n) + n) % n; };
  std::vector<Dart> theta(4 * n);
  for (int p = 0; p < n; ++p) {
    theta[4 * p] = 4 * mod(p + 1) + 2;
    theta[4 * mod(p + 1) + 2] = 4 * p;
    theta[4 * p + 1] = 4 * mod(-1 - p) + 1;
    theta[4 * p + 3] = 4 * mod(2 * j - 1 - p) + 3;
  }
  return from_quartic_theta(std::move(theta));
}

Shift shift(const PlaneGraph& g) {
  if (is_i_hedrite(g) != 4) throw Error("shift needs a 4-hedrite");
  auto cs = central_circuits(g);
  if (cs.size() != 2) {
    throw Error("shift needs exactly two central circuits, got " + std::to_string(cs.size()));
  }
  const int n = static_cast<int>(g.num_vertices());
  int best = n;
  for (const auto& c : cs) {
    if (static_cast<int>(c.darts.size()) != n) throw Error("circuit does not visit every vertex once");
    std::vector<int> position(g.num_vertices(), -1);
    for (int p = 0; p < n; ++p) position[g.vertex_of(c.darts[p])] = p;
    std::set<int> left_sums, right_sums;
    for (int p = 0; p < n; ++p) {
      Dart d = c.darts[p];
      int l = position[g.vertex_of(g.theta(g.sigma(d)))];
      int r = position[g.vertex_of(g.theta(g.sigma_inv(d)))];
      left_sums.insert((p + l) % n);
      right_sums.insert((p + r) % n);
    }
    if (left_sums.size() != 1 || right_sums.size() != 1) {
      throw Error("chords of the second circuit are not parallel");
    }
    int diff = ((*right_sums.begin() - *left_sums.begin()) % n + n) % n;
    int j = diff / 2;
    best = std::min({best, j, n / 2 - j});
  }
  return {n, best};
}

}  // namespace hedrite
