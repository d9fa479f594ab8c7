#include "hedrite/transform.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace hedrite {

Inflation inflate(const PlaneGraph& g, const std::vector<int>& multiplicity) {
  if (!g.is_four_valent()) throw Error("inflation needs a 4-valent graph");
  auto cs = central_circuits(g);
  if (multiplicity.size() != cs.size()) throw Error("one multiplicity per central circuit expected");
  for (int t : multiplicity) {
    if (t < 1) throw Error("inflation multiplicity must be at least 1");
  }
  auto cidx = circuit_index(g, cs);
  const std::size_t n = g.num_vertices();
  std::vector<int> rows(n), cols(n), offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto d = g.darts_of(static_cast<VertexId>(v));
    rows[v] = multiplicity[cidx[d[0]]];
    cols[v] = multiplicity[cidx[d[1]]];
    offset[v + 1] = offset[v] + rows[v] * cols[v];
  }
  const std::size_t darts = 4 * static_cast<std::size_t>(offset[n]);
  std::vector<Dart> theta(darts, -1), origin(darts, -1);
  auto dart = [&](std::size_t v, int x, int y, int dir) {
    return static_cast<Dart>(4 * (offset[v] + x + cols[v] * y) + dir);
  };
  auto ports = [&](Dart d) {
    std::size_t v = g.vertex_of(d);
    const int r = rows[v], c = cols[v];
    std::vector<Dart> out;
    switch (g.index_at_vertex(d)) {
      case 0: for (int y = r - 1; y >= 0; --y) out.push_back(dart(v, c - 1, y, 0)); break;
      case 1: for (int x = 0; x < c; ++x) out.push_back(dart(v, x, r - 1, 1)); break;
      case 2: for (int y = 0; y < r; ++y) out.push_back(dart(v, 0, y, 2)); break;
      default: for (int x = c - 1; x >= 0; --x) out.push_back(dart(v, x, 0, 3)); break;
    }
    return out;
  };
  for (std::size_t v = 0; v < n; ++v) {
    auto d = g.darts_of(static_cast<VertexId>(v));
    for (int y = 0; y < rows[v]; ++y) {
      for (int x = 0; x < cols[v]; ++x) {
        for (int dir = 0; dir < 4; ++dir) origin[dart(v, x, y, dir)] = d[dir];
        if (x + 1 < cols[v]) {
          theta[dart(v, x, y, 0)] = dart(v, x + 1, y, 2);
          theta[dart(v, x + 1, y, 2)] = dart(v, x, y, 0);
        }
        if (y + 1 < rows[v]) {
          theta[dart(v, x, y, 1)] = dart(v, x, y + 1, 3);
          theta[dart(v, x, y + 1, 3)] = dart(v, x, y, 1);
        }
      }
    }
  }
  for (std::size_t x = 0; x < g.num_darts(); ++x) {
    Dart d = static_cast<Dart>(x);
    if (d > g.theta(d)) continue;
    auto p = ports(d), q = ports(g.theta(d));
    if (p.size() != q.size()) throw Error("edge ends carry different multiplicities");
    const std::size_t m = p.size();
    for (std::size_t k = 0; k < m; ++k) {
      theta[p[k]] = q[m - 1 - k];
      theta[q[m - 1 - k]] = p[k];
    }
  }
  return {from_quartic_theta(std::move(theta)), std::move(origin)};
}

PlaneGraph inflate_circuit(const PlaneGraph& g, int circuit, int t) {
  auto count = central_circuits(g).size();
  if (circuit < 0 || static_cast<std::size_t>(circuit) >= count) {
    throw Error("circuit index " + std::to_string(circuit) + " out of range");
  }
  std::vector<int> mult(count, 1);
  mult[circuit] = t;
  return inflate(g, mult).graph;
}

PlaneGraph inflate_circuit(const PlaneGraph& g, const CentralCircuit& c, int t) {
  auto cs = central_circuits(g);
  if (c.darts.empty()) throw Error("empty circuit");
  auto cidx = circuit_index(g, cs);
  if (static_cast<std::size_t>(c.darts.front()) >= g.num_darts()) {
    throw Error("circuit does not belong to this graph");
  }
  int k = cidx[c.darts.front()];
  if (cs[k].length != c.length) throw Error("circuit does not belong to this graph");
  return inflate_circuit(g, k, t);
}

PlaneGraph inflate_all(const PlaneGraph& g, int t) {
  return inflate(g, std::vector<int>(central_circuits(g).size(), t)).graph;
}

PlaneGraph delete_circuit(const PlaneGraph& g, int circuit) {
  auto cs = central_circuits(g);
  if (circuit < 0 || static_cast<std::size_t>(circuit) >= cs.size()) {
    throw Error("circuit index " + std::to_string(circuit) + " out of range");
  }
  auto cidx = circuit_index(g, cs);
  std::vector<VertexId> renumber(g.num_vertices(), -1);
  VertexId kept = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto d = g.darts_of(static_cast<VertexId>(v));
    if (cidx[d[0]] != circuit && cidx[d[1]] != circuit) renumber[v] = kept++;
  }
  if (kept == 0) throw Error("deleting the circuit leaves no vertices");
  auto new_id = [&](Dart x) { return 4 * renumber[g.vertex_of(x)] + g.index_at_vertex(x); };
  std::vector<Dart> theta(4 * static_cast<std::size_t>(kept));
  for (std::size_t x = 0; x < g.num_darts(); ++x) {
    Dart d = static_cast<Dart>(x);
    if (renumber[g.vertex_of(d)] < 0) continue;
    Dart y = g.theta(d);
    std::size_t guard = 0;
    while (renumber[g.vertex_of(y)] < 0) {
      y = g.theta(g.opposite(y));
      if (++guard > g.num_darts()) throw Error("a central circuit loses all its vertices");
    }
    theta[new_id(d)] = new_id(y);
  }
  return from_quartic_theta(std::move(theta));
}

PlaneGraph reduce(const PlaneGraph& g, const RailRoad& r) {
  for (const auto& own : rail_roads(g)) {
    std::vector<Dart> a = own.entry, b = r.entry;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b && own.bounding_circuits == r.bounding_circuits) {
      return delete_circuit(g, r.bounding_circuits[0]);
    }
  }
  throw Error("rail-road does not belong to this graph");
}

// ------------------------------------------------------------ Goldberg-Coxeter

namespace {

struct Gauss {
  long long re = 0, im = 0;
  Gauss operator+(Gauss o) const { return {re + o.re, im + o.im}; }
  Gauss operator-(Gauss o) const { return {re - o.re, im - o.im}; }
  Gauss operator*(Gauss o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  bool operator==(const Gauss&) const = default;
  auto operator<=>(const Gauss&) const = default;
};

Gauss unit(int r) {
  static const Gauss u[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return u[((r % 4) + 4) % 4];
}

long long cross(Gauss a, Gauss b) { return a.re * b.im - a.im * b.re; }

// Vertex v's square in doubled coordinates, corners 2z * (0, 1, 1+i, i);
// side m runs corner m -> corner m+1 and is crossed by v's m-th dart.
class GCFrame {
 public:
  GCFrame(const PlaneGraph& g, Gauss z) : g_(g) {
    const Gauss u[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    for (int m = 0; m < 4; ++m) corner_[m] = Gauss{2, 0} * z * u[m];
  }

  Gauss corner(int m) const { return corner_[((m % 4) + 4) % 4]; }
  long long side(int m, Gauss x) const { return cross(corner(m + 1) - corner(m), x - corner(m)); }

  bool inside(Gauss x) const {
    for (int m = 0; m < 4; ++m) {
      if (side(m, x) < 0) return false;
    }
    return true;
  }
  int on_side(Gauss x) const {
    for (int m = 0; m < 4; ++m) {
      if (side(m, x) == 0) return m;
    }
    return -1;
  }

  // Maps coordinates of the neighbour across side m of v's square into v's frame.
  struct Glue {
    VertexId w;
    int m_w;
    Gauss a, b;
  };
  Glue glue(VertexId v, int m) const {
    Dart d = g_.darts_of(v)[m];
    Dart e = g_.theta(d);
    VertexId w = g_.vertex_of(e);
    int mw = g_.index_at_vertex(e);
    Gauss a = unit(m - mw + 2);
    Gauss b = corner(m + 1) - a * corner(mw);
    return {w, mw, a, b};
  }
  // Inverse of p -> a p + b with |a| = 1.
  static Gauss pull(const Glue& t, Gauss p) {
    Gauss conj{t.a.re, -t.a.im};
    return conj * (p - t.b);
  }
  static Gauss turn_back(const Glue& t, Gauss dir) { return Gauss{t.a.re, -t.a.im} * dir; }

  bool owns(VertexId v, int m) const {
    Dart d = g_.darts_of(v)[m];
    return d < g_.theta(d);
  }

 private:
  const PlaneGraph& g_;
  Gauss corner_[4];
};

int direction_index(Gauss d) {
  if (d == Gauss{2, 0}) return 0;
  if (d == Gauss{0, 2}) return 1;
  if (d == Gauss{-2, 0}) return 2;
  return 3;
}

}  // namespace

PlaneGraph goldberg_coxeter(const PlaneGraph& g, int k, int l) {
  if (k < 0 || l < 0 || (k == 0 && l == 0)) {
    throw Error("Goldberg-Coxeter parameters must be non-negative and not both zero");
  }
  if (!g.is_four_valent()) throw Error("Goldberg-Coxeter construction needs a 4-valent graph");
  GCFrame frame(g, Gauss{k, l});

  // Enumerate owned odd-odd points of every square.
  long long lo_re = 0, hi_re = 0, lo_im = 0, hi_im = 0;
  for (int m = 0; m < 4; ++m) {
    lo_re = std::min(lo_re, frame.corner(m).re);
    hi_re = std::max(hi_re, frame.corner(m).re);
    lo_im = std::min(lo_im, frame.corner(m).im);
    hi_im = std::max(hi_im, frame.corner(m).im);
  }
  std::map<std::pair<VertexId, Gauss>, int> index;
  int count = 0;
  for (std::size_t vv = 0; vv < g.num_vertices(); ++vv) {
    VertexId v = static_cast<VertexId>(vv);
    for (long long x = lo_re - 1; x <= hi_re + 1; ++x) {
      if ((x & 1) == 0) continue;
      for (long long y = lo_im - 1; y <= hi_im + 1; ++y) {
        if ((y & 1) == 0) continue;
        Gauss p{x, y};
        if (!frame.inside(p)) continue;
        int m = frame.on_side(p);
        if (m >= 0 && !frame.owns(v, m)) continue;
        index[{v, p}] = count++;
      }
    }
  }

  std::vector<Dart> theta(4 * static_cast<std::size_t>(count), -1);
  for (const auto& [key, id] : index) {
    for (int dir = 0; dir < 4; ++dir) {
      VertexId v = key.first;
      Gauss p = key.second;
      Gauss step = unit(dir) * Gauss{2, 0};
      Gauss q = p + step;
      int guard = 0;
      while (!frame.inside(q)) {
        // Leave through the side crossed first: minimal s(p) / (s(p) - s(q)).
        int exit = -1;
        long long num = 0, den = 1;
        for (int m = 0; m < 4; ++m) {
          long long sq = frame.side(m, q);
          if (sq >= 0) continue;
          long long sp = frame.side(m, p);
          long long n2 = sp, d2 = sp - sq;
          if (exit < 0 || n2 * den < num * d2) {
            exit = m;
            num = n2;
            den = d2;
          }
        }
        auto t = frame.glue(v, exit);
        p = GCFrame::pull(t, p);
        q = GCFrame::pull(t, q);
        step = GCFrame::turn_back(t, step);
        v = t.w;
        if (++guard > 64) throw Error("Goldberg-Coxeter walk does not settle");
      }
      int m = frame.on_side(q);
      if (m >= 0 && !frame.owns(v, m)) {
        auto t = frame.glue(v, m);
        q = GCFrame::pull(t, q);
        step = GCFrame::turn_back(t, step);
        v = t.w;
      }
      auto it = index.find({v, q});
      if (it == index.end()) throw Error("Goldberg-Coxeter walk reached an unknown point");
      Gauss back{-step.re, -step.im};
      theta[4 * id + dir] = 4 * it->second + direction_index(back);
    }
  }
  return from_quartic_theta(std::move(theta));
}

}  // namespace hedrite
