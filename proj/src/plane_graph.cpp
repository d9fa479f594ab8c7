#include "hedrite/plane_graph.hpp"

#include "hedrite/structure.hpp"

#include <algorithm>
#include <numeric>

namespace hedrite {

namespace {

void require_permutation(const std::vector<Dart>& p, const char* name) {
  std::vector<char> seen(p.size(), 0);
  for (std::size_t d = 0; d < p.size(); ++d) {
    Dart x = p[d];
    if (x < 0 || static_cast<std::size_t>(x) >= p.size()) {
      throw Error(std::string("malformed permutation ") + name + ": dart " + std::to_string(d) +
                  " maps to out-of-range value " + std::to_string(x));
    }
    if (seen[x]) {
      throw Error(std::string("malformed permutation ") + name + ": value " + std::to_string(x) +
                  " appears twice");
    }
    seen[x] = 1;
  }
}

}  // namespace

PlaneGraph::PlaneGraph(std::vector<Dart> theta, std::vector<Dart> sigma)
    : theta_(std::move(theta)), sigma_(std::move(sigma)) {
  const std::size_t n = theta_.size();
  if (n == 0 || n % 2 != 0) throw Error("map must have a positive even number of darts");
  if (sigma_.size() != n) throw Error("theta and sigma have different sizes");
  require_permutation(theta_, "theta");
  require_permutation(sigma_, "sigma");
  for (std::size_t d = 0; d < n; ++d) {
    if (theta_[d] == static_cast<Dart>(d) || theta_[theta_[d]] != static_cast<Dart>(d)) {
      throw Error("non-involutive pairing at dart " + std::to_string(d));
    }
  }
  sigma_inv_.assign(n, 0);
  for (std::size_t d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = static_cast<Dart>(d);

  // Vertices: sigma orbits, numbered by smallest dart.
  vertex_of_.assign(n, -1);
  index_at_vertex_.assign(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (vertex_of_[s] >= 0) continue;
    VertexId v = static_cast<VertexId>(vertex_start_.size() - 1);
    int k = 0;
    Dart d = static_cast<Dart>(s);
    do {
      vertex_of_[d] = v;
      index_at_vertex_[d] = k++;
      vertex_darts_.push_back(d);
      d = sigma_[d];
    } while (d != static_cast<Dart>(s));
    vertex_start_.push_back(vertex_darts_.size());
  }

  // Faces: phi orbits.
  face_of_.assign(n, -1);
  index_in_face_.assign(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (face_of_[s] >= 0) continue;
    FaceId f = static_cast<FaceId>(face_start_.size() - 1);
    int k = 0;
    Dart d = static_cast<Dart>(s);
    do {
      face_of_[d] = f;
      index_in_face_[d] = k++;
      face_darts_.push_back(d);
      d = phi(d);
    } while (d != static_cast<Dart>(s));
    face_start_.push_back(face_darts_.size());
  }

  // Connectivity over the darts via theta and sigma.
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {theta_[d], sigma_[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) {
    auto it = std::find(seen.begin(), seen.end(), 0);
    throw Error("disconnected map: dart " + std::to_string(it - seen.begin()) +
                " is unreachable from dart 0");
  }

  const long euler = static_cast<long>(num_vertices()) - static_cast<long>(num_edges()) +
                     static_cast<long>(num_faces());
  if (euler != 2) {
    throw Error("nonzero genus: V - E + F = " + std::to_string(euler));
  }
}

bool PlaneGraph::is_four_valent() const {
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    if (degree(static_cast<VertexId>(v)) != 4) return false;
  }
  return true;
}

bool PlaneGraph::has_loop() const {
  for (std::size_t d = 0; d < num_darts(); ++d) {
    if (vertex_of_[d] == vertex_of_[theta_[d]]) return true;
  }
  return false;
}

PlaneGraph from_quartic_theta(std::vector<Dart> theta) {
  std::vector<Dart> sigma(theta.size());
  for (std::size_t d = 0; d < theta.size(); ++d) {
    sigma[d] = static_cast<Dart>((d & ~std::size_t{3}) | ((d + 1) & 3));
  }
  return PlaneGraph(std::move(theta), std::move(sigma));
}

std::vector<std::vector<Dart>> faces(const PlaneGraph& g) {
  std::vector<std::vector<Dart>> out;
  out.reserve(g.num_faces());
  for (std::size_t f = 0; f < g.num_faces(); ++f) {
    auto span = g.face(static_cast<FaceId>(f));
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

FaceVector face_vector(const PlaneGraph& g) {
  FaceVector fv;
  for (std::size_t f = 0; f < g.num_faces(); ++f) {
    ++fv.p[static_cast<int>(g.face_size(static_cast<FaceId>(f)))];
  }
  bool small_only = std::all_of(fv.p.begin(), fv.p.end(),
                                [](const auto& kv) { return kv.first >= 2 && kv.first <= 4; });
  if (small_only) fv.i_value = fv.count(2) + fv.count(3);
  return fv;
}

std::optional<int> is_i_hedrite(const PlaneGraph& g) {
  if (!g.is_four_valent() || g.has_loop()) return std::nullopt;
  FaceVector fv = face_vector(g);
  if (!fv.i_value) return std::nullopt;
  int i = *fv.i_value;
  if (i < 4 || i > 8 || fv.count(2) != 8 - i || fv.count(3) != 2 * i - 8) return std::nullopt;
  if (vertex_connectivity_class(g) == Connectivity::one) return std::nullopt;
  return i;
}

PlaneGraph dual(const PlaneGraph& g) {
  // Dual darts coincide with primal darts; the dual rotation is phi.
  std::vector<Dart> sigma(g.num_darts());
  for (std::size_t d = 0; d < g.num_darts(); ++d) sigma[d] = g.phi(static_cast<Dart>(d));
  return PlaneGraph(g.theta_perm(), std::move(sigma));
}

PlaneGraph medial(const PlaneGraph& g) {
  // Each corner (d, sigma d) of g becomes a medial edge joining the midpoints
  // of edge(d) and edge(sigma d). Dart 2d is the corner end at edge(d) on the
  // sigma(d) side, dart 2d+1 the corner end at edge(d) on the sigma^-1(d) side.
  const std::size_t n = g.num_darts();
  std::vector<Dart> theta(2 * n), sigma(2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    Dart d = static_cast<Dart>(x);
    theta[2 * d] = 2 * g.sigma(d) + 1;
    theta[2 * d + 1] = 2 * g.sigma_inv(d);
    sigma[2 * d] = 2 * d + 1;
    sigma[2 * d + 1] = 2 * g.theta(d);
  }
  return PlaneGraph(std::move(theta), std::move(sigma));
}

PlaneGraph mirror(const PlaneGraph& g) {
  std::vector<Dart> sigma(g.num_darts());
  for (std::size_t d = 0; d < g.num_darts(); ++d) sigma[d] = g.sigma_inv(static_cast<Dart>(d));
  return PlaneGraph(g.theta_perm(), std::move(sigma));
}

PlaneGraph relabel(const PlaneGraph& g, std::span<const Dart> perm) {
  const std::size_t n = g.num_darts();
  if (perm.size() != n) throw Error("relabel: permutation size mismatch");
  std::vector<Dart> theta(n), sigma(n);
  for (std::size_t x = 0; x < n; ++x) {
    Dart d = static_cast<Dart>(x);
    theta[perm[d]] = perm[g.theta(d)];
    sigma[perm[d]] = perm[g.sigma(d)];
  }
  return PlaneGraph(std::move(theta), std::move(sigma));
}

bool rooted_code(const PlaneGraph& g, Dart root, bool reversed, CanonicalCode& out,
                 const CanonicalCode* bound) {
  const std::size_t n = g.num_darts();
  thread_local std::vector<std::int32_t> label;
  thread_local std::vector<Dart> order;
  label.assign(n, -1);
  order.assign(n, 0);
  out.clear();
  out.reserve(n);

  bool tied = bound != nullptr;
  auto emit = [&](std::int32_t value) {
    std::size_t k = out.size();
    out.push_back(value);
    if (tied) {
      std::int32_t b = (*bound)[k];
      if (value > b) return false;
      if (value < b) tied = false;
    }
    return true;
  };

  // A new vertex contributes -degree followed later by the labels of its partners.
  std::int32_t next = 0;
  auto open_vertex = [&](Dart start) {
    Dart d = start;
    do {
      label[d] = next;
      order[next++] = d;
      d = reversed ? g.sigma_inv(d) : g.sigma(d);
    } while (d != start);
    return emit(-static_cast<std::int32_t>(g.degree(g.vertex_of(start))));
  };
  if (!open_vertex(root)) return false;

  for (std::size_t k = 0; k < n; ++k) {
    Dart t = g.theta(order[k]);
    if (label[t] < 0 && !open_vertex(t)) return false;
    if (!emit(label[t])) return false;
  }
  return true;
}

CanonicalCode canonical_code(const PlaneGraph& g) {
  CanonicalCode best, current;
  bool have = false;
  for (std::size_t r = 0; r < g.num_darts(); ++r) {
    for (bool reversed : {false, true}) {
      if (rooted_code(g, static_cast<Dart>(r), reversed, current, have ? &best : nullptr)) {
        if (!have || current < best) {
          best.swap(current);
          have = true;
        }
      }
    }
  }
  return best;
}

std::string code_to_hex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(code.size() * 4);
  for (std::int32_t v : code) {
    auto u = static_cast<std::uint32_t>(v);
    for (int shift = 12; shift >= 0; shift -= 4) s.push_back(digits[(u >> shift) & 0xf]);
  }
  return s;
}

bool is_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.num_darts() != b.num_darts() || a.num_vertices() != b.num_vertices() ||
      a.num_faces() != b.num_faces()) {
    return false;
  }
  return canonical_code(a) == canonical_code(b);
}

}  // namespace hedrite
