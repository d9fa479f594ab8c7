#include "hedrite/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hedrite {

namespace {

constexpr Dart kFree = -1;

inline Dart rot(Dart d) { return (d & ~3) | ((d + 1) & 3); }
inline Dart rot_inv(Dart d) { return (d & ~3) | ((d + 3) & 3); }

// Partial map: vertex v owns darts 4v..4v+3 (ccw), theta filled in the order
// of the breadth-first labelling rooted at dart 0.
struct State {
  std::vector<Dart> theta;
  int vertices = 1;
  int cursor = 0;  // every dart below it is paired
  int faces[5] = {0, 0, 0, 0, 0};
};

class Search {
 public:
  Search(int i, int n) : i_(i), n_(n) {
    budget_[2] = 8 - i;
    budget_[3] = 2 * i - 8;
    budget_[4] = n + 2 - i;
  }

  State root() const {
    State s;
    s.theta.assign(4 * static_cast<std::size_t>(n_), kFree);
    return s;
  }

  bool feasible() const { return budget_[2] >= 0 && budget_[3] >= 0 && budget_[4] >= 0; }

  // Depth-first search below s. When `frontier` is non-null, states reached
  // after `limit` more pairings are handed over instead of explored.
  void run(State& s, std::vector<Generated>& out, int limit = -1,
           std::vector<State>* frontier = nullptr) {
    while (s.cursor < 4 * s.vertices && s.theta[s.cursor] != kFree) ++s.cursor;
    if (s.cursor == 4 * s.vertices) {
      leaf(s, out);
      return;
    }
    if (limit == 0 && frontier) {
      frontier->push_back(s);
      return;
    }
    const Dart d = s.cursor;
    if (s.vertices < n_) {
      Dart e = 4 * s.vertices;
      ++s.vertices;
      try_pair(s, d, e, out, limit, frontier);
      --s.vertices;
    }
    const Dart end = 4 * s.vertices;
    for (Dart e = d + 1; e < end; ++e) {
      if (s.theta[e] != kFree || (e >> 2) == (d >> 2)) continue;
      try_pair(s, d, e, out, limit, frontier);
    }
  }

 private:
  void try_pair(State& s, Dart d, Dart e, std::vector<Generated>& out, int limit,
                std::vector<State>* frontier) {
    const int cursor = s.cursor;
    s.theta[d] = e;
    s.theta[e] = d;
    int closed[2] = {0, 0};
    if (faces_ok(s, d, e, closed)) {
      run(s, out, limit < 0 ? -1 : limit - 1, frontier);
    }
    for (int c : closed) {
      if (c) --s.faces[c];
    }
    s.theta[d] = kFree;
    s.theta[e] = kFree;
    s.cursor = cursor;
  }

  // Length of the face through x if closed (positive), or minus the length of
  // the open chain through x; 0 if longer than 4.
  int chain(const State& s, Dart x) const {
    int len = 1;
    Dart y = x;
    while (true) {
      Dart t = s.theta[y];
      if (t == kFree) break;
      y = rot(t);
      if (y == x) return len;
      if (++len > 4) return 0;
    }
    y = x;
    while (true) {
      Dart t = s.theta[rot_inv(y)];
      if (t == kFree) break;
      y = t;
      if (++len > 4) return 0;
    }
    return -len;
  }

  bool in_face(const State& s, Dart start, Dart x) const {
    Dart y = start;
    do {
      if (y == x) return true;
      y = rot(s.theta[y]);
    } while (y != start);
    return false;
  }

  bool faces_ok(State& s, Dart d, Dart e, int closed[2]) {
    int a = chain(s, d);
    if (a == 0) return false;
    int b = chain(s, e);
    if (b == 0) return false;
    if (a > 0) {
      if (++s.faces[a] > budget_[a]) {
        closed[0] = a;
        return false;
      }
      closed[0] = a;
    }
    if (b > 0 && !(a > 0 && in_face(s, d, e))) {
      closed[1] = b;
      if (++s.faces[b] > budget_[b]) return false;
    }
    return true;
  }

  void leaf(const State& s, std::vector<Generated>& out) const {
    if (s.vertices != n_) return;
    if (s.faces[2] != budget_[2] || s.faces[3] != budget_[3] || s.faces[4] != budget_[4]) return;
    PlaneGraph g = from_quartic_theta(s.theta);
    CanonicalCode own, other;
    rooted_code(g, 0, false, own);
    for (std::size_t r = 0; r < g.num_darts(); ++r) {
      for (bool rev : {false, true}) {
        if (r == 0 && !rev) continue;
        if (rooted_code(g, static_cast<Dart>(r), rev, other, &own) && other < own) return;
      }
    }
    if (is_i_hedrite(g) != i_) return;
    out.push_back({std::move(own), std::move(g)});
  }

  int i_, n_;
  int budget_[5] = {0, 0, 0, 0, 0};
};

void sort_by_code(std::vector<Generated>& v) {
  std::sort(v.begin(), v.end(),
            [](const Generated& a, const Generated& b) { return a.code < b.code; });
}

bool valid_request(int i, int n) { return i >= 4 && i <= 8 && n >= 1; }

}  // namespace

int default_threads() {
  if (const char* env = std::getenv("HEDRITE_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return omp_get_max_threads();
}

std::vector<Generated> generate_serial(int i, int n) {
  std::vector<Generated> out;
  if (!valid_request(i, n)) throw Error("i must lie in 4..8 and n must be positive");
  Search search(i, n);
  if (!search.feasible()) return out;
  State s = search.root();
  search.run(s, out);
  sort_by_code(out);
  return out;
}

std::vector<Generated> generate(int i, int n, int threads) {
  if (!valid_request(i, n)) throw Error("i must lie in 4..8 and n must be positive");
  if (threads <= 0) threads = default_threads();
  std::vector<Generated> out;
  Search search(i, n);
  if (!search.feasible()) return out;

  // Split the tree into independent subtrees, then search them concurrently.
  std::vector<State> frontier{search.root()};
  const std::size_t wanted = 64 * static_cast<std::size_t>(threads);
  for (int depth = 0; depth < 4 * n && !frontier.empty() && frontier.size() < wanted; ++depth) {
    std::vector<State> next;
    for (auto& s : frontier) search.run(s, out, 1, &next);
    frontier.swap(next);
  }

  std::vector<std::vector<Generated>> found(threads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    Search local(i, n);
    State s = frontier[k];
    local.run(s, found[omp_get_thread_num()]);
  }
  for (auto& part : found) {
    for (auto& g : part) out.push_back(std::move(g));
  }
  sort_by_code(out);
  return out;
}

HedriteRecord make_record(const PlaneGraph& g, int local_id) {
  HedriteRecord r;
  auto i = is_i_hedrite(g);
  if (!i) throw Error("not an i-hedrite");
  r.i = *i;
  r.n = static_cast<int>(g.num_vertices());
  r.local_id = local_id;
  r.canonical_code = canonical_code(g);
  r.graph = g;
  r.point_group = point_group(g);
  r.cc_vector = cc_vector(g);
  r.irreducible = is_irreducible(g);
  r.pure = is_pure(g);
  r.balanced = is_balanced(g);
  r.three_connected = vertex_connectivity_class(g) == Connectivity::three_or_more;
  r.family = classify_family(g);
  return r;
}

std::vector<HedriteRecord> enumerate(int i, int n, int threads) {
  auto gens = generate(i, n, threads);
  std::vector<HedriteRecord> out(gens.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : default_threads())
  for (std::size_t k = 0; k < gens.size(); ++k) {
    out[k] = make_record(gens[k].graph, static_cast<int>(k) + 1);
  }
  return out;
}

std::vector<HedriteRecord> full_census(int n_max, const CensusSink& sink, int threads) {
  std::vector<HedriteRecord> all;
  for (int n = 2; n <= n_max; ++n) {
    for (int i = 4; i <= 8; ++i) {
      auto batch = enumerate(i, n, threads);
      if (sink) sink(i, n, batch);
      for (auto& r : batch) all.push_back(std::move(r));
    }
  }
  return all;
}

std::string record_header(const HedriteRecord& r) {
  std::ostringstream s;
  s << "i=" << r.i << " n=" << r.n << " id=" << r.local_id
    << " code=" << code_to_hex(r.canonical_code) << " group=" << to_string(r.point_group)
    << " cc=" << r.cc_vector.to_string() << " irreducible=" << r.irreducible
    << " pure=" << r.pure << " balanced=" << r.balanced
    << " three_connected=" << r.three_connected << " family=" << to_string(r.family);
  return s.str();
}

}  // namespace hedrite
