#include "hedrite/symmetry.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace hedrite {

namespace {

bool extend(const PlaneGraph& g, Dart target, bool preserving, std::vector<Dart>& f) {
  const std::size_t n = g.num_darts();
  f.assign(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Dart> stack{0};
  f[0] = target;
  used[target] = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    Dart fd = f[d];
    const std::array<std::pair<Dart, Dart>, 2> links = {
        std::pair{g.theta(d), g.theta(fd)},
        std::pair{g.sigma(d), preserving ? g.sigma(fd) : g.sigma_inv(fd)}};
    for (auto [x, fx] : links) {
      if (f[x] < 0) {
        if (used[fx]) return false;
        f[x] = fx;
        used[fx] = 1;
        stack.push_back(x);
      } else if (f[x] != fx) {
        return false;
      }
    }
  }
  return true;
}

int element_order(const std::vector<Dart>& f) {
  int order = 1;
  std::vector<Dart> cur = f;
  auto identity = [&]() {
    for (std::size_t d = 0; d < cur.size(); ++d) {
      if (cur[d] != static_cast<Dart>(d)) return false;
    }
    return true;
  };
  while (!identity()) {
    for (auto& x : cur) x = f[x];
    ++order;
  }
  return order;
}

bool fixes_a_cell(const PlaneGraph& g, const std::vector<Dart>& f) {
  for (std::size_t x = 0; x < g.num_darts(); ++x) {
    Dart d = static_cast<Dart>(x);
    if (g.vertex_of(f[d]) == g.vertex_of(d)) return true;
    if (f[d] == d || f[d] == g.theta(d)) return true;
    // f reverses orientation, so it sends the face of d to the face of sigma(f(d)).
    if (g.face_of(g.sigma(f[d])) == g.face_of(d)) return true;
  }
  return false;
}

}  // namespace

std::vector<MapAutomorphism> automorphisms(const PlaneGraph& g) {
  std::vector<MapAutomorphism> out;
  std::vector<Dart> f;
  for (bool preserving : {true, false}) {
    for (std::size_t t = 0; t < g.num_darts(); ++t) {
      if (g.degree(g.vertex_of(static_cast<Dart>(t))) != g.degree(g.vertex_of(0))) continue;
      if (extend(g, static_cast<Dart>(t), preserving, f)) out.push_back({f, preserving});
    }
  }
  return out;
}

const std::vector<PointGroup>& all_point_groups() {
  static const std::vector<PointGroup> all = {
      PointGroup::C1,  PointGroup::Cs,  PointGroup::Ci,  PointGroup::C2,  PointGroup::C2v,
      PointGroup::C2h, PointGroup::S4,  PointGroup::D2,  PointGroup::D2d, PointGroup::D2h,
      PointGroup::D3,  PointGroup::D3h, PointGroup::D3d, PointGroup::D4,  PointGroup::D4d,
      PointGroup::D4h, PointGroup::O,   PointGroup::Oh};
  return all;
}

std::string to_string(PointGroup p) {
  static const char* names[] = {"C1",  "Cs",  "Ci", "C2",  "C2v", "C2h", "S4", "D2", "D2d",
                                "D2h", "D3",  "D3h", "D3d", "D4", "D4d", "D4h", "O", "Oh"};
  return names[static_cast<int>(p)];
}

PointGroup point_group_from_string(const std::string& s) {
  for (PointGroup p : all_point_groups()) {
    if (to_string(p) == s) return p;
  }
  throw Error("unknown point group '" + s + "'");
}

int order(PointGroup p) {
  static const int orders[] = {1, 2, 2, 2, 4, 4, 4, 4, 8, 8, 6, 12, 12, 8, 16, 16, 24, 48};
  return orders[static_cast<int>(p)];
}

PointGroup point_group(const PlaneGraph& g) {
  auto aut = automorphisms(g);
  int rotations = 0, max_rotation = 1, reflections = 0;
  bool reversing = false;
  for (const auto& a : aut) {
    int ord = element_order(a.dart_permutation);
    if (a.orientation_preserving) {
      ++rotations;
      max_rotation = std::max(max_rotation, ord);
    } else {
      reversing = true;
      if (ord == 2 && fixes_a_cell(g, a.dart_permutation)) ++reflections;
    }
  }
  const int n = rotations;
  const int m = max_rotation;
  auto fail = [&]() -> PointGroup {
    throw Error("unsupported symmetry group: " + std::to_string(n) + " rotations, max order " +
                std::to_string(m) + ", " + std::to_string(reflections) + " reflections");
  };
  if (m == n) {  // cyclic
    if (!reversing) {
      if (n == 1) return PointGroup::C1;
      if (n == 2) return PointGroup::C2;
      return fail();
    }
    if (n == 1) return reflections == 1 ? PointGroup::Cs : PointGroup::Ci;
    if (n == 2) {
      if (reflections == 2) return PointGroup::C2v;
      if (reflections == 1) return PointGroup::C2h;
      return PointGroup::S4;
    }
    return fail();
  }
  if (n == 2 * m) {  // dihedral
    if (!reversing) {
      if (m == 2) return PointGroup::D2;
      if (m == 3) return PointGroup::D3;
      if (m == 4) return PointGroup::D4;
      return fail();
    }
    const bool h = reflections == m + 1;
    if (!h && reflections != m) return fail();
    if (m == 2) return h ? PointGroup::D2h : PointGroup::D2d;
    if (m == 3) return h ? PointGroup::D3h : PointGroup::D3d;
    if (m == 4) return h ? PointGroup::D4h : PointGroup::D4d;
    return fail();
  }
  if (n == 24 && m == 4) return reversing ? PointGroup::Oh : PointGroup::O;
  return fail();
}

}  // namespace hedrite
