#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hedrite {

using Dart = std::int32_t;
using VertexId = std::int32_t;
using FaceId = std::int32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Spherical combinatorial map given by two permutations of the darts:
//   theta  - fixed-point-free involution pairing the two ends of an edge,
//   sigma  - counterclockwise successor of a dart around its vertex.
// Faces are the orbits of phi = sigma o theta, i.e. phi(d) = sigma(theta(d)).
// That convention is used by every module.
//
// The map is immutable once constructed and always satisfies: permutations
// are valid, theta has no fixed point, the map is connected and has genus 0.
// Vertex degrees are arbitrary (duals of 4-valent maps are not 4-valent).
class PlaneGraph {
 public:
  PlaneGraph() = default;
  PlaneGraph(std::vector<Dart> theta, std::vector<Dart> sigma);

  std::size_t num_darts() const { return theta_.size(); }
  std::size_t num_edges() const { return theta_.size() / 2; }
  std::size_t num_vertices() const { return vertex_start_.size() - 1; }
  std::size_t num_faces() const { return face_start_.size() - 1; }

  Dart theta(Dart d) const { return theta_[d]; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart phi(Dart d) const { return sigma_[theta_[d]]; }
  Dart phi_inv(Dart d) const { return theta_[sigma_inv_[d]]; }

  // Dart leaving the same vertex straight across; only meaningful when 4-valent.
  Dart opposite(Dart d) const { return sigma_[sigma_[d]]; }

  VertexId vertex_of(Dart d) const { return vertex_of_[d]; }
  FaceId face_of(Dart d) const { return face_of_[d]; }

  // Darts of v in counterclockwise order, starting with the smallest one.
  std::span<const Dart> darts_of(VertexId v) const {
    return {vertex_darts_.data() + vertex_start_[v], vertex_darts_.data() + vertex_start_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return vertex_start_[v + 1] - vertex_start_[v]; }

  // Darts of f in phi order, starting with the smallest one.
  std::span<const Dart> face(FaceId f) const {
    return {face_darts_.data() + face_start_[f], face_darts_.data() + face_start_[f + 1]};
  }
  std::size_t face_size(FaceId f) const { return face_start_[f + 1] - face_start_[f]; }

  // Position of d inside darts_of(vertex_of(d)) / face(face_of(d)).
  int index_at_vertex(Dart d) const { return index_at_vertex_[d]; }
  int index_in_face(Dart d) const { return index_in_face_[d]; }

  bool is_four_valent() const;
  bool has_loop() const;

  const std::vector<Dart>& theta_perm() const { return theta_; }
  const std::vector<Dart>& sigma_perm() const { return sigma_; }

 private:
  std::vector<Dart> theta_;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<VertexId> vertex_of_;
  std::vector<int> index_at_vertex_;
  std::vector<Dart> vertex_darts_;
  std::vector<std::size_t> vertex_start_{0};
  std::vector<FaceId> face_of_;
  std::vector<int> index_in_face_;
  std::vector<Dart> face_darts_;
  std::vector<std::size_t> face_start_{0};
};

// p-vector of a map. i_value is set iff only 2-, 3- and 4-gons occur.
struct FaceVector {
  std::map<int, int> p;
  std::optional<int> i_value;

  int count(int k) const {
    auto it = p.find(k);
    return it == p.end() ? 0 : it->second;
  }
};

std::vector<std::vector<Dart>> faces(const PlaneGraph& g);
FaceVector face_vector(const PlaneGraph& g);

// i in 4..8 iff g is 4-valent, has only 2-, 3-, 4-gonal faces and is 2-connected.
std::optional<int> is_i_hedrite(const PlaneGraph& g);

PlaneGraph dual(const PlaneGraph& g);
PlaneGraph medial(const PlaneGraph& g);
PlaneGraph mirror(const PlaneGraph& g);

// Conjugate by a dart permutation: new dart perm[d] plays the role of old dart d.
PlaneGraph relabel(const PlaneGraph& g, std::span<const Dart> perm);

// Minimum over all root darts and both orientations of the breadth-first
// dart labelling code (a new vertex emits -degree, then each dart emits the
// label of its partner). Equal codes <=> isomorphic maps, reflections allowed.
using CanonicalCode = std::vector<std::int32_t>;

// Code of the labelling rooted at `root`; `reversed` walks vertices clockwise.
// Stops early and returns false as soon as the code exceeds `bound` (if given);
// returns true when the full code was produced.
bool rooted_code(const PlaneGraph& g, Dart root, bool reversed, CanonicalCode& out,
                 const CanonicalCode* bound = nullptr);

CanonicalCode canonical_code(const PlaneGraph& g);
std::string code_to_hex(const CanonicalCode& code);
bool is_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

// Maps with a standard layout: vertex v owns darts 4v..4v+3 in ccw order.
PlaneGraph from_quartic_theta(std::vector<Dart> theta);

}  // namespace hedrite
