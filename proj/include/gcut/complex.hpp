#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gcut {

using Label = int;
/// Subset of a ground set, bit i standing for the i-th smallest label.
using Mask = std::uint64_t;

/// Sorted, duplicate-free set of labels.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<Label> elements);  // sorts and dedups

  const std::vector<Label>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Label x) const;
  bool is_subset_of(const Face& other) const;

  /// Comma-separated ascending labels; "" for the empty face.
  std::string key() const;
  static Face parse(const std::string& key);

  bool operator==(const Face& other) const = default;
  /// Graded-lex: by cardinality, then lexicographically.
  std::strong_ordering operator<=>(const Face& other) const;

 private:
  std::vector<Label> elements_;
};

Face face_union(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);

/// Graded-lex order on subsets encoded as masks over the same ground set.
bool graded_lex_less(Mask a, Mask b);
/// All subsets of an n-element set in graded-lex order.
std::vector<Mask> graded_lex_subsets(std::size_t n);

inline int popcount(Mask m) { return __builtin_popcountll(m); }

class SimplicialComplex {
 public:
  SimplicialComplex() : SimplicialComplex(std::vector<Label>{}, std::vector<std::vector<Label>>{}) {}

  /// Throws InvalidFacet when a set is not inside the ground set. Dominated
  /// sets are dropped silently.
  static SimplicialComplex from_facets(std::vector<Label> ground_set, const std::vector<std::vector<Label>>& facets);
  static SimplicialComplex from_faces(std::vector<Label> ground_set, const std::vector<Face>& facets);

  const std::vector<Label>& ground_set() const { return ground_; }
  std::size_t num_vertices() const { return ground_.size(); }
  const std::vector<Face>& facets() const { return facets_; }
  /// Nonempty faces, graded-lex.
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<std::string> face_keys() const;

  std::optional<std::size_t> face_index(const Face& f) const;
  bool contains(const Face& f) const;
  /// Labels that lie in at least one facet.
  std::vector<Label> vertices() const;

  Mask mask_of(const Face& f) const;
  Face face_of(Mask m) const;
  const std::vector<Mask>& face_masks() const { return face_masks_; }
  const std::vector<Mask>& facet_masks() const { return facet_masks_; }
  /// All subsets of the ground set, graded-lex. Throws TooLarge beyond 24 labels.
  std::vector<Mask> subsets() const;

  SimplicialComplex relabel(const std::map<Label, Label>& map) const;

  bool operator==(const SimplicialComplex& other) const {
    return ground_ == other.ground_ && facets_ == other.facets_;
  }

 private:
  SimplicialComplex(std::vector<Label> ground, const std::vector<std::vector<Label>>& facets);

  std::vector<Label> ground_;
  std::vector<Face> facets_;
  std::vector<Face> faces_;
  std::vector<Mask> facet_masks_;
  std::vector<Mask> face_masks_;
  std::map<Mask, std::size_t> index_of_mask_;
};

SimplicialComplex simplex(int n);
SimplicialComplex boundary(int n);
SimplicialComplex turtle(int n, int k);
/// ℐ = [n] \ [k], the common part of the turtle facets.
Face turtle_core(int n, int k);
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& base, Label apex);
SimplicialComplex k_cone(const SimplicialComplex& base, const std::vector<Label>& apexes);
SimplicialComplex alexander_dual(const SimplicialComplex& c);
SimplicialComplex d_mn(int m, int n);
SimplicialComplex lawrence_lifting(const SimplicialComplex& c, Label apex);
SimplicialComplex suspension(const SimplicialComplex& graph);

/// Disjoint union of 2^[m] on 1..m and 2^[n] on m+1..m+n.
SimplicialComplex disjoint_simplices(int m, int n);

bool is_graph(const SimplicialComplex& c);
/// Connected components of the vertex set (ghost vertices excluded), each as a
/// complex on its own vertices.
std::vector<SimplicialComplex> components(const SimplicialComplex& c);

}  // namespace gcut
