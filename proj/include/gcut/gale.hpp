#pragma once

#include <string>
#include <vector>

#include "gcut/matrix.hpp"
#include "gcut/polytope.hpp"

namespace gcut {

struct GaleTransform {
  std::vector<std::string> labels;  // one per vertex
  Matrix vectors;                   // row j is b_j
  Matrix homogenized;               // vertex matrix with a leading row of ones
  std::vector<std::size_t> free_columns;

  std::size_t size() const { return vectors.rows(); }
  std::size_t rank() const { return vectors.cols(); }
};

/// Rows of the free-column kernel basis of the homogenized vertex matrix.
/// Throws NotFullDimensional when the vertices do not span their ambient space.
GaleTransform gale(const VertexMatrix& v);

/// b_S = (-1)^#S e_{S∩ℐ} with the basis indexed by T ⊆ ℐ in graded-lex order.
GaleTransform turtle_gale(int n, int k);

/// True when two configurations on the same vertices span the same kernel.
bool same_kernel(const GaleTransform& a, const GaleTransform& b);

/// `on_face` lists the vertex indices J. True iff J is everything or 0 lies in
/// the relative interior of conv{b_i : i ∉ J}.
bool is_face(const GaleTransform& g, const std::vector<std::size_t>& on_face);

struct CoFace {
  std::vector<std::size_t> off_face;  // vertices not on the facet
  bool operator==(const CoFace&) const = default;
};

/// Complements of facets, found as positive circuits of the Gale vectors and
/// confirmed by the face criterion and the affine rank of the facet.
std::vector<CoFace> cofacets(const GaleTransform& g, std::size_t max_vertices = 64);

}  // namespace gcut
