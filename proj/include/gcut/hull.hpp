#pragma once

#include <cstddef>
#include <vector>

#include "gcut/polytope.hpp"
#include "gcut/rational.hpp"

namespace gcut {

struct HullOptions {
  std::size_t max_points = 64;  // distinct points
  std::size_t max_dim = 14;     // affine dimension
};

struct HullResult {
  std::size_t ambient_dim = 0;
  std::size_t affine_dim = 0;
  bool degenerate = false;  // fewer than two distinct points
  /// Facets of the hull, outward, primitive integer normals orthogonal to the
  /// affine hull, sorted canonically.
  std::vector<LinearInequality> facets;
  /// Affine hull, one equality per row of a reduced echelon basis.
  std::vector<LinearEquality> equalities;
  /// Placing triangulation; each simplex lists input point indices.
  std::vector<std::vector<std::size_t>> triangulation;
  /// Volume of each simplex in `triangulation`, in units of the point lattice.
  std::vector<Integer> simplex_volumes;
  Integer normalized_volume = 0;
  /// Input index of the first occurrence of each distinct point.
  std::vector<std::size_t> distinct_points;
};

/// Exact convex hull of integer points. Points are placed in input order; a
/// point beyond no current facet is skipped. Throws TooLarge above the caps
/// and InvalidInput for non-integral coordinates.
HullResult hull(const std::vector<RationalVector>& points, const HullOptions& options = {});

/// Normalized volume with respect to the affine lattice generated by the points.
Integer normalized_volume(const std::vector<RationalVector>& points, const HullOptions& options = {});

HRepresentation to_hrep(const HullResult& result, std::vector<std::string> keys);

struct FacetDiff {
  bool equal = true;
  std::vector<LinearInequality> missing;  // in the first set only
  std::vector<LinearInequality> extra;    // in the second set only
};

FacetDiff facets_equal(const std::vector<LinearInequality>& a, const std::vector<LinearInequality>& b);
/// Compares inequality sets and the affine hulls spanned by the equalities.
FacetDiff facets_equal(const HRepresentation& a, const HRepresentation& b);

}  // namespace gcut
