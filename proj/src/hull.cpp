#include "gcut/hull.hpp"

#include <algorithm>
#include <map>

#include "gcut/errors.hpp"
#include "gcut/matrix.hpp"

namespace gcut {

namespace {

struct BoundaryFacet {
  std::vector<std::size_t> verts;  // sorted local point ids
  IntegerVector normal;
  Integer offset;
  bool alive = true;
};

Integer int_dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Hyperplane a·x = b through the given affinely independent points, oriented
// so that `inside` satisfies a·inside < b.
BoundaryFacet make_facet(std::vector<std::size_t> verts, const std::vector<IntegerVector>& coords,
                         std::size_t inside) {
  const std::size_t k = coords.front().size();
  Matrix diff(verts.size() - 1, k);
  const IntegerVector& base = coords[verts.front()];
  for (std::size_t i = 1; i < verts.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) diff(i - 1, j) = Rational(coords[verts[i]][j] - base[j]);
  Matrix ker = kernel_basis(diff);
  if (ker.cols() != 1) throw Error(ErrorKind::Internal, "facet simplex is not affinely independent");
  RationalVector n = primitive_scaling(ker.col(0));
  BoundaryFacet f;
  f.normal.resize(k);
  for (std::size_t j = 0; j < k; ++j) f.normal[j] = n[j].get_num();
  f.offset = int_dot(f.normal, base);
  Integer at_inside = int_dot(f.normal, coords[inside]);
  if (at_inside == f.offset) throw Error(ErrorKind::Internal, "degenerate orientation point");
  if (at_inside > f.offset) {
    for (auto& x : f.normal) x = -x;
    f.offset = -f.offset;
  }
  std::sort(verts.begin(), verts.end());
  f.verts = std::move(verts);
  return f;
}

Integer simplex_volume(const std::vector<std::size_t>& simplex, const std::vector<IntegerVector>& coords) {
  const std::size_t k = coords.front().size();
  IntegerMatrix m(k, IntegerVector(k));
  const IntegerVector& base = coords[simplex.front()];
  for (std::size_t i = 1; i < simplex.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) m[i - 1][j] = coords[simplex[i]][j] - base[j];
  return abs(integer_determinant(std::move(m)));
}

IntegerVector to_integer(const RationalVector& v) {
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) throw Error(ErrorKind::InvalidInput, "hull points must have integer coordinates");
    out[i] = v[i].get_num();
  }
  return out;
}

}  // namespace

HullResult hull(const std::vector<RationalVector>& points, const HullOptions& options) {
  HullResult result;
  if (points.empty()) throw Error(ErrorKind::InvalidInput, "hull of an empty point set");
  const std::size_t d = points.front().size();
  result.ambient_dim = d;

  std::vector<IntegerVector> distinct;
  std::map<IntegerVector, std::size_t> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw Error(ErrorKind::AmbientMismatch, "points of different lengths");
    IntegerVector p = to_integer(points[i]);
    if (seen.emplace(p, distinct.size()).second) {
      distinct.push_back(std::move(p));
      result.distinct_points.push_back(i);
    }
  }
  if (distinct.size() > options.max_points) {
    throw Error(ErrorKind::TooLarge, std::to_string(distinct.size()) + " distinct points exceed the oracle cap of " +
                                         std::to_string(options.max_points));
  }
  const IntegerVector& p0 = distinct.front();

  IntegerMatrix differences;
  for (std::size_t i = 1; i < distinct.size(); ++i) {
    IntegerVector v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = distinct[i][j] - p0[j];
    differences.push_back(std::move(v));
  }
  IntegerMatrix normal_lattice = integer_kernel(differences, d);
  const std::size_t k = d - normal_lattice.size();
  result.affine_dim = k;
  if (k > options.max_dim) {
    throw Error(ErrorKind::TooLarge, "affine dimension " + std::to_string(k) + " exceeds the oracle cap of " +
                                         std::to_string(options.max_dim));
  }

  // Affine hull equalities in reduced echelon form.
  if (!normal_lattice.empty()) {
    Matrix kmat(normal_lattice.size(), d);
    for (std::size_t i = 0; i < normal_lattice.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) kmat(i, j) = Rational(normal_lattice[i][j]);
    RowEchelon e = rref(kmat);
    RationalVector p0q(d);
    for (std::size_t j = 0; j < d; ++j) p0q[j] = Rational(p0[j]);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      RationalVector row = e.reduced.row(i);
      result.equalities.push_back(normalize_equality({row, dot(row, p0q)}));
    }
  }

  if (distinct.size() < 2) {
    result.degenerate = true;
    result.normalized_volume = 1;
    return result;
  }

  // Lattice basis of the direction space and integer coordinates in it.
  IntegerMatrix basis = normal_lattice.empty() ? IntegerMatrix{} : integer_kernel(normal_lattice, d);
  if (normal_lattice.empty()) {
    basis.assign(d, IntegerVector(d));
    for (std::size_t i = 0; i < d; ++i) basis[i][i] = 1;
  }
  Matrix bmat(k, d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d; ++j) bmat(i, j) = Rational(basis[i][j]);
  std::vector<std::size_t> pivot_cols = rref(bmat).pivots;
  Matrix square(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) square(j, i) = bmat(i, pivot_cols[j]);
  Matrix square_inv = *inverse(square);

  std::vector<IntegerVector> coords;
  for (const auto& p : distinct) {
    RationalVector rhs(k);
    for (std::size_t j = 0; j < k; ++j) rhs[j] = Rational(p[pivot_cols[j]] - p0[pivot_cols[j]]);
    RationalVector c = square_inv.apply(rhs);
    coords.push_back(to_integer(c));
  }

  // Initial simplex: first affinely independent points in input order.
  std::vector<std::size_t> simplex{0};
  {
    std::vector<RationalVector> rows;
    for (std::size_t i = 1; i < coords.size() && simplex.size() < k + 1; ++i) {
      RationalVector v(k);
      for (std::size_t j = 0; j < k; ++j) v[j] = Rational(coords[i][j]);
      rows.push_back(v);
      if (rank(Matrix::from_rows(rows)) == rows.size()) {
        simplex.push_back(i);
      } else {
        rows.pop_back();
      }
    }
  }
  if (simplex.size() != k + 1) throw Error(ErrorKind::Internal, "could not find an initial simplex");

  std::vector<BoundaryFacet> boundary;
  std::vector<std::vector<std::size_t>> triangulation{simplex};
  for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i != drop) verts.push_back(simplex[i]);
    }
    boundary.push_back(make_facet(std::move(verts), coords, simplex[drop]));
  }

  std::vector<bool> placed(coords.size(), false);
  for (auto v : simplex) placed[v] = true;
  for (std::size_t p = 0; p < coords.size(); ++p) {
    if (placed[p]) continue;
    placed[p] = true;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < boundary.size(); ++f) {
      if (boundary[f].alive && int_dot(boundary[f].normal, coords[p]) > boundary[f].offset) visible.push_back(f);
    }
    if (visible.empty()) continue;

    struct RidgeUse {
      int count = 0;
      std::size_t opposite = 0;
    };
    std::map<std::vector<std::size_t>, RidgeUse> ridges;
    for (std::size_t f : visible) {
      const auto& verts = boundary[f].verts;
      std::vector<std::size_t> cell = verts;
      cell.push_back(p);
      std::sort(cell.begin(), cell.end());
      triangulation.push_back(std::move(cell));
      for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<std::size_t> ridge;
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (i != drop) ridge.push_back(verts[i]);
        }
        auto& use = ridges[ridge];
        ++use.count;
        use.opposite = verts[drop];
      }
    }
    for (std::size_t f : visible) boundary[f].alive = false;
    for (auto& [ridge, use] : ridges) {
      if (use.count != 1) continue;
      std::vector<std::size_t> verts = ridge;
      verts.push_back(p);
      boundary.push_back(make_facet(std::move(verts), coords, use.opposite));
    }
  }

  // Volumes are measured in the lattice generated by the points.
  IntegerMatrix spanned;
  for (std::size_t i = 1; i < coords.size(); ++i) {
    IntegerVector v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = coords[i][j] - coords[0][j];
    spanned.push_back(std::move(v));
  }
  const Integer index = lattice_index(std::move(spanned), k);
  for (const auto& cell : triangulation) {
    Integer vol = simplex_volume(cell, coords) / index;
    result.normalized_volume += vol;
    result.simplex_volumes.push_back(vol);
    std::vector<std::size_t> original;
    for (auto i : cell) original.push_back(result.distinct_points[i]);
    std::sort(original.begin(), original.end());
    result.triangulation.push_back(std::move(original));
  }

  // Facets: merge coplanar boundary simplices, then express the normal in
  // ambient coordinates orthogonally to the affine hull.
  std::map<std::pair<IntegerVector, Integer>, bool> planes;
  for (const auto& f : boundary) {
    if (f.alive) planes[{f.normal, f.offset}] = true;
  }
  Matrix gram_inv = *inverse(bmat * bmat.transpose());
  RationalVector p0q(d);
  for (std::size_t j = 0; j < d; ++j) p0q[j] = Rational(p0[j]);
  for (const auto& [plane, unused] : planes) {
    RationalVector a(k);
    for (std::size_t j = 0; j < k; ++j) a[j] = Rational(plane.first[j]);
    RationalVector n = bmat.apply_left(gram_inv.apply(a));
    result.facets.push_back({n, Rational(plane.second) + dot(n, p0q)});
  }
  result.facets = canonical_set(result.facets);
  return result;
}

Integer normalized_volume(const std::vector<RationalVector>& points, const HullOptions& options) {
  return hull(points, options).normalized_volume;
}

HRepresentation to_hrep(const HullResult& result, std::vector<std::string> keys) {
  HRepresentation h;
  h.equalities = result.equalities;
  h.inequalities = result.facets;
  h.family = "oracle";
  h.complete = true;
  h.keys = std::move(keys);
  return h;
}

FacetDiff facets_equal(const std::vector<LinearInequality>& a, const std::vector<LinearInequality>& b) {
  auto ca = canonical_set(a);
  auto cb = canonical_set(b);
  for (const auto& q : ca) {
    if (!q.coeffs.empty() && !cb.empty() && q.coeffs.size() != cb.front().coeffs.size()) {
      throw Error(ErrorKind::AmbientMismatch, "inequality sets live in different spaces");
    }
  }
  FacetDiff diff;
  std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(diff.missing), inequality_less);
  std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(), std::back_inserter(diff.extra), inequality_less);
  diff.equal = diff.missing.empty() && diff.extra.empty();
  return diff;
}

namespace {

// Reduced echelon form of the augmented equality system, used as a
// canonical description of the affine hull.
Matrix equality_echelon(const std::vector<LinearEquality>& eqs) {
  if (eqs.empty()) return Matrix();
  const std::size_t d = eqs.front().coeffs.size();
  Matrix m(eqs.size(), d + 1);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = eqs[i].coeffs[j];
    m(i, d) = eqs[i].rhs;
  }
  RowEchelon e = rref(m);
  Matrix out(e.pivots.size(), d + 1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j <= d; ++j) out(i, j) = e.reduced(i, j);
  return out;
}

}  // namespace

FacetDiff facets_equal(const HRepresentation& a, const HRepresentation& b) {
  FacetDiff diff = facets_equal(a.inequalities, b.inequalities);
  if (!(equality_echelon(a.equalities) == equality_echelon(b.equalities))) diff.equal = false;
  return diff;
}

}  // namespace gcut
