#include "gcut/gale.hpp"

#include <algorithm>
#include <functional>

#include "gcut/complex.hpp"
#include "gcut/errors.hpp"
#include "gcut/lp.hpp"

namespace gcut {

namespace {

Matrix homogenize(const Matrix& v) {
  Matrix h(v.rows() + 1, v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) {
    h(0, j) = 1;
    for (std::size_t i = 0; i < v.rows(); ++i) h(i + 1, j) = v(i, j);
  }
  return h;
}

}  // namespace

GaleTransform gale(const VertexMatrix& v) {
  GaleTransform g;
  g.labels = v.col_keys;
  g.homogenized = homogenize(v.entries);
  RowEchelon e = rref(g.homogenized);
  if (e.pivots.size() != g.homogenized.rows()) {
    throw Error(ErrorKind::NotFullDimensional, "vertices span an affine space of dimension " +
                                                   std::to_string(e.pivots.size() - 1) + " inside R^" +
                                                   std::to_string(v.dimension()));
  }
  std::vector<bool> pivot(g.homogenized.cols(), false);
  for (auto p : e.pivots) pivot[p] = true;
  for (std::size_t c = 0; c < pivot.size(); ++c) {
    if (!pivot[c]) g.free_columns.push_back(c);
  }
  g.vectors = kernel_basis(g.homogenized);
  return g;
}

GaleTransform turtle_gale(int n, int k) {
  SimplicialComplex t = turtle(n, k);
  Mask core = t.mask_of(turtle_core(n, k));
  std::vector<Mask> basis;
  for (Mask s : t.subsets()) {
    if ((s & core) == s) basis.push_back(s);
  }
  GaleTransform g;
  VertexMatrix v = gcut_vertices(t);
  g.labels = v.col_keys;
  g.homogenized = homogenize(v.entries);
  auto subsets = t.subsets();
  g.vectors = Matrix(subsets.size(), basis.size());
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    Mask meet = subsets[j] & core;
    std::size_t col = std::find(basis.begin(), basis.end(), meet) - basis.begin();
    g.vectors(j, col) = popcount(subsets[j]) % 2 ? -1 : 1;
  }
  return g;
}

bool same_kernel(const GaleTransform& a, const GaleTransform& b) {
  if (a.size() != b.size()) return false;
  std::size_t ra = gcut::rank(a.vectors), rb = gcut::rank(b.vectors);
  Matrix both(a.size(), a.rank() + b.rank());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) both(i, j) = a.vectors(i, j);
    for (std::size_t j = 0; j < b.rank(); ++j) both(i, a.rank() + j) = b.vectors(i, j);
  }
  return ra == rb && gcut::rank(both) == ra;
}

bool is_face(const GaleTransform& g, const std::vector<std::size_t>& on_face) {
  std::vector<bool> in(g.size(), false);
  for (auto j : on_face) {
    if (j >= g.size()) throw Error(ErrorKind::InvalidInput, "vertex index out of range");
    in[j] = true;
  }
  std::vector<std::size_t> off;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (!in[j]) off.push_back(j);
  }
  if (off.empty()) return true;
  const std::size_t r = g.rank();
  if (r == 0) return true;

  // Variables: mu_i = lambda_i - t (i off the face), t+, t-.
  const std::size_t m = off.size();
  Matrix a(r + 1, m + 2);
  RationalVector b(r + 1);
  for (std::size_t row = 0; row < r; ++row) {
    Rational total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      a(row, i) = g.vectors(off[i], row);
      total += g.vectors(off[i], row);
    }
    a(row, m) = total;
    a(row, m + 1) = -total;
  }
  for (std::size_t i = 0; i < m; ++i) a(r, i) = 1;
  a(r, m) = static_cast<long>(m);
  a(r, m + 1) = -static_cast<long>(m);
  b[r] = 1;
  RationalVector c(m + 2);
  c[m] = 1;
  c[m + 1] = -1;
  LpResult res = maximize(a, b, c);
  return res.status == LpStatus::Optimal && sgn(res.value) > 0;
}

std::vector<CoFace> cofacets(const GaleTransform& g, std::size_t max_vertices) {
  const std::size_t n = g.size();
  if (n > max_vertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices exceed the co-facet cap of " +
                                         std::to_string(max_vertices));
  }
  const std::size_t r = g.rank();
  const std::size_t full_rank = g.homogenized.rows();
  std::vector<CoFace> out;

  auto check_candidate = [&](const std::vector<std::size_t>& circuit) {
    std::vector<bool> off(n, false);
    for (auto j : circuit) off[j] = true;
    std::vector<std::size_t> on;
    for (std::size_t j = 0; j < n; ++j) {
      if (!off[j]) on.push_back(j);
    }
    if (!is_face(g, on)) return;
    Matrix cols(full_rank, on.size());
    for (std::size_t i = 0; i < full_rank; ++i)
      for (std::size_t j = 0; j < on.size(); ++j) cols(i, j) = g.homogenized(i, on[j]);
    if (gcut::rank(cols) + 1 != full_rank) return;
    out.push_back({circuit});
  };

  // Circuits are independent sets plus one later element whose reduction
  // against them leaves a dependency with positive coefficients throughout.
  struct Reduced {
    RationalVector v;     // reduced Gale vector
    std::size_t pivot;    // first nonzero coordinate of v
    RationalVector expr;  // v = sum expr[i] * b_{current[i]}
  };
  std::vector<std::size_t> current;
  std::vector<Reduced> basis;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    for (std::size_t j = start; j < n; ++j) {
      RationalVector v = g.vectors.row(j);
      RationalVector expr(current.size());
      for (const auto& e : basis) {
        if (sgn(v[e.pivot]) == 0) continue;
        Rational f = v[e.pivot] / e.v[e.pivot];
        for (std::size_t i = 0; i < r; ++i) v[i] -= f * e.v[i];
        for (std::size_t i = 0; i < e.expr.size(); ++i) expr[i] -= f * e.expr[i];
      }
      std::size_t pivot = 0;
      while (pivot < r && sgn(v[pivot]) == 0) ++pivot;
      current.push_back(j);
      if (pivot == r) {
        // b_j + sum expr[i] b_i = 0.
        if (std::all_of(expr.begin(), expr.end(), [](const Rational& x) { return sgn(x) > 0; })) {
          check_candidate(current);
        }
      } else if (current.size() <= r) {
        expr.push_back(1);
        basis.push_back({std::move(v), pivot, std::move(expr)});
        extend(j + 1);
        basis.pop_back();
      }
      current.pop_back();
    }
  };
  extend(0);

  std::sort(out.begin(), out.end(), [](const CoFace& a, const CoFace& b) {
    if (a.off_face.size() != b.off_face.size()) return a.off_face.size() < b.off_face.size();
    return a.off_face < b.off_face;
  });
  return out;
}

}  // namespace gcut
