#include "gcut/polytope.hpp"

#include <algorithm>

#include "gcut/errors.hpp"

namespace gcut {

std::vector<MarginRow> margin_rows(const SimplicialComplex& c) {
  std::vector<MarginRow> rows;
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    Mask f = c.facet_masks()[i];
    std::vector<Mask> subs;
    for (Mask s = f;; s = (s - 1) & f) {
      subs.push_back(s);
      if (s == 0) break;
    }
    std::sort(subs.begin(), subs.end(), graded_lex_less);
    for (Mask h : subs) rows.push_back({c.face_of(h), c.facets()[i]});
  }
  return rows;
}

std::vector<std::string> margin_keys(const SimplicialComplex& c) {
  std::vector<std::string> keys;
  for (const auto& r : margin_rows(c)) keys.push_back(r.key());
  return keys;
}

std::vector<RationalVector> VertexMatrix::points() const {
  std::vector<RationalVector> pts;
  for (std::size_t j = 0; j < entries.cols(); ++j) pts.push_back(entries.col(j));
  return pts;
}

namespace {

VertexMatrix subset_columns(const SimplicialComplex& c, std::vector<std::string> row_keys) {
  VertexMatrix v;
  v.row_keys = std::move(row_keys);
  auto subsets = c.subsets();
  for (Mask s : subsets) v.col_keys.push_back(c.face_of(s).key());
  v.entries = Matrix(v.row_keys.size(), subsets.size());
  return v;
}

}  // namespace

VertexMatrix marg_vertices(const SimplicialComplex& c) {
  auto rows = margin_rows(c);
  VertexMatrix v = subset_columns(c, margin_keys(c));
  std::vector<Mask> h_masks, f_masks;
  for (const auto& r : rows) {
    h_masks.push_back(c.mask_of(r.h));
    f_masks.push_back(c.mask_of(r.f));
  }
  auto subsets = c.subsets();
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((subsets[j] & f_masks[i]) == h_masks[i]) v.entries(i, j) = 1;
    }
  }
  return v;
}

VertexMatrix corr_vertices(const SimplicialComplex& c) {
  VertexMatrix v = subset_columns(c, c.face_keys());
  auto subsets = c.subsets();
  const auto& faces = c.face_masks();
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if ((faces[i] & subsets[j]) == faces[i]) v.entries(i, j) = 1;
    }
  }
  return v;
}

VertexMatrix gcut_vertices(const SimplicialComplex& c) {
  VertexMatrix v = subset_columns(c, c.face_keys());
  auto subsets = c.subsets();
  const auto& faces = c.face_masks();
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (popcount(faces[i] & subsets[j]) % 2 == 1) v.entries(i, j) = 1;
    }
  }
  return v;
}

VertexMatrix cut_vertices(const SimplicialComplex& graph) {
  if (!is_graph(graph)) throw Error(ErrorKind::NotAGraph, "cut polytopes are defined for graphs");
  const std::size_t n = graph.num_vertices();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cut polytope of an empty ground set");
  std::vector<Mask> edges;
  VertexMatrix v;
  for (std::size_t i = 0; i < graph.faces().size(); ++i) {
    if (graph.faces()[i].size() == 2) {
      edges.push_back(graph.face_masks()[i]);
      v.row_keys.push_back(graph.faces()[i].key());
    }
  }
  const Mask full = (Mask{1} << n) - 1;
  auto subsets = graded_lex_subsets(n - 1);
  v.entries = Matrix(edges.size(), subsets.size());
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    Mask s = subsets[j];
    v.col_keys.push_back(graph.face_of(s).key() + "|" + graph.face_of(full & ~s).key());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (popcount(edges[i] & s) == 1) v.entries(i, j) = 1;
    }
  }
  return v;
}

LinearInequality normalize(const LinearInequality& ineq) {
  if (is_zero(ineq.coeffs)) {
    return {ineq.coeffs, Rational(sgn(ineq.rhs))};
  }
  Rational factor;
  LinearInequality out;
  out.coeffs = primitive_scaling(ineq.coeffs, &factor);
  out.rhs = ineq.rhs * factor;
  return out;
}

LinearEquality normalize_equality(const LinearEquality& eq) {
  LinearEquality out = normalize(eq);
  for (const auto& x : out.coeffs) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0) {
      for (auto& y : out.coeffs) y = -y;
      out.rhs = -out.rhs;
    }
    break;
  }
  return out;
}

bool inequality_less(const LinearInequality& a, const LinearInequality& b) {
  if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
  }
  return a.rhs < b.rhs;
}

std::vector<LinearInequality> canonical_set(const std::vector<LinearInequality>& ineqs) {
  std::vector<LinearInequality> out;
  out.reserve(ineqs.size());
  for (const auto& q : ineqs) out.push_back(normalize(q));
  std::sort(out.begin(), out.end(), inequality_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational evaluate(const LinearInequality& ineq, const RationalVector& point) {
  if (ineq.coeffs.size() != point.size()) {
    throw Error(ErrorKind::AmbientMismatch, "inequality has " + std::to_string(ineq.coeffs.size()) +
                                                " coefficients but the point has " + std::to_string(point.size()));
  }
  return dot(ineq.coeffs, point);
}

std::optional<std::size_t> first_violation(const LinearInequality& ineq, const VertexMatrix& v) {
  if (ineq.coeffs.size() != v.dimension()) {
    throw Error(ErrorKind::AmbientMismatch, "inequality and vertex matrix live in different spaces");
  }
  RationalVector values = v.entries.apply_left(ineq.coeffs);
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] > ineq.rhs) return j;
  }
  return std::nullopt;
}

bool is_valid(const LinearInequality& ineq, const VertexMatrix& v) { return !first_violation(ineq, v).has_value(); }

std::vector<std::size_t> tight_set(const LinearInequality& ineq, const VertexMatrix& v) {
  if (ineq.coeffs.size() != v.dimension()) {
    throw Error(ErrorKind::AmbientMismatch, "inequality and vertex matrix live in different spaces");
  }
  RationalVector values = v.entries.apply_left(ineq.coeffs);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == ineq.rhs) out.push_back(j);
  }
  return out;
}

bool membership(const RationalVector& point, const HRepresentation& h, MembershipMode mode) {
  for (const auto& e : h.equalities) {
    if (evaluate(e, point) != e.rhs) return false;
  }
  std::vector<LinearInequality> normalized;
  for (const auto& q : h.inequalities) normalized.push_back(normalize(q));
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    const auto& q = h.inequalities[i];
    Rational value = evaluate(q, point);
    if (value > q.rhs) return false;
    if (mode == MembershipMode::RelativeInterior && value == q.rhs) {
      LinearInequality opposite = normalized[i];
      for (auto& x : opposite.coeffs) x = -x;
      opposite.rhs = -opposite.rhs;
      opposite = normalize(opposite);
      bool implicit = std::find(normalized.begin(), normalized.end(), opposite) != normalized.end();
      if (!implicit) return false;
    }
  }
  return true;
}

RationalVector centroid(const VertexMatrix& v) {
  RationalVector c(v.dimension());
  if (v.count() == 0) return c;
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < v.count(); ++j) s += v.entries(i, j);
    c[i] = s / static_cast<long>(v.count());
  }
  return c;
}

}  // namespace gcut
