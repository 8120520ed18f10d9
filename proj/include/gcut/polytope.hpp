#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcut/complex.hpp"
#include "gcut/matrix.hpp"
#include "gcut/rational.hpp"

namespace gcut {

/// Index (H,F) of the marginal polytope's ambient space, H ⊆ F ∈ facets.
struct MarginRow {
  Face h;
  Face f;
  /// "H|F", e.g. "2|2,3" or "|1,2".
  std::string key() const { return h.key() + "|" + f.key(); }
  bool operator==(const MarginRow&) const = default;
};

/// Rows ordered by facet, then by H graded-lex inside the facet.
std::vector<MarginRow> margin_rows(const SimplicialComplex& c);
std::vector<std::string> margin_keys(const SimplicialComplex& c);

/// Columns are vertices. Row keys name coordinates, column keys name the
/// subset S that produced each vertex.
struct VertexMatrix {
  std::vector<std::string> row_keys;
  std::vector<std::string> col_keys;
  Matrix entries;

  std::size_t dimension() const { return entries.rows(); }
  std::size_t count() const { return entries.cols(); }
  RationalVector vertex(std::size_t j) const { return entries.col(j); }
  std::vector<RationalVector> points() const;
};

VertexMatrix marg_vertices(const SimplicialComplex& c);
VertexMatrix corr_vertices(const SimplicialComplex& c);
VertexMatrix gcut_vertices(const SimplicialComplex& c);
/// Cut polytope of a graph. Columns are S ⊆ V \ {last vertex}, keyed "S|T";
/// rows are the edges.
VertexMatrix cut_vertices(const SimplicialComplex& graph);

/// a·x ≤ rhs
struct LinearInequality {
  RationalVector coeffs;
  Rational rhs;

  bool is_trivial() const { return is_zero(coeffs); }
  /// Zero functional with a negative right-hand side.
  bool is_infeasible() const { return is_zero(coeffs) && sgn(rhs) < 0; }
  bool operator==(const LinearInequality&) const = default;
};

/// a·x = rhs
using LinearEquality = LinearInequality;

/// Positive multiple with a primitive integer coefficient vector. The zero
/// functional is scaled so that rhs ∈ {-1, 0, 1}.
LinearInequality normalize(const LinearInequality& ineq);
/// Primitive integer coefficients with a positive leading nonzero.
LinearEquality normalize_equality(const LinearEquality& eq);
bool inequality_less(const LinearInequality& a, const LinearInequality& b);
/// Normalizes every inequality, sorts, and drops duplicates.
std::vector<LinearInequality> canonical_set(const std::vector<LinearInequality>& ineqs);

Rational evaluate(const LinearInequality& ineq, const RationalVector& point);
/// Index of the first violating vertex, or nullopt when the inequality is valid.
std::optional<std::size_t> first_violation(const LinearInequality& ineq, const VertexMatrix& v);
bool is_valid(const LinearInequality& ineq, const VertexMatrix& v);
/// Vertices on which the inequality is tight.
std::vector<std::size_t> tight_set(const LinearInequality& ineq, const VertexMatrix& v);

struct HRepresentation {
  std::vector<LinearEquality> equalities;
  std::vector<LinearInequality> inequalities;
  std::string family;
  bool complete = true;
  std::vector<std::string> keys;  // coordinate names
};

enum class MembershipMode { Closure, RelativeInterior };

/// Closure: every inequality and equality holds. Relative interior: equalities
/// hold and every inequality that is not tight on the whole polytope holds
/// strictly. Implicit equalities among the inequalities are detected by
/// pairing a with -a.
bool membership(const RationalVector& point, const HRepresentation& h, MembershipMode mode);

RationalVector centroid(const VertexMatrix& v);

}  // namespace gcut
