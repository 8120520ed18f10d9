#pragma once

#include "gcut/matrix.hpp"
#include "gcut/rational.hpp"

namespace gcut {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector x;
};

/// maximize c·x subject to A x = b, x ≥ 0. Exact two-phase simplex with
/// Bland's rule.
LpResult maximize(const Matrix& a, const RationalVector& b, const RationalVector& c);

}  // namespace gcut
