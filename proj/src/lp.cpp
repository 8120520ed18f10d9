#include "gcut/lp.hpp"

#include <optional>

#include "gcut/errors.hpp"

namespace gcut {

namespace {

// Dense tableau: rows 0..m-1 are constraints, last column is the rhs.
struct Tableau {
  Matrix t;
  std::vector<std::size_t> basis;
  std::size_t vars;

  Rational& rhs(std::size_t r) { return t(r, vars); }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t(r, c);
    for (std::size_t j = 0; j <= vars; ++j) {
      if (sgn(t(r, j)) != 0) t(r, j) *= inv;
    }
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (i == r || sgn(t(i, c)) == 0) continue;
      Rational f = t(i, c);
      for (std::size_t j = 0; j <= vars; ++j) {
        if (sgn(t(r, j)) != 0) t(i, j) -= f * t(r, j);
      }
    }
    basis[r] = c;
  }

  RationalVector reduced_costs(const RationalVector& cost, const std::vector<bool>& allowed) const {
    RationalVector red(vars);
    for (std::size_t j = 0; j < vars; ++j) {
      if (!allowed[j]) continue;
      Rational z = cost[j];
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (sgn(t(i, j)) != 0 && sgn(cost[basis[i]]) != 0) z -= cost[basis[i]] * t(i, j);
      }
      red[j] = z;
    }
    return red;
  }

  // Maximizes cost·x over the current feasible basis. Returns false when unbounded.
  bool optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      RationalVector red = reduced_costs(cost, allowed);
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < vars; ++j) {
        if (allowed[j] && sgn(red[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (sgn(t(i, *entering)) <= 0) continue;
        Rational ratio = t(i, vars) / t(i, *entering);
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }
};

}  // namespace

LpResult maximize(const Matrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw Error(ErrorKind::AmbientMismatch, "LP dimensions do not agree");

  Tableau tab;
  tab.vars = n + m;
  tab.t = Matrix(m, n + m + 1);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    int s = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab.t(i, j) = s * a(i, j);
    tab.t(i, n + i) = 1;
    tab.rhs(i) = s * b[i];
    tab.basis[i] = n + i;
  }

  // Phase one: maximize minus the sum of artificials.
  RationalVector phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  std::vector<bool> all(n + m, true);
  tab.optimize(phase1, all);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= n) infeasibility += tab.rhs(i);
  }
  LpResult result;
  if (sgn(infeasibility) != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }

  // Drive remaining artificials out of the basis; redundant rows keep theirs
  // at zero, which is harmless once artificials cannot re-enter.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(tab.t(i, j)) != 0) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  RationalVector phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  std::vector<bool> originals(n + m, false);
  for (std::size_t j = 0; j < n; ++j) originals[j] = true;
  if (!tab.optimize(phase2, originals)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) result.x[tab.basis[i]] = tab.rhs(i);
  }
  result.value = dot(c, result.x);
  return result;
}

}  // namespace gcut
