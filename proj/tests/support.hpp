#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gcut/complex.hpp"
#include "gcut/polytope.hpp"
#include "gcut/rational.hpp"

namespace gcut::testing {

inline Rational q(const std::string& s) { return parse_rational(s); }

inline SimplicialComplex cx(std::vector<Label> ground, const std::vector<std::vector<Label>>& facets) {
  return SimplicialComplex::from_facets(std::move(ground), facets);
}

// Every downward-closed family on [n] containing the empty set (19 for n = 3, 167 for n = 4).
inline std::vector<SimplicialComplex> all_complexes(int n) {
  std::vector<Label> ground(n);
  std::iota(ground.begin(), ground.end(), 1);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> nonempty;
  for (Mask s = 1; s <= full; ++s) nonempty.push_back(s);
  std::vector<SimplicialComplex> out;
  const std::size_t m = nonempty.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<Mask> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick >> i & 1) chosen.push_back(nonempty[i]);
    }
    bool antichain = true;
    for (std::size_t i = 0; i < chosen.size() && antichain; ++i) {
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (i != j && (chosen[i] & chosen[j]) == chosen[i]) {
          antichain = false;
          break;
        }
      }
    }
    if (!antichain) continue;
    std::vector<std::vector<Label>> facets;
    for (Mask f : chosen) {
      std::vector<Label> labels;
      for (int b = 0; b < n; ++b) {
        if (f >> b & 1) labels.push_back(b + 1);
      }
      facets.push_back(labels);
    }
    out.push_back(cx(ground, facets));
  }
  return out;
}

inline std::vector<SimplicialComplex> complexes_up_to(int n) {
  std::vector<SimplicialComplex> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& c : all_complexes(k)) out.push_back(std::move(c));
  }
  return out;
}

// Inequality from a sparse key -> coefficient map over the given coordinate keys.
inline LinearInequality ineq(const std::vector<std::string>& keys, const std::map<std::string, std::string>& coeffs,
                             const std::string& rhs) {
  LinearInequality out{RationalVector(keys.size()), q(rhs)};
  for (const auto& [k, v] : coeffs) {
    auto it = std::find(keys.begin(), keys.end(), k);
    if (it == keys.end()) throw std::runtime_error("unknown key " + k);
    out.coeffs[static_cast<std::size_t>(it - keys.begin())] = q(v);
  }
  return out;
}

inline std::set<std::vector<std::size_t>> tight_sets(const std::vector<LinearInequality>& ineqs,
                                                     const std::vector<RationalVector>& points) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& f : ineqs) {
    std::vector<std::size_t> tight;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (evaluate(f, points[j]) == f.rhs) tight.push_back(j);
    }
    out.insert(tight);
  }
  return out;
}

// Slow facet oracle for small 0/1 point sets: projects onto coordinates on which
// the affine hull is a graph, then enumerates all hyperplanes through k points
// with 64-bit cofactor arithmetic. Returns the tight index sets.
inline std::set<std::vector<std::size_t>> slow_facet_tight_sets(const std::vector<std::vector<std::int64_t>>& points) {
  std::set<std::vector<std::size_t>> out;
  if (points.empty()) return out;
  const std::size_t d = points.front().size();
  // Pivot coordinates of the difference span via fraction-free elimination.
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& p : points) {
    std::vector<std::int64_t> r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = p[i] - points[0][i];
    rows.push_back(r);
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::int64_t a = rows[rank][col], b = rows[r][col];
      std::int64_t g = 0;
      for (std::size_t c = 0; c < d; ++c) {
        rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
        g = std::gcd(g, rows[r][c]);
      }
      if (g > 1) {
        for (auto& x : rows[r]) x /= g;
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  const std::size_t k = rank;
  if (k == 0) return out;
  std::vector<std::vector<std::int64_t>> proj;
  for (const auto& p : points) {
    std::vector<std::int64_t> r;
    for (std::size_t c : pivots) r.push_back(p[c]);
    proj.push_back(r);
  }
  auto det = [](std::vector<std::vector<std::int64_t>> m) {
    const std::size_t n = m.size();
    if (n == 0) return std::int64_t{1};
    std::int64_t sign = 1, prev = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t sel = i;
      while (sel < n && m[sel][i] == 0) ++sel;
      if (sel == n) return std::int64_t{0};
      if (sel != i) {
        std::swap(m[sel], m[i]);
        sign = -sign;
      }
      for (std::size_t r = i + 1; r < n; ++r) {
        for (std::size_t c = i + 1; c < n; ++c) m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
      }
      prev = m[i][i];
    }
    return sign * m[n - 1][n - 1];
  };
  const std::size_t n = proj.size();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    // Normal through proj[idx]: cofactors of the (k-1) x k difference matrix.
    std::vector<std::int64_t> normal(k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::vector<std::int64_t>> minor;
      for (std::size_t r = 1; r < k; ++r) {
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < k; ++c) {
          if (c != j) row.push_back(proj[idx[r]][c] - proj[idx[0]][c]);
        }
        minor.push_back(row);
      }
      normal[j] = ((j % 2) ? -1 : 1) * det(minor);
      nonzero = nonzero || normal[j] != 0;
    }
    if (nonzero) {
      std::int64_t offset = 0;
      for (std::size_t c = 0; c < k; ++c) offset += normal[c] * proj[idx[0]][c];
      bool above = false, below = false;
      std::vector<std::size_t> tight;
      for (std::size_t p = 0; p < n; ++p) {
        std::int64_t v = -offset;
        for (std::size_t c = 0; c < k; ++c) v += normal[c] * proj[p][c];
        if (v > 0) above = true;
        if (v < 0) below = true;
        if (v == 0) tight.push_back(p);
      }
      if (!(above && below)) out.insert(tight);
    }
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

// Golden reference matrices with their row and column labels.
struct Golden {
  std::vector<std::string> rows, cols;
  std::vector<std::vector<std::string>> entries;
};

inline Golden golden_u_12_23() {
  return {{"|1,2", "1|1,2", "2|1,2", "1,2|1,2", "|2,3", "2|2,3", "3|2,3", "2,3|2,3"},
          {"", "1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"},
          {{"1", "0", "0", "1", "0", "0", "0", "0"},
           {"0", "1", "0", "0", "0", "1", "0", "0"},
           {"0", "0", "1", "0", "0", "0", "1", "0"},
           {"0", "0", "0", "0", "1", "0", "0", "1"},
           {"1", "1", "0", "0", "0", "0", "0", "0"},
           {"0", "0", "1", "0", "1", "0", "0", "0"},
           {"0", "0", "0", "1", "0", "1", "0", "0"},
           {"0", "0", "0", "0", "0", "0", "1", "1"}}};
}

inline Golden golden_v_12_23() {
  return {{"1", "2", "3", "1,2", "2,3"},
          {"", "1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"},
          {{"0", "1", "0", "0", "1", "1", "0", "1"},
           {"0", "0", "1", "0", "1", "0", "1", "1"},
           {"0", "0", "0", "1", "0", "1", "1", "1"},
           {"0", "0", "0", "0", "1", "0", "0", "1"},
           {"0", "0", "0", "0", "0", "0", "1", "1"}}};
}

inline Golden golden_phi_123_234() {
  std::vector<std::string> keys{"1", "2", "3", "4", "1,2", "1,3", "2,3", "2,4", "3,4", "1,2,3", "2,3,4"};
  return {keys,
          keys,
          {{"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
           {"0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
           {"0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
           {"0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0"},
           {"1", "1", "0", "0", "-2", "0", "0", "0", "0", "0", "0"},
           {"1", "0", "1", "0", "0", "-2", "0", "0", "0", "0", "0"},
           {"0", "1", "1", "0", "0", "0", "-2", "0", "0", "0", "0"},
           {"0", "1", "0", "1", "0", "0", "0", "-2", "0", "0", "0"},
           {"0", "0", "1", "1", "0", "0", "0", "0", "-2", "0", "0"},
           {"1", "1", "1", "0", "-2", "-2", "-2", "0", "0", "4", "0"},
           {"0", "1", "1", "1", "0", "0", "-2", "-2", "-2", "0", "4"}}};
}

inline Golden golden_d_123_234() {
  return {{"1", "2", "3", "4", "1,2", "1,3", "2,3", "2,4", "3,4", "1,2,3", "2,3,4"},
          {"", "1", "2", "3", "4", "1,2", "1,3", "1,4", "2,3", "2,4", "3,4", "1,2,3", "1,2,4", "1,3,4", "2,3,4",
           "1,2,3,4"},
          {{"0", "1", "0", "0", "0", "1", "1", "1", "0", "0", "0", "1", "1", "1", "0", "1"},
           {"0", "0", "1", "0", "0", "1", "0", "0", "1", "1", "0", "1", "1", "0", "1", "1"},
           {"0", "0", "0", "1", "0", "0", "1", "0", "1", "0", "1", "1", "0", "1", "1", "1"},
           {"0", "0", "0", "0", "1", "0", "0", "1", "0", "1", "1", "0", "1", "1", "1", "1"},
           {"0", "1", "1", "0", "0", "0", "1", "1", "1", "1", "0", "0", "0", "1", "1", "0"},
           {"0", "1", "0", "1", "0", "1", "0", "1", "1", "0", "1", "0", "1", "0", "1", "0"},
           {"0", "0", "1", "1", "0", "1", "1", "0", "0", "1", "1", "0", "1", "1", "0", "0"},
           {"0", "0", "1", "0", "1", "1", "0", "1", "1", "0", "1", "1", "0", "1", "0", "0"},
           {"0", "0", "0", "1", "1", "0", "1", "1", "1", "1", "0", "1", "1", "0", "0", "0"},
           {"0", "1", "1", "1", "0", "0", "0", "1", "0", "1", "1", "1", "0", "0", "0", "1"},
           {"0", "0", "1", "1", "1", "1", "1", "1", "0", "0", "0", "0", "0", "0", "1", "1"}}};
}

// Cut matrices: columns are set partitions, written with the block avoiding the last vertex first.
inline Golden golden_cut_path() {
  return {{"1,2", "2,3"}, {"|1,2,3", "1|2,3", "1,2|3", "2|1,3"}, {{"0", "1", "0", "1"}, {"0", "0", "1", "1"}}};
}

inline Golden golden_cut_suspension() {
  return {{"1,4", "2,4", "3,4", "1,2", "2,3"},
          {"", "1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"},
          {{"0", "1", "0", "0", "1", "1", "0", "1"},
           {"0", "0", "1", "0", "1", "0", "1", "1"},
           {"0", "0", "0", "1", "0", "1", "1", "1"},
           {"0", "1", "1", "0", "0", "1", "1", "0"},
           {"0", "0", "1", "1", "1", "1", "0", "0"}}};
}

// Entry-by-entry comparison by row and column keys; column keys are compared via
// `col_key`, which lets callers normalize partition labels.
template <class ColKey>
inline bool matches_golden(const Golden& g, const std::vector<std::string>& row_keys,
                           const std::vector<std::string>& col_keys, const Matrix& m, ColKey col_key) {
  if (row_keys.size() != g.rows.size() || col_keys.size() != g.cols.size()) return false;
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    auto ri = std::find(row_keys.begin(), row_keys.end(), g.rows[i]);
    if (ri == row_keys.end()) return false;
    for (std::size_t j = 0; j < g.cols.size(); ++j) {
      std::size_t cj = col_keys.size();
      for (std::size_t t = 0; t < col_keys.size(); ++t) {
        if (col_key(col_keys[t]) == col_key(g.cols[j])) cj = t;
      }
      if (cj == col_keys.size()) return false;
      if (m(static_cast<std::size_t>(ri - row_keys.begin()), cj) != q(g.entries[i][j])) return false;
    }
  }
  return true;
}

inline bool matches_golden(const Golden& g, const std::vector<std::string>& row_keys,
                           const std::vector<std::string>& col_keys, const Matrix& m) {
  return matches_golden(g, row_keys, col_keys, m, [](const std::string& s) { return s; });
}

// Unordered partition label: both blocks sorted.
inline std::string partition_key(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) return s;
  std::string a = s.substr(0, bar), b = s.substr(bar + 1);
  return a < b ? a + "|" + b : b + "|" + a;
}

}  // namespace gcut::testing
