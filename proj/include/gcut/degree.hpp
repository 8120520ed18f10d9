#pragma once

#include <optional>
#include <string>

#include "gcut/complex.hpp"
#include "gcut/hull.hpp"
#include "gcut/rational.hpp"

namespace gcut {

struct DegreeResult {
  Integer value;
  std::string formula;
  bool conjectural = false;
  std::optional<bool> verified_by_volume = std::nullopt;
};

DegreeResult degree_disjoint_simplices(int m, int n);
DegreeResult degree_boundary_simplex(int n);
DegreeResult degree_cone(const DegreeResult& base);
DegreeResult degree_turtle(int n, int k);
DegreeResult degree_no_three_way(int n);
DegreeResult degree_lawrence_1n(int n);
/// Reported only; the value is flagged conjectural.
DegreeResult conjecture_lawrence(int m, int n);

/// Normalized volume of GCut(Δ) by the hull oracle.
Integer gcut_volume(const SimplicialComplex& c, const HullOptions& options = {});
/// Whether the oracle can handle GCut(Δ) within the caps.
bool volume_tractable(const SimplicialComplex& c, const HullOptions& options = {});

/// Sizes (m, n) when Δ is Λ(2^[m] ⊔ 2^[n]) up to relabeling, m ≤ n.
std::optional<std::pair<int, int>> match_lawrence_disjoint_simplices(const SimplicialComplex& c);

struct DegreeOptions {
  bool check_volume = true;
  HullOptions oracle;
  /// Formula tag the caller expects; a mismatch is an InvalidInput error.
  std::optional<std::string> family;
};

/// Closed form for recognized families, otherwise the oracle volume when
/// tractable. Throws InvalidInput when neither applies.
DegreeResult degree(const SimplicialComplex& c, const DegreeOptions& options = {});

}  // namespace gcut
