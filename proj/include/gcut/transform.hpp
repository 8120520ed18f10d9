#pragma once

#include <string>
#include <vector>

#include "gcut/complex.hpp"
#include "gcut/matrix.hpp"
#include "gcut/polytope.hpp"

namespace gcut {

struct LinearMapMatrix {
  std::vector<std::string> row_keys;
  std::vector<std::string> col_keys;
  Matrix entries;
};

/// Corr → GCut. Entry (F,H) is (-2)^(#H-1) when H ⊆ F.
LinearMapMatrix phi(const SimplicialComplex& c);
/// GCut → Corr, the inverse of phi.
LinearMapMatrix psi(const SimplicialComplex& c);
/// Marg → Corr. Entry (T,(H,F)) is 1/f(T) when T ⊆ H, f(T) the number of
/// facets containing T.
LinearMapMatrix omega(const SimplicialComplex& c);
/// Linear part of Corr → Marg. Entry ((H,F),T) is (-1)^(#H+#T) when H ⊆ T ⊆ F.
LinearMapMatrix pi(const SimplicialComplex& c);
/// u^∅, the translation part of Corr → Marg.
RationalVector marg_origin(const SimplicialComplex& c);

struct AffineMap {
  LinearMapMatrix linear;
  RationalVector offset;
  RationalVector operator()(const RationalVector& x) const;
};

AffineMap corr_to_marg_map(const SimplicialComplex& c);
RationalVector corr_to_marg(const SimplicialComplex& c, const RationalVector& y);

enum class Space { Marg, Corr, GCut };
Space parse_space(const std::string& name);
std::string to_string(Space s);

/// Map between any two of the three models, composed from the maps above.
AffineMap transform_map(const SimplicialComplex& c, Space from, Space to);

/// Pull an inequality on the target space back along a map:
/// p·(Mx + t) ≤ p0 becomes (pM)·x ≤ p0 - p·t.
LinearInequality pull_back(const LinearInequality& ineq, const AffineMap& map);
/// Rewrite an inequality on `from` coordinates as one on `to` coordinates,
/// using the inverse direction map.
LinearInequality transport_inequality(const SimplicialComplex& c, const LinearInequality& ineq, Space from, Space to);

}  // namespace gcut
