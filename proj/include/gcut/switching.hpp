#pragma once

#include <vector>

#include "gcut/complex.hpp"
#include "gcut/polytope.hpp"

namespace gcut {

/// Parity vector d^I of a subset I of the ground set, over faces(Δ).
RationalVector parity_vertex(const SimplicialComplex& c, const Face& switch_set);

/// a^(I)_F = (-1)^#(I∩F) a_F, rhs a0 - a·d^I.
LinearInequality switch_gcut(const LinearInequality& ineq, const Face& switch_set, const SimplicialComplex& c);

/// Switches by every set in the family; normalized, duplicates dropped, order
/// of first appearance kept.
std::vector<LinearInequality> switch_family(const LinearInequality& ineq, const std::vector<Face>& family,
                                            const SimplicialComplex& c);

/// q^[I] = (qΨ)^(I) Φ, rhs q0 - (qΨ)·d^I.
LinearInequality switch_corr(const LinearInequality& ineq, const Face& switch_set, const SimplicialComplex& c);

bool in_omega_rowspace(const RationalVector& r, const SimplicialComplex& c);

/// r^<I> = (rΠΨ)^(I) Φ Ω, rhs r0 - (rΠΨ)·d^I. Throws NotInRowSpace unless r
/// lies in the row space of Ω.
LinearInequality switch_marg(const LinearInequality& ineq, const Face& switch_set, const SimplicialComplex& c);

/// Orthogonal projection onto the row space of Ω.
RationalVector project_to_rowspace(const RationalVector& r, const SimplicialComplex& c);

/// (rΠΩ, r0 - r·u^∅): in the row space of Ω and equal to r·z - r0 on the
/// affine hull of Marg(Δ).
LinearInequality lift_to_rowspace(const LinearInequality& ineq, const SimplicialComplex& c);

/// All subsets of the ground set with an even number of elements.
std::vector<Face> even_subsets(const SimplicialComplex& c);
std::vector<Face> all_subsets(const SimplicialComplex& c);

}  // namespace gcut
