#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcut/complex.hpp"
#include "gcut/hull.hpp"
#include "gcut/polytope.hpp"

namespace gcut {

HRepresentation hrep_simplex(int n);
HRepresentation hrep_disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b, const HRepresentation& ha,
                                    const HRepresentation& hb);
HRepresentation hrep_turtle(int n, int k);

/// For every a·x ≤ c of the base: a·x_Δ + a·x_{Δℓ} + e·x_ℓ ≤ 2c and
/// a·x_Δ - a·x_{Δℓ} - e·x_ℓ ≤ 0, with e = 2c - a·1 (e = 1 for the base
/// inequalities of the closed-form families).
HRepresentation hrep_cone(const SimplicialComplex& base, const HRepresentation& h, Label apex);
HRepresentation hrep_k_cone(const SimplicialComplex& base, const HRepresentation& h,
                            const std::vector<Label>& apexes);

/// Complete bipartite digraph on subsets of [m] and [n]; A → B when #A + #B
/// is even, B → A otherwise.
struct BipartiteDigraph {
  int m = 0;
  int n = 0;
  std::vector<Mask> left;   // subsets of [m], graded-lex
  std::vector<Mask> right;  // subsets of [n], graded-lex
  bool left_to_right(Mask a, Mask b) const { return (popcount(a) + popcount(b)) % 2 == 0; }
};

BipartiteDigraph build_g2(int m, int n);

/// L_0 → R_0 → L_1 → R_1 → … → L_0, rotated so that L_0 is the least left
/// node of the cycle.
struct DirectedCycle {
  std::vector<Mask> lefts;
  std::vector<Mask> rights;

  std::size_t length() const { return 2 * lefts.size(); }
  /// Edge labels A ⊔ B as subsets of [m+n] (right part shifted by m), in
  /// traversal order.
  std::vector<Mask> edges(int m) const;
  bool contains_empty_edge() const;
  bool operator==(const DirectedCycle&) const = default;
};

/// Every directed cycle once, ordered by length and then node sequence.
/// Throws TooLarge beyond `max_cycles`. A positive `max_len` drops longer cycles.
std::vector<DirectedCycle> enumerate_cycles(const BipartiteDigraph& g, std::size_t max_len = 0,
                                            std::size_t max_cycles = 200000);

struct GluingTree {
  DirectedCycle cycle;
  LinearInequality inequality;  // over faces of d_mn(m, n)
  /// Base cycles avoiding ∅ are reached from a cycle through ∅ by switching.
  std::optional<Mask> switch_set;
  /// (A1, B1, A2, B2) as subsets of [m+n] for glued cycles.
  std::array<Mask, 4> glue{};
  std::shared_ptr<const GluingTree> first;   // length-4 piece
  std::shared_ptr<const GluingTree> second;  // homogeneous remainder
};

/// Inequality of a length-4 cycle through ∅: Σ_{S ∈ Ev(O,U)} x_S ≤ 2^(m+n-3).
LinearInequality adual_base_inequality(int m, int n, Mask odd_left, Mask odd_right);
/// The functional a of the gluing step for edges A1 ⊔ B1 and A2 ⊔ B2.
RationalVector gluing_functional(int m, int n, const std::array<Mask, 4>& glue);

/// Decomposes and builds the facet for one cycle. `peel` selects the position
/// j of the split (default: the canonical choice). Throws InvalidInput when the
/// requested split would leave an inhomogeneous remainder.
std::shared_ptr<const GluingTree> cycle_facet(int m, int n, const DirectedCycle& cycle,
                                              std::optional<std::size_t> peel = std::nullopt);

/// Positions at which `cycle` may be split with a homogeneous remainder.
std::vector<std::size_t> admissible_peels(const DirectedCycle& cycle);

struct AdualFacet {
  DirectedCycle cycle;
  std::shared_ptr<const GluingTree> tree;
};

std::vector<AdualFacet> adual_facets(int m, int n, std::size_t max_cycles = 200000);
HRepresentation hrep_adual(int m, int n, std::size_t max_cycles = 200000);

/// Structural recognition up to relabeling. `to_actual` maps the labels of the
/// canonical complex onto the labels of the input.
struct FamilyMatch {
  std::string family;
  int m = 0;
  int n = 0;
  int k = 0;
  std::map<Label, Label> to_actual;
};

std::optional<FamilyMatch> match_simplex(const SimplicialComplex& c);
std::optional<FamilyMatch> match_turtle(const SimplicialComplex& c);
std::optional<FamilyMatch> match_adual(const SimplicialComplex& c);
/// Largest label lying in every facet, when the complex has at least two vertices.
std::optional<Label> cone_apex(const SimplicialComplex& c);
/// The complex with `apex` removed from every facet and from the ground set.
SimplicialComplex cone_base(const SimplicialComplex& c, Label apex);

/// Rewrites an H-representation over faces of `from` onto faces of `to`,
/// renaming labels by `to_actual`.
HRepresentation transport(const HRepresentation& h, const SimplicialComplex& from, const SimplicialComplex& to,
                          const std::map<Label, Label>& to_actual);

enum class HrepMethod { Auto, Oracle };

struct HrepOptions {
  HrepMethod method = HrepMethod::Auto;
  HullOptions oracle;
  std::size_t max_cycles = 200000;
};

/// Recognizes the family and emits its closed form; otherwise runs the hull
/// oracle, or returns the 0/1 bounds with complete = false when the oracle
/// caps are exceeded.
HRepresentation hrep(const SimplicialComplex& c, const HrepOptions& options = {});

}  // namespace gcut
