#include "gcut/degree.hpp"

#include <algorithm>

#include "gcut/errors.hpp"
#include "gcut/hrep.hpp"
#include "gcut/polytope.hpp"

namespace gcut {

namespace {

Integer pow2(unsigned long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

void require_positive(int x, const char* what) {
  if (x < 1) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be at least 1");
}

}  // namespace

DegreeResult degree_disjoint_simplices(int m, int n) {
  require_positive(m, "m");
  require_positive(n, "n");
  if (m > 30 || n > 30) throw Error(ErrorKind::TooLarge, "disjoint simplices above 30 vertices");
  Integer top = pow2(static_cast<unsigned long>(m)) + pow2(static_cast<unsigned long>(n)) - 2;
  Integer bottom = pow2(static_cast<unsigned long>(m)) - 1;
  Integer v;
  mpz_bin_ui(v.get_mpz_t(), top.get_mpz_t(), bottom.get_ui());
  return {v, "disjoint_simplices"};
}

DegreeResult degree_boundary_simplex(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "boundary degree needs n >= 2");
  return {pow2(static_cast<unsigned long>(n - 1)), "boundary"};
}

DegreeResult degree_cone(const DegreeResult& base) {
  DegreeResult r{base.value * base.value, "cone(" + base.formula + ")", base.conjectural};
  return r;
}

DegreeResult degree_turtle(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidInput, "turtle degree needs 1 <= k <= n");
  if (n - k > 20) throw Error(ErrorKind::TooLarge, "turtle exponent too large");
  unsigned long e = static_cast<unsigned long>(k - 1) << static_cast<unsigned>(n - k);
  return {pow2(e), "turtle"};
}

DegreeResult degree_no_three_way(int n) {
  require_positive(n, "n");
  return {Integer(n) * pow2(static_cast<unsigned long>(n - 1)), "no_three_way"};
}

DegreeResult degree_lawrence_1n(int n) {
  require_positive(n, "n");
  if (n > 20) throw Error(ErrorKind::TooLarge, "Lawrence exponent too large");
  return {pow2((1UL << n) + static_cast<unsigned long>(n) - 1), "lawrence_1n"};
}

DegreeResult conjecture_lawrence(int m, int n) {
  require_positive(m, "m");
  require_positive(n, "n");
  if (m > 20 || n > 20) throw Error(ErrorKind::TooLarge, "Lawrence exponent too large");
  unsigned long e = static_cast<unsigned long>(m) * ((1UL << n) - 1) + static_cast<unsigned long>(n) * ((1UL << m) - 1);
  return {pow2(e), "lawrence_conjecture", true};
}

bool volume_tractable(const SimplicialComplex& c, const HullOptions& options) {
  const std::size_t v = c.vertices().size();
  return v < 63 && (std::size_t{1} << v) <= options.max_points && c.faces().size() <= options.max_dim;
}

Integer gcut_volume(const SimplicialComplex& c, const HullOptions& options) {
  if (c.faces().empty()) return 1;
  return normalized_volume(gcut_vertices(c).points(), options);
}

std::optional<std::pair<int, int>> match_lawrence_disjoint_simplices(const SimplicialComplex& c) {
  if (c.facets().size() != 3) return std::nullopt;
  for (std::size_t top = 0; top < 3; ++top) {
    const Face& x = c.facets()[top];
    const Face& p = c.facets()[(top + 1) % 3];
    const Face& q = c.facets()[(top + 2) % 3];
    Face apex_set = face_intersection(p, q);
    if (apex_set.size() != 1 || x.contains(apex_set.elements().front())) continue;
    Label apex = apex_set.elements().front();
    std::vector<Label> ps, qs;
    for (Label l : p.elements()) {
      if (l != apex) ps.push_back(l);
    }
    for (Label l : q.elements()) {
      if (l != apex) qs.push_back(l);
    }
    if (ps.empty() || qs.empty()) continue;
    if (face_union(Face(ps), Face(qs)) != x) continue;
    int m = static_cast<int>(ps.size()), n = static_cast<int>(qs.size());
    return std::make_pair(std::min(m, n), std::max(m, n));
  }
  return std::nullopt;
}

namespace {

std::optional<DegreeResult> closed_form(const SimplicialComplex& c) {
  if (c.faces().empty()) return DegreeResult{1, "point"};
  if (match_simplex(c)) return DegreeResult{1, "simplex"};
  auto parts = components(c);
  if (parts.size() == 2) {
    auto a = match_simplex(parts[0]);
    auto b = match_simplex(parts[1]);
    if (a && b) return degree_disjoint_simplices(std::min(a->n, b->n), std::max(a->n, b->n));
  }
  if (parts.size() >= 2) return std::nullopt;
  if (auto t = match_turtle(c)) {
    if (t->k == t->n) return degree_boundary_simplex(t->n);
    return degree_turtle(t->n, t->k);
  }
  if (auto apex = cone_apex(c)) {
    if (auto base = closed_form(cone_base(c, *apex))) return degree_cone(*base);
    return std::nullopt;
  }
  if (auto mn = match_lawrence_disjoint_simplices(c)) {
    if (mn->first == 1) return degree_lawrence_1n(mn->second);
    return conjecture_lawrence(mn->first, mn->second);
  }
  return std::nullopt;
}

}  // namespace

DegreeResult degree(const SimplicialComplex& c, const DegreeOptions& options) {
  std::optional<DegreeResult> result = closed_form(c);
  const bool tractable = volume_tractable(c, options.oracle);
  if (options.family) {
    std::string found = result ? result->formula : std::string("none");
    if (found != *options.family && !(found.rfind(*options.family + "(", 0) == 0)) {
      throw Error(ErrorKind::InvalidInput, "complex is recognized as '" + found + "', not '" + *options.family + "'");
    }
  }
  if (!result) {
    if (!tractable) {
      throw Error(ErrorKind::InvalidInput,
                  "no closed-form degree for this complex and the volume oracle is outside its caps");
    }
    DegreeResult r{gcut_volume(c, options.oracle), "volume"};
    r.verified_by_volume = true;
    return r;
  }
  if (options.check_volume && tractable) {
    result->verified_by_volume = gcut_volume(c, options.oracle) == result->value;
  }
  return *result;
}

}  // namespace gcut
