#include "gcut/hrep.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gcut/errors.hpp"
#include "gcut/switching.hpp"

namespace gcut {

namespace {

Rational power_of_two(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rational(p);
}

HRepresentation empty_hrep(const SimplicialComplex& c, std::string family) {
  HRepresentation h;
  h.family = std::move(family);
  h.keys = c.face_keys();
  return h;
}

std::map<Label, Label> identity_on(const SimplicialComplex& c) {
  std::map<Label, Label> id;
  for (Label x : c.ground_set()) id[x] = x;
  return id;
}

}  // namespace

HRepresentation hrep_simplex(int n) {
  SimplicialComplex s = simplex(n);
  LinearInequality base{RationalVector(s.faces().size(), 1), power_of_two(n - 1)};
  HRepresentation h = empty_hrep(s, "simplex");
  for (const auto& i : all_subsets(s)) h.inequalities.push_back(normalize(switch_gcut(base, i, s)));
  return h;
}

HRepresentation transport(const HRepresentation& h, const SimplicialComplex& from, const SimplicialComplex& to,
                          const std::map<Label, Label>& to_actual) {
  std::vector<std::size_t> target(from.faces().size());
  for (std::size_t i = 0; i < from.faces().size(); ++i) {
    std::vector<Label> labels;
    for (Label x : from.faces()[i].elements()) {
      auto it = to_actual.find(x);
      labels.push_back(it == to_actual.end() ? x : it->second);
    }
    auto idx = to.face_index(Face(std::move(labels)));
    if (!idx) throw Error(ErrorKind::Internal, "face " + from.faces()[i].key() + " has no image");
    target[i] = *idx;
  }
  if (from.faces().size() != to.faces().size()) {
    throw Error(ErrorKind::AmbientMismatch, "complexes have different numbers of faces");
  }
  auto move = [&](const LinearInequality& q) {
    LinearInequality out{RationalVector(to.faces().size()), q.rhs};
    for (std::size_t i = 0; i < target.size(); ++i) out.coeffs[target[i]] = q.coeffs[i];
    return out;
  };
  HRepresentation out = empty_hrep(to, h.family);
  out.complete = h.complete;
  for (const auto& q : h.inequalities) out.inequalities.push_back(move(q));
  for (const auto& q : h.equalities) out.equalities.push_back(move(q));
  return out;
}

HRepresentation hrep_disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b, const HRepresentation& ha,
                                    const HRepresentation& hb) {
  SimplicialComplex u = disjoint_union(a, b);
  HRepresentation h = empty_hrep(u, "disjoint_union");
  h.complete = ha.complete && hb.complete;
  auto pad = [&](const SimplicialComplex& part, const HRepresentation& hp) {
    std::vector<std::size_t> target;
    for (const auto& f : part.faces()) target.push_back(*u.face_index(f));
    for (const auto& q : hp.inequalities) {
      LinearInequality out{RationalVector(u.faces().size()), q.rhs};
      for (std::size_t i = 0; i < target.size(); ++i) out.coeffs[target[i]] = q.coeffs[i];
      h.inequalities.push_back(std::move(out));
    }
  };
  pad(a, ha);
  pad(b, hb);
  return h;
}

HRepresentation hrep_turtle(int n, int k) {
  SimplicialComplex t = turtle(n, k);
  HRepresentation h = empty_hrep(t, "turtle");
  if (t.faces().empty()) return h;
  std::vector<Face> evens = even_subsets(t);
  for (Mask s : t.subsets()) {
    if (popcount(s) % 2 == 0 || (s >> k) != 0) continue;
    LinearInequality base{RationalVector(t.faces().size()), power_of_two(n - 2)};
    for (std::size_t i = 0; i < t.face_masks().size(); ++i) {
      if (popcount(s & t.face_masks()[i]) % 2 == 0) base.coeffs[i] = 1;
    }
    for (auto& q : switch_family(base, evens, t)) {
      if (std::find(h.inequalities.begin(), h.inequalities.end(), q) == h.inequalities.end()) {
        h.inequalities.push_back(std::move(q));
      }
    }
  }
  return h;
}

HRepresentation hrep_cone(const SimplicialComplex& base, const HRepresentation& h, Label apex) {
  SimplicialComplex c = cone(base, apex);
  if (base.faces().empty()) {
    SimplicialComplex seg = simplex(1);
    HRepresentation out = transport(hrep_simplex(1), seg, c, {{1, apex}});
    out.family = "cone";
    return out;
  }
  std::vector<std::size_t> plain, lifted;
  for (const auto& f : base.faces()) {
    plain.push_back(*c.face_index(f));
    lifted.push_back(*c.face_index(face_union(f, Face({apex}))));
  }
  const std::size_t apex_index = *c.face_index(Face({apex}));
  HRepresentation out = empty_hrep(c, "cone");
  out.complete = h.complete;
  for (const auto& q : h.inequalities) {
    Rational total = 0;
    for (const auto& x : q.coeffs) total += x;
    Rational e = 2 * q.rhs - total;
    LinearInequality up{RationalVector(c.faces().size()), 2 * q.rhs};
    LinearInequality down{RationalVector(c.faces().size()), 0};
    for (std::size_t i = 0; i < plain.size(); ++i) {
      up.coeffs[plain[i]] = q.coeffs[i];
      up.coeffs[lifted[i]] = q.coeffs[i];
      down.coeffs[plain[i]] = q.coeffs[i];
      down.coeffs[lifted[i]] = -q.coeffs[i];
    }
    up.coeffs[apex_index] = e;
    down.coeffs[apex_index] = -e;
    out.inequalities.push_back(std::move(up));
    out.inequalities.push_back(std::move(down));
  }
  return out;
}

HRepresentation hrep_k_cone(const SimplicialComplex& base, const HRepresentation& h,
                            const std::vector<Label>& apexes) {
  SimplicialComplex current = base;
  HRepresentation out = h;
  for (Label l : apexes) {
    out = hrep_cone(current, out, l);
    current = cone(current, l);
  }
  return out;
}

// ---------------------------------------------------------------------------
// G_2^{m,n}

BipartiteDigraph build_g2(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidInput, "build_g2 needs m, n >= 1");
  BipartiteDigraph g;
  g.m = m;
  g.n = n;
  g.left = graded_lex_subsets(static_cast<std::size_t>(m));
  g.right = graded_lex_subsets(static_cast<std::size_t>(n));
  return g;
}

std::vector<Mask> DirectedCycle::edges(int m) const {
  std::vector<Mask> out;
  const std::size_t k = lefts.size();
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(lefts[i] | (rights[i] << m));
    out.push_back(lefts[(i + 1) % k] | (rights[i] << m));
  }
  return out;
}

bool DirectedCycle::contains_empty_edge() const {
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    if (lefts[i] == 0 && rights[i] == 0) return true;
  }
  return false;
}

std::vector<DirectedCycle> enumerate_cycles(const BipartiteDigraph& g, std::size_t max_len, std::size_t max_cycles) {
  const std::size_t nl = g.left.size(), nr = g.right.size();
  std::vector<DirectedCycle> out;
  std::vector<std::size_t> lpath, rpath;
  std::vector<bool> lused(nl, false), rused(nr, false);

  std::function<void(std::size_t, std::size_t)> from_left;
  std::function<void(std::size_t, std::size_t)> from_right = [&](std::size_t start, std::size_t r) {
    for (std::size_t l = start; l < nl; ++l) {
      if (g.left_to_right(g.left[l], g.right[r])) continue;
      if (l == start) {
        if (max_len == 0 || 2 * lpath.size() <= max_len) {
          DirectedCycle c;
          for (auto i : lpath) c.lefts.push_back(g.left[i]);
          for (auto i : rpath) c.rights.push_back(g.right[i]);
          out.push_back(std::move(c));
          if (out.size() > max_cycles) {
            throw Error(ErrorKind::TooLarge, "more than " + std::to_string(max_cycles) + " directed cycles");
          }
        }
        continue;
      }
      if (lused[l]) continue;
      if (max_len != 0 && 2 * (lpath.size() + 1) > max_len) continue;
      from_left(start, l);
    }
  };
  from_left = [&](std::size_t start, std::size_t l) {
    lused[l] = true;
    lpath.push_back(l);
    for (std::size_t r = 0; r < nr; ++r) {
      if (rused[r] || !g.left_to_right(g.left[l], g.right[r])) continue;
      rused[r] = true;
      rpath.push_back(r);
      from_right(start, r);
      rpath.pop_back();
      rused[r] = false;
    }
    lpath.pop_back();
    lused[l] = false;
  };
  for (std::size_t s = 0; s < nl; ++s) from_left(s, s);

  auto rank_of = [](const std::vector<Mask>& order, Mask x) {
    return std::find(order.begin(), order.end(), x) - order.begin();
  };
  std::sort(out.begin(), out.end(), [&](const DirectedCycle& a, const DirectedCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.lefts.size(); ++i) {
      auto la = rank_of(g.left, a.lefts[i]), lb = rank_of(g.left, b.lefts[i]);
      if (la != lb) return la < lb;
      auto ra = rank_of(g.right, a.rights[i]), rb = rank_of(g.right, b.rights[i]);
      if (ra != rb) return ra < rb;
    }
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Facets of GCut(D_{m,n})

LinearInequality adual_base_inequality(int m, int n, Mask odd_left, Mask odd_right) {
  if (m + n < 3) throw Error(ErrorKind::InvalidInput, "D_mn facets need m + n >= 3");
  SimplicialComplex d = d_mn(m, n);
  Mask o = odd_left, u = odd_right << m;
  LinearInequality q{RationalVector(d.faces().size()), power_of_two(m + n - 3)};
  for (std::size_t i = 0; i < d.face_masks().size(); ++i) {
    Mask s = d.face_masks()[i];
    if (popcount(s & o) % 2 == 0 && popcount(s & u) % 2 == 0) q.coeffs[i] = 1;
  }
  return q;
}

RationalVector gluing_functional(int m, int n, const std::array<Mask, 4>& glue) {
  SimplicialComplex d = d_mn(m, n);
  RationalVector a(d.faces().size());
  for (std::size_t i = 0; i < d.face_masks().size(); ++i) {
    Mask s = d.face_masks()[i];
    bool a1 = popcount(s & glue[0]) % 2, b1 = popcount(s & glue[1]) % 2;
    bool a2 = popcount(s & glue[2]) % 2, b2 = popcount(s & glue[3]) % 2;
    if (a1 && !b1 && !a2 && b2) a[i] += 1;
    if (!a1 && b1 && a2 && !b2) a[i] += 1;
    if (a1 && b1 && !a2 && !b2) a[i] -= 1;
    if (!a1 && !b1 && a2 && b2) a[i] -= 1;
  }
  return a;
}

namespace {

DirectedCycle rotate_to_canonical(DirectedCycle c) {
  // Least left node in graded-lex order starts the cycle.
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.lefts.size(); ++i) {
    if (graded_lex_less(c.lefts[i], c.lefts[best])) best = i;
  }
  std::rotate(c.lefts.begin(), c.lefts.begin() + static_cast<std::ptrdiff_t>(best), c.lefts.end());
  std::rotate(c.rights.begin(), c.rights.begin() + static_cast<std::ptrdiff_t>(best), c.rights.end());
  return c;
}

std::shared_ptr<const GluingTree> base_facet(int m, int n, const DirectedCycle& c) {
  auto tree = std::make_shared<GluingTree>();
  tree->cycle = c;
  if (c.contains_empty_edge()) {
    Mask o = c.lefts[0] ? c.lefts[0] : c.lefts[1];
    Mask u = c.rights[0] ? c.rights[0] : c.rights[1];
    tree->inequality = adual_base_inequality(m, n, o, u);
    return tree;
  }
  // Switch by the first edge: the shifted cycle passes through ∅.
  Mask i = c.lefts[0] | (c.rights[0] << m);
  DirectedCycle shifted;
  for (std::size_t k = 0; k < 2; ++k) {
    shifted.lefts.push_back(c.lefts[k] ^ c.lefts[0]);
    shifted.rights.push_back(c.rights[k] ^ c.rights[0]);
  }
  Mask o = shifted.lefts[0] ? shifted.lefts[0] : shifted.lefts[1];
  Mask u = shifted.rights[0] ? shifted.rights[0] : shifted.rights[1];
  SimplicialComplex d = d_mn(m, n);
  tree->inequality = switch_gcut(adual_base_inequality(m, n, o, u), d.face_of(i), d);
  tree->switch_set = i;
  return tree;
}

}  // namespace

std::vector<std::size_t> admissible_peels(const DirectedCycle& cycle) {
  const std::size_t k = cycle.lefts.size();
  std::vector<std::size_t> out;
  if (k < 4) return out;
  // The remainder must avoid the empty edge so that its inequality is
  // homogeneous. Its even edges are L_j -> R_{j+2} and L_i -> R_i for i > j+2.
  // The piece may carry the empty edge only when the cycle itself does, so
  // its new edge L_{j+2} -> R_j must not be empty either.
  for (std::size_t j = 0; j < k; ++j) {
    bool ok = !(cycle.lefts[j] == 0 && cycle.rights[(j + 2) % k] == 0) &&
              !(cycle.lefts[(j + 2) % k] == 0 && cycle.rights[j] == 0);
    for (std::size_t i = 3; i < k && ok; ++i) {
      std::size_t t = (j + i) % k;
      if (cycle.lefts[t] == 0 && cycle.rights[t] == 0) ok = false;
    }
    if (cycle.lefts[j] == 0 && cycle.rights[j] == 0) ok = false;
    if (cycle.lefts[(j + 2) % k] == 0 && cycle.rights[(j + 2) % k] == 0) ok = false;
    if (ok) out.push_back(j);
  }
  return out;
}

std::shared_ptr<const GluingTree> cycle_facet(int m, int n, const DirectedCycle& cycle,
                                              std::optional<std::size_t> peel) {
  const std::size_t k = cycle.lefts.size();
  if (k * 2 % 4 != 0) throw Error(ErrorKind::Internal, "cycle length is not divisible by 4");
  if (k == 2) return base_facet(m, n, cycle);

  std::size_t j = 0;
  auto allowed = admissible_peels(cycle);
  if (peel) {
    if (std::find(allowed.begin(), allowed.end(), *peel % k) == allowed.end()) {
      throw Error(ErrorKind::InvalidInput, "peel position leaves the empty edge in the remainder");
    }
    j = *peel % k;
  } else {
    if (allowed.empty()) throw Error(ErrorKind::Internal, "no admissible decomposition");
    j = allowed.front();
  }
  auto L = [&](std::size_t i) { return cycle.lefts[(j + i) % k]; };
  auto R = [&](std::size_t i) { return cycle.rights[(j + i) % k]; };

  DirectedCycle piece;  // L_{j+1} → R_{j+1} → L_{j+2} → R_j → L_{j+1}
  piece.lefts = {L(1), L(2)};
  piece.rights = {R(1), R(0)};
  DirectedCycle rest;  // L_j → R_{j+2} → L_{j+3} → … → L_j
  rest.lefts.push_back(L(0));
  rest.rights.push_back(R(2));
  for (std::size_t i = 3; i < k; ++i) {
    rest.lefts.push_back(L(i));
    rest.rights.push_back(R(i));
  }

  auto tree = std::make_shared<GluingTree>();
  tree->cycle = cycle;
  tree->first = cycle_facet(m, n, rotate_to_canonical(piece));
  tree->second = cycle_facet(m, n, rotate_to_canonical(rest));
  if (sgn(tree->second->inequality.rhs) != 0) throw Error(ErrorKind::Internal, "remainder is not homogeneous");
  tree->glue = {L(2), R(0) << m, L(0), R(2) << m};
  RationalVector a = gluing_functional(m, n, tree->glue);
  const auto& q1 = tree->first->inequality;
  const auto& q2 = tree->second->inequality;
  tree->inequality.coeffs.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) tree->inequality.coeffs[i] = q1.coeffs[i] + q2.coeffs[i] + a[i];
  tree->inequality.rhs = q1.rhs;
  return tree;
}

std::vector<AdualFacet> adual_facets(int m, int n, std::size_t max_cycles) {
  if (m < 1 || n < 1 || m + n < 3) throw Error(ErrorKind::InvalidInput, "D_mn facets need m, n >= 1 and m + n >= 3");
  std::vector<AdualFacet> out;
  for (auto& c : enumerate_cycles(build_g2(m, n), 0, max_cycles)) {
    auto tree = cycle_facet(m, n, c);
    out.push_back({std::move(c), std::move(tree)});
  }
  return out;
}

HRepresentation hrep_adual(int m, int n, std::size_t max_cycles) {
  HRepresentation h = empty_hrep(d_mn(m, n), "adual");
  for (const auto& f : adual_facets(m, n, max_cycles)) h.inequalities.push_back(f.tree->inequality);
  return h;
}

// ---------------------------------------------------------------------------
// Recognition and dispatch

std::optional<FamilyMatch> match_simplex(const SimplicialComplex& c) {
  if (c.facets().size() != 1 || c.facets().front().empty()) return std::nullopt;
  FamilyMatch f;
  f.family = "simplex";
  const auto& labels = c.facets().front().elements();
  f.n = static_cast<int>(labels.size());
  for (int i = 0; i < f.n; ++i) f.to_actual[i + 1] = labels[i];
  return f;
}

std::optional<FamilyMatch> match_turtle(const SimplicialComplex& c) {
  std::vector<Label> v = c.vertices();
  const std::size_t n = v.size();
  if (c.facets().size() < 2) return std::nullopt;
  std::vector<Label> missing;
  for (const auto& f : c.facets()) {
    if (f.size() + 1 != n) return std::nullopt;
    for (Label x : v) {
      if (!f.contains(x)) missing.push_back(x);
    }
  }
  std::sort(missing.begin(), missing.end());
  FamilyMatch f;
  f.family = "turtle";
  f.n = static_cast<int>(n);
  f.k = static_cast<int>(missing.size());
  int next = 1;
  for (Label x : missing) f.to_actual[next++] = x;
  for (Label x : v) {
    if (!std::binary_search(missing.begin(), missing.end(), x)) f.to_actual[next++] = x;
  }
  return f;
}

std::optional<FamilyMatch> match_adual(const SimplicialComplex& c) {
  std::vector<Label> v = c.vertices();
  std::map<Label, std::set<Label>> adj;
  for (const auto& f : c.facets()) {
    std::vector<Label> comp;
    for (Label x : v) {
      if (!f.contains(x)) comp.push_back(x);
    }
    if (comp.size() != 2) return std::nullopt;
    adj[comp[0]].insert(comp[1]);
    adj[comp[1]].insert(comp[0]);
  }
  if (v.empty() || adj.size() != v.size()) return std::nullopt;
  // Two-colour the complement graph starting from the smallest label.
  std::map<Label, int> side;
  std::vector<Label> stack{v.front()};
  side[v.front()] = 0;
  while (!stack.empty()) {
    Label x = stack.back();
    stack.pop_back();
    for (Label y : adj[x]) {
      auto it = side.find(y);
      if (it == side.end()) {
        side[y] = 1 - side[x];
        stack.push_back(y);
      } else if (it->second == side[x]) {
        return std::nullopt;
      }
    }
  }
  if (side.size() != v.size()) return std::nullopt;
  std::vector<Label> left, right;
  for (Label x : v) (side[x] == 0 ? left : right).push_back(x);
  if (left.size() < 2 || right.size() < 2) return std::nullopt;
  if (c.facets().size() != left.size() * right.size()) return std::nullopt;
  FamilyMatch f;
  f.family = "adual";
  f.m = static_cast<int>(left.size());
  f.n = static_cast<int>(right.size());
  int next = 1;
  for (Label x : left) f.to_actual[next++] = x;
  for (Label x : right) f.to_actual[next++] = x;
  return f;
}

std::optional<Label> cone_apex(const SimplicialComplex& c) {
  if (c.vertices().size() < 2) return std::nullopt;
  Mask common = ~Mask{0};
  for (Mask f : c.facet_masks()) common &= f;
  if (common == 0) return std::nullopt;
  auto labels = c.face_of(common).elements();
  return labels.back();
}

SimplicialComplex cone_base(const SimplicialComplex& c, Label apex) {
  std::vector<Label> ground;
  for (Label x : c.ground_set()) {
    if (x != apex) ground.push_back(x);
  }
  std::vector<std::vector<Label>> facets;
  for (const auto& f : c.facets()) {
    std::vector<Label> g;
    for (Label x : f.elements()) {
      if (x != apex) g.push_back(x);
    }
    facets.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(ground, facets);
}

namespace {

HRepresentation bounds_only(const SimplicialComplex& c) {
  HRepresentation h = empty_hrep(c, "bounds");
  h.complete = false;
  const std::size_t d = c.faces().size();
  for (std::size_t i = 0; i < d; ++i) {
    LinearInequality upper{RationalVector(d), 1};
    upper.coeffs[i] = 1;
    LinearInequality lower{RationalVector(d), 0};
    lower.coeffs[i] = -1;
    h.inequalities.push_back(std::move(upper));
    h.inequalities.push_back(std::move(lower));
  }
  return h;
}

HRepresentation oracle_hrep(const SimplicialComplex& c, const HrepOptions& options) {
  const std::size_t verts = c.vertices().size();
  if (verts >= 63 || (std::size_t{1} << verts) > options.oracle.max_points ||
      c.faces().size() > options.oracle.max_dim) {
    return bounds_only(c);
  }
  try {
    HullResult r = hull(gcut_vertices(c).points(), options.oracle);
    return to_hrep(r, c.face_keys());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    return bounds_only(c);
  }
}

}  // namespace

HRepresentation hrep(const SimplicialComplex& c, const HrepOptions& options) {
  if (c.faces().empty()) return empty_hrep(c, "empty");
  if (options.method == HrepMethod::Oracle) return oracle_hrep(c, options);

  if (auto s = match_simplex(c)) {
    return transport(hrep_simplex(s->n), simplex(s->n), c, s->to_actual);
  }
  auto parts = components(c);
  if (parts.size() >= 2) {
    SimplicialComplex acc = parts.front();
    HRepresentation h = hrep(acc, options);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      HRepresentation next = hrep(parts[i], options);
      h = hrep_disjoint_union(acc, parts[i], h, next);
      acc = disjoint_union(acc, parts[i]);
    }
    return transport(h, acc, c, identity_on(acc));
  }
  if (auto t = match_turtle(c)) {
    return transport(hrep_turtle(t->n, t->k), turtle(t->n, t->k), c, t->to_actual);
  }
  if (auto apex = cone_apex(c)) {
    SimplicialComplex base = cone_base(c, *apex);
    HRepresentation h = hrep_cone(base, hrep(base, options), *apex);
    return transport(h, cone(base, *apex), c, identity_on(c));
  }
  if (auto a = match_adual(c)) {
    return transport(hrep_adual(a->m, a->n, options.max_cycles), d_mn(a->m, a->n), c, a->to_actual);
  }
  return oracle_hrep(c, options);
}

}  // namespace gcut
