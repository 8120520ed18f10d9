#include "gcut/switching.hpp"

#include <algorithm>

#include "gcut/errors.hpp"
#include "gcut/transform.hpp"

namespace gcut {

namespace {

void require_ambient(const LinearInequality& ineq, std::size_t expected) {
  if (ineq.coeffs.size() != expected) {
    throw Error(ErrorKind::AmbientMismatch, "inequality has " + std::to_string(ineq.coeffs.size()) +
                                                " coefficients, expected " + std::to_string(expected));
  }
}

}  // namespace

RationalVector parity_vertex(const SimplicialComplex& c, const Face& switch_set) {
  Mask i = c.mask_of(switch_set);
  RationalVector d(c.face_masks().size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = popcount(c.face_masks()[k] & i) % 2;
  return d;
}

LinearInequality switch_gcut(const LinearInequality& ineq, const Face& switch_set, const SimplicialComplex& c) {
  require_ambient(ineq, c.faces().size());
  Mask i = c.mask_of(switch_set);
  LinearInequality out{ineq.coeffs, ineq.rhs - dot(ineq.coeffs, parity_vertex(c, switch_set))};
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    if (popcount(c.face_masks()[k] & i) % 2) out.coeffs[k] = -out.coeffs[k];
  }
  return out;
}

std::vector<LinearInequality> switch_family(const LinearInequality& ineq, const std::vector<Face>& family,
                                            const SimplicialComplex& c) {
  std::vector<LinearInequality> out;
  for (const auto& s : family) {
    LinearInequality q = normalize(switch_gcut(ineq, s, c));
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

LinearInequality switch_corr(const LinearInequality& ineq, const Face& switch_set, const SimplicialComplex& c) {
  require_ambient(ineq, c.faces().size());
  LinearInequality a{psi(c).entries.apply_left(ineq.coeffs), ineq.rhs};
  LinearInequality switched = switch_gcut(a, switch_set, c);
  return {phi(c).entries.apply_left(switched.coeffs), switched.rhs};
}

bool in_omega_rowspace(const RationalVector& r, const SimplicialComplex& c) {
  return omega(c).entries.apply_left(pi(c).entries.apply_left(r)) == r;
}

LinearInequality switch_marg(const LinearInequality& ineq, const Face& switch_set, const SimplicialComplex& c) {
  require_ambient(ineq, margin_rows(c).size());
  if (!in_omega_rowspace(ineq.coeffs, c)) {
    throw Error(ErrorKind::NotInRowSpace, "functional is not in the row space of Omega; lift or project it first");
  }
  LinearInequality a{psi(c).entries.apply_left(pi(c).entries.apply_left(ineq.coeffs)), ineq.rhs};
  LinearInequality switched = switch_gcut(a, switch_set, c);
  RationalVector coeffs = omega(c).entries.apply_left(phi(c).entries.apply_left(switched.coeffs));
  return {std::move(coeffs), switched.rhs};
}

RationalVector project_to_rowspace(const RationalVector& r, const SimplicialComplex& c) {
  const Matrix& w = omega(c).entries;
  if (r.size() != w.cols()) throw Error(ErrorKind::AmbientMismatch, "functional does not live on margin rows");
  Matrix gram = w * w.transpose();
  auto inv = inverse(gram);
  if (!inv) throw Error(ErrorKind::Internal, "Omega does not have full row rank");
  RationalVector coords = inv->apply(w.apply(r));
  return w.apply_left(coords);
}

LinearInequality lift_to_rowspace(const LinearInequality& ineq, const SimplicialComplex& c) {
  require_ambient(ineq, margin_rows(c).size());
  RationalVector coeffs = omega(c).entries.apply_left(pi(c).entries.apply_left(ineq.coeffs));
  return {std::move(coeffs), ineq.rhs - dot(ineq.coeffs, marg_origin(c))};
}

std::vector<Face> all_subsets(const SimplicialComplex& c) {
  std::vector<Face> out;
  for (Mask s : c.subsets()) out.push_back(c.face_of(s));
  return out;
}

std::vector<Face> even_subsets(const SimplicialComplex& c) {
  std::vector<Face> out;
  for (Mask s : c.subsets()) {
    if (popcount(s) % 2 == 0) out.push_back(c.face_of(s));
  }
  return out;
}

}  // namespace gcut
