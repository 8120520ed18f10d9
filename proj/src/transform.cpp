#include "gcut/transform.hpp"

#include "gcut/errors.hpp"

namespace gcut {

namespace {

Rational signed_power_of_two(int exponent, int sign) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
  return sign < 0 ? Rational(-p) : Rational(p);
}

}  // namespace

LinearMapMatrix phi(const SimplicialComplex& c) {
  const auto& faces = c.face_masks();
  LinearMapMatrix m{c.face_keys(), c.face_keys(), Matrix(faces.size(), faces.size())};
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if ((faces[j] & faces[i]) != faces[j]) continue;
      int h = popcount(faces[j]);
      m.entries(i, j) = signed_power_of_two(h - 1, (h - 1) % 2 ? -1 : 1);
    }
  }
  return m;
}

LinearMapMatrix psi(const SimplicialComplex& c) {
  const auto& faces = c.face_masks();
  LinearMapMatrix m{c.face_keys(), c.face_keys(), Matrix(faces.size(), faces.size())};
  for (std::size_t i = 0; i < faces.size(); ++i) {
    int h = popcount(faces[i]);
    Rational scale = 1 / signed_power_of_two(h - 1, 1);
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if ((faces[j] & faces[i]) != faces[j]) continue;
      int g = popcount(faces[j]);
      m.entries(i, j) = (g - 1) % 2 ? Rational(-scale) : scale;
    }
  }
  return m;
}

LinearMapMatrix omega(const SimplicialComplex& c) {
  auto rows = margin_rows(c);
  const auto& faces = c.face_masks();
  LinearMapMatrix m{c.face_keys(), margin_keys(c), Matrix(faces.size(), rows.size())};
  for (std::size_t i = 0; i < faces.size(); ++i) {
    long f = 0;
    for (Mask facet : c.facet_masks()) {
      if ((faces[i] & facet) == faces[i]) ++f;
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      Mask h = c.mask_of(rows[j].h);
      if ((faces[i] & h) == faces[i]) m.entries(i, j) = Rational(1, f);
    }
  }
  return m;
}

LinearMapMatrix pi(const SimplicialComplex& c) {
  auto rows = margin_rows(c);
  const auto& faces = c.face_masks();
  LinearMapMatrix m{margin_keys(c), c.face_keys(), Matrix(rows.size(), faces.size())};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Mask h = c.mask_of(rows[i].h);
    Mask f = c.mask_of(rows[i].f);
    for (std::size_t j = 0; j < faces.size(); ++j) {
      Mask t = faces[j];
      if ((h & t) == h && (t & f) == t) m.entries(i, j) = (popcount(h) + popcount(t)) % 2 ? -1 : 1;
    }
  }
  return m;
}

RationalVector marg_origin(const SimplicialComplex& c) {
  auto rows = margin_rows(c);
  RationalVector u(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].h.empty()) u[i] = 1;
  }
  return u;
}

RationalVector AffineMap::operator()(const RationalVector& x) const {
  RationalVector y = linear.entries.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset[i];
  return y;
}

AffineMap corr_to_marg_map(const SimplicialComplex& c) { return {pi(c), marg_origin(c)}; }

RationalVector corr_to_marg(const SimplicialComplex& c, const RationalVector& y) { return corr_to_marg_map(c)(y); }

Space parse_space(const std::string& name) {
  if (name == "marg") return Space::Marg;
  if (name == "corr") return Space::Corr;
  if (name == "gcut") return Space::GCut;
  throw Error(ErrorKind::InvalidInput, "unknown space '" + name + "' (expected marg, corr or gcut)");
}

std::string to_string(Space s) {
  switch (s) {
    case Space::Marg: return "marg";
    case Space::Corr: return "corr";
    case Space::GCut: return "gcut";
  }
  return "?";
}

namespace {

AffineMap linear_only(LinearMapMatrix m) {
  RationalVector zero(m.entries.rows());
  return {std::move(m), std::move(zero)};
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  AffineMap out;
  out.linear.row_keys = outer.linear.row_keys;
  out.linear.col_keys = inner.linear.col_keys;
  out.linear.entries = outer.linear.entries * inner.linear.entries;
  out.offset = outer(inner.offset);
  return out;
}

AffineMap identity_map(const std::vector<std::string>& keys) {
  return linear_only({keys, keys, Matrix::identity(keys.size())});
}

}  // namespace

AffineMap transform_map(const SimplicialComplex& c, Space from, Space to) {
  if (from == to) return identity_map(from == Space::Marg ? margin_keys(c) : c.face_keys());
  auto step = [&](Space a, Space b) -> AffineMap {
    if (a == Space::Corr && b == Space::GCut) return linear_only(phi(c));
    if (a == Space::GCut && b == Space::Corr) return linear_only(psi(c));
    if (a == Space::Marg && b == Space::Corr) return linear_only(omega(c));
    if (a == Space::Corr && b == Space::Marg) return corr_to_marg_map(c);
    throw Error(ErrorKind::Internal, "no direct map");
  };
  if (from == Space::Corr || to == Space::Corr) return step(from, to);
  return compose(step(Space::Corr, to), step(from, Space::Corr));
}

LinearInequality pull_back(const LinearInequality& ineq, const AffineMap& map) {
  if (ineq.coeffs.size() != map.linear.entries.rows()) {
    throw Error(ErrorKind::AmbientMismatch, "inequality does not live on the map's target space");
  }
  return {map.linear.entries.apply_left(ineq.coeffs), ineq.rhs - dot(ineq.coeffs, map.offset)};
}

LinearInequality transport_inequality(const SimplicialComplex& c, const LinearInequality& ineq, Space from,
                                      Space to) {
  return pull_back(ineq, transform_map(c, to, from));
}

}  // namespace gcut
