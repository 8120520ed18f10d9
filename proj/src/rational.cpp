#include "gcut/rational.hpp"

#include <cctype>

#include "gcut/errors.hpp"

namespace gcut {

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::InvalidInput, "malformed number '" + std::string(s) + "'");
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::InvalidInput, "empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot_pos);
    std::string_view frac_part = text.substr(dot_pos + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part))) {
      throw Error(ErrorKind::InvalidInput, "malformed number '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    Integer digits(std::string(int_part) + std::string(frac_part), 10);
    Rational q(digits, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(text));
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational sum = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  }
  return sum;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RationalVector primitive_scaling(const RationalVector& v, Rational* factor) {
  Integer den_lcm = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  Integer num_gcd = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) {
    if (factor) *factor = 1;
    return v;
  }
  Rational f(den_lcm, num_gcd);
  f.canonicalize();
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * f;
  if (factor) *factor = f;
  return out;
}

}  // namespace gcut
