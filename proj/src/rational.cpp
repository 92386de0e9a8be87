#include "polyslice/rational.hpp"

#include <cctype>

#include "polyslice/errors.hpp"

namespace polyslice {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  Integer p(strip_plus(num));
  Integer q(1);
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den, false)) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    q = Integer(std::string(den));
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

int sign(const Rational& r) { return sgn(r); }
int sign(const Integer& z) { return sgn(z); }

RVector RVector::from_ints(const std::vector<long>& values) {
  RVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
  return v;
}

bool RVector::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool RVector::is_integral() const {
  for (const auto& c : coords_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

RVector RVector::operator+(const RVector& o) const {
  if (dim() != o.dim()) throw InputError("vector dimension mismatch");
  RVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = coords_[i] + o[i];
  return r;
}

RVector RVector::operator-(const RVector& o) const {
  if (dim() != o.dim()) throw InputError("vector dimension mismatch");
  RVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = coords_[i] - o[i];
  return r;
}

RVector RVector::operator*(const Rational& s) const {
  RVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = coords_[i] * s;
  return r;
}

bool RVector::operator<(const RVector& o) const {
  const std::size_t n = std::min(dim(), o.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (coords_[i] < o[i]) return true;
    if (o[i] < coords_[i]) return false;
  }
  return dim() < o.dim();
}

std::string RVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += ",";
    s += polyslice::to_string(coords_[i]);
  }
  return s + ")";
}

Rational dot(const RVector& a, const RVector& b) {
  if (a.dim() != b.dim()) throw InputError("dot: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

RVector primitive_integer(const RVector& v) {
  if (v.is_zero()) return v;
  Integer l(1);
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> nums(v.dim());
  Integer g(0);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    nums[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
  }
  RVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = Rational(nums[i] / g);
  return r;
}

}  // namespace polyslice
