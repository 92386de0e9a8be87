// Exact scalars and vectors.
//
// Every geometric predicate in polyslice is decided over the rationals.
// Rational is GMP's mpq_class, which keeps values in canonical form
// (positive denominator, reduced by the gcd) after every arithmetic step.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace polyslice {

using Rational = mpq_class;
using Integer = mpz_class;

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p/q" or "p" (optional sign on p). Throws InputError on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

int sign(const Rational& r);
int sign(const Integer& z);

class RVector {
 public:
  RVector() = default;
  explicit RVector(std::size_t dim) : coords_(dim) {}
  explicit RVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RVector from_ints(const std::vector<long>& values);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  const std::vector<Rational>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  /// True when every coordinate has denominator 1.
  bool is_integral() const;

  RVector operator+(const RVector& o) const;
  RVector operator-(const RVector& o) const;
  RVector operator*(const Rational& s) const;

  bool operator==(const RVector& o) const { return coords_ == o.coords_; }
  bool operator!=(const RVector& o) const { return !(*this == o); }
  /// Lexicographic order on coordinates.
  bool operator<(const RVector& o) const;

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// Throws InputError on dimension mismatch.
Rational dot(const RVector& a, const RVector& b);

/// Scales v by a positive rational so that it becomes an integer vector with
/// coprime entries. The zero vector is returned unchanged.
RVector primitive_integer(const RVector& v);

}  // namespace polyslice
