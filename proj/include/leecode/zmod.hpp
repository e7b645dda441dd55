#pragma once

// Exact arithmetic in Z/qZ and in the quotient ring Z[i]/qZ[i].
//
// Residues are stored canonically in [0, q). Products are formed in 64-bit
// signed integers, which bounds the modulus at 2^31 - 1 so that q^2 and the
// sum of two squares never overflow. Larger moduli are rejected with
// ErrorKind::ModulusOutOfRange.
//
// Addition, subtraction, multiplication, conjugation and the norm work for
// any modulus, including composite ones such as q = 26. Inversion and the
// quadratic-residue routines require an odd prime modulus.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "leecode/error.hpp"

namespace leecode {

using Int = std::int64_t;

inline constexpr Int kMaxModulus = (Int{1} << 31) - 1;

bool is_prime(Int n) noexcept;

// base^exp mod m, with exp >= 0 and 1 <= m <= kMaxModulus.
Int pow_mod(Int base, Int exp, Int m);

// n = 2[p/4], where [.] is the nearest integer. Odd primes never hit a tie.
Int half_degree_for_prime(Int p);

// Throws ModulusOutOfRange unless 1 <= q <= kMaxModulus.
void check_modulus(Int q);
// Throws NotPrimeModulus unless q is an odd prime.
void require_odd_prime(Int q);

class Residue {
 public:
  Residue(Int value, Int modulus);

  Int value() const noexcept { return value_; }
  Int modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  // Symmetric representative in (-q/2, q/2], used for Lee weights.
  Int centered() const noexcept;

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue operator-() const;

  bool operator==(const Residue&) const = default;
  auto operator<=>(const Residue&) const = default;

 private:
  struct Canonical {};
  Residue(Int value, Int modulus, Canonical) noexcept : value_(value), modulus_(modulus) {}

  Int value_;
  Int modulus_;
};

// Multiplicative inverse modulo an odd prime.
Residue rinv(const Residue& a);

// Element b1 + b2 i of Z[i]/qZ[i]. Ordered lexicographically by (re, im).
class GaussRes {
 public:
  GaussRes(Int re, Int im, Int modulus);
  GaussRes(const Residue& re, const Residue& im);

  const Residue& re() const noexcept { return re_; }
  const Residue& im() const noexcept { return im_; }
  Int modulus() const noexcept { return re_.modulus(); }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  // Dense index re * q + im in [0, q^2).
  std::size_t index() const noexcept;
  static GaussRes from_index(std::size_t index, Int modulus);

  static GaussRes zero(Int modulus) { return {0, 0, modulus}; }
  static GaussRes one(Int modulus) { return {1, 0, modulus}; }
  static GaussRes unit_i(Int modulus) { return {0, 1, modulus}; }

  bool operator==(const GaussRes&) const = default;
  auto operator<=>(const GaussRes&) const = default;

 private:
  Residue re_;
  Residue im_;
};

GaussRes gadd(const GaussRes& a, const GaussRes& b);
GaussRes gsub(const GaussRes& a, const GaussRes& b);
GaussRes gneg(const GaussRes& a);
GaussRes gmul(const GaussRes& a, const GaussRes& b);
GaussRes gconj(const GaussRes& a);
Residue gnorm(const GaussRes& a);

// a^{-1} = conj(a) / N(a). Requires a prime modulus and an invertible norm.
GaussRes ginv(const GaussRes& a);

// True iff a != 0 and N(a) == 0. Requires an odd prime modulus.
bool is_zero_divisor(const GaussRes& a);

inline GaussRes operator+(const GaussRes& a, const GaussRes& b) { return gadd(a, b); }
inline GaussRes operator-(const GaussRes& a, const GaussRes& b) { return gsub(a, b); }
inline GaussRes operator-(const GaussRes& a) { return gneg(a); }
inline GaussRes operator*(const GaussRes& a, const GaussRes& b) { return gmul(a, b); }

// Euler's criterion: -1, 0 or +1.
int legendre(const Residue& c);

// Tonelli-Shanks. Returns the smaller of the two roots, or nothing when c is
// a non-residue.
std::optional<Residue> sqrt_mod(const Residue& c);

std::string to_string(const GaussRes& a);
std::ostream& operator<<(std::ostream& os, const Residue& r);
std::ostream& operator<<(std::ostream& os, const GaussRes& a);

}  // namespace leecode
