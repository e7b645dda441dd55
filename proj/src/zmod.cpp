#include "leecode/zmod.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace leecode {

bool is_prime(Int n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (Int d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

void check_modulus(Int q) {
  if (q < 1 || q > kMaxModulus) {
    throw Error(ErrorKind::ModulusOutOfRange,
                "modulus " + std::to_string(q) + " outside [1, 2^31 - 1]");
  }
}

void require_odd_prime(Int q) {
  check_modulus(q);
  if (!is_prime(q) || q == 2) {
    throw Error(ErrorKind::NotPrimeModulus, std::to_string(q) + " is not an odd prime");
  }
}

Int pow_mod(Int base, Int exp, Int m) {
  check_modulus(m);
  Int result = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

Int half_degree_for_prime(Int p) {
  // [p/4] rounded to nearest: floor((p + 2) / 4).
  return 2 * ((p + 2) / 4);
}

Residue::Residue(Int value, Int modulus) : value_(0), modulus_(modulus) {
  check_modulus(modulus);
  value_ = value % modulus;
  if (value_ < 0) value_ += modulus;
}

Int Residue::centered() const noexcept {
  return 2 * value_ > modulus_ ? value_ - modulus_ : value_;
}

namespace {

void same_modulus(Int a, Int b) {
  if (a != b) {
    throw Error(ErrorKind::ModulusMismatch,
                "moduli " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  same_modulus(a.modulus_, b.modulus_);
  Int s = a.value_ + b.value_;
  if (s >= a.modulus_) s -= a.modulus_;
  return Residue(s, a.modulus_, Residue::Canonical{});
}

Residue operator-(const Residue& a, const Residue& b) {
  same_modulus(a.modulus_, b.modulus_);
  Int s = a.value_ - b.value_;
  if (s < 0) s += a.modulus_;
  return Residue(s, a.modulus_, Residue::Canonical{});
}

Residue operator*(const Residue& a, const Residue& b) {
  same_modulus(a.modulus_, b.modulus_);
  return Residue(a.value_ * b.value_ % a.modulus_, a.modulus_, Residue::Canonical{});
}

Residue Residue::operator-() const {
  return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_, Canonical{});
}

Residue rinv(const Residue& a) {
  require_odd_prime(a.modulus());
  if (a.is_zero()) throw Error(ErrorKind::ZeroDivisor, "0 has no inverse");
  return Residue(pow_mod(a.value(), a.modulus() - 2, a.modulus()), a.modulus());
}

GaussRes::GaussRes(Int re, Int im, Int modulus) : re_(re, modulus), im_(im, modulus) {}

GaussRes::GaussRes(const Residue& re, const Residue& im) : re_(re), im_(im) {
  same_modulus(re.modulus(), im.modulus());
}

std::size_t GaussRes::index() const noexcept {
  return static_cast<std::size_t>(re_.value()) * static_cast<std::size_t>(modulus()) +
         static_cast<std::size_t>(im_.value());
}

GaussRes GaussRes::from_index(std::size_t index, Int modulus) {
  const auto q = static_cast<std::size_t>(modulus);
  return {static_cast<Int>(index / q), static_cast<Int>(index % q), modulus};
}

GaussRes gadd(const GaussRes& a, const GaussRes& b) { return {a.re() + b.re(), a.im() + b.im()}; }
GaussRes gsub(const GaussRes& a, const GaussRes& b) { return {a.re() - b.re(), a.im() - b.im()}; }
GaussRes gneg(const GaussRes& a) { return {-a.re(), -a.im()}; }

GaussRes gmul(const GaussRes& a, const GaussRes& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

GaussRes gconj(const GaussRes& a) { return {a.re(), -a.im()}; }

Residue gnorm(const GaussRes& a) { return a.re() * a.re() + a.im() * a.im(); }

GaussRes ginv(const GaussRes& a) {
  require_odd_prime(a.modulus());
  const Residue n = gnorm(a);
  if (n.is_zero()) throw Error(ErrorKind::ZeroDivisor, to_string(a) + " has norm 0");
  const Residue k = rinv(n);
  const GaussRes c = gconj(a);
  return {c.re() * k, c.im() * k};
}

bool is_zero_divisor(const GaussRes& a) {
  require_odd_prime(a.modulus());
  return !a.is_zero() && gnorm(a).is_zero();
}

int legendre(const Residue& c) {
  require_odd_prime(c.modulus());
  if (c.is_zero()) return 0;
  const Int p = c.modulus();
  return pow_mod(c.value(), (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<Residue> sqrt_mod(const Residue& c) {
  const int symbol = legendre(c);
  const Int p = c.modulus();
  if (symbol == 0) return Residue(0, p);
  if (symbol < 0) return std::nullopt;

  // p - 1 = q * 2^s with q odd.
  Int q = p - 1;
  Int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (legendre(Residue(z, p)) != -1) ++z;

  Int m = s;
  Int cc = pow_mod(z, q, p);
  Int t = pow_mod(c.value(), q, p);
  Int r = pow_mod(c.value(), (q + 1) / 2, p);
  while (t != 1) {
    Int i = 0;
    for (Int t2 = t; t2 != 1; t2 = t2 * t2 % p) ++i;
    const Int b = pow_mod(cc, Int{1} << (m - i - 1), p);
    m = i;
    cc = b * b % p;
    t = t * cc % p;
    r = r * b % p;
  }
  return Residue(std::min(r, p - r), p);
}

std::string to_string(const GaussRes& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.value(); }

std::ostream& operator<<(std::ostream& os, const GaussRes& a) {
  return os << a.re().value() << '+' << a.im().value() << 'i';
}

}  // namespace leecode
