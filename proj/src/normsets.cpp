#include "leecode/normsets.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace leecode {

namespace {

void require_generator_prime(Int p) {
  if (p == 2) throw Error(ErrorKind::EvenPrime, "p = 2 has no odd-prime construction");
  require_odd_prime(p);
}

void sort_unique(std::vector<GaussRes>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

GeneratorSet::GeneratorSet(Int modulus, std::vector<GaussRes> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  check_modulus(modulus_);
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const GaussRes& h = elements_[k];
    if (h.modulus() != modulus_) {
      throw Error(ErrorKind::InvalidGeneratorSet, to_string(h) + " has a different modulus");
    }
    if (h.is_zero()) throw Error(ErrorKind::InvalidGeneratorSet, "0 is not a generator");
    if (k > 0 && elements_[k - 1] == h) {
      throw Error(ErrorKind::InvalidGeneratorSet, to_string(h) + " appears twice");
    }
  }
  for (const GaussRes& h : elements_) {
    if (!contains(gneg(h))) {
      throw Error(ErrorKind::InvalidGeneratorSet, "set is not symmetric: -" + to_string(h) +
                                                      " missing");
    }
  }
}

bool GeneratorSet::contains(const GaussRes& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

GeneratorSet GeneratorSet::closure_under_units(Int modulus, std::span<const GaussRes> seeds) {
  const std::array units{GaussRes(1, 0, modulus), GaussRes(0, 1, modulus),
                         GaussRes(-1, 0, modulus), GaussRes(0, -1, modulus)};
  std::vector<GaussRes> out;
  for (const GaussRes& s : seeds) {
    for (const GaussRes& u : units) out.push_back(gmul(s, u));
  }
  sort_unique(out);
  return GeneratorSet(modulus, std::move(out));
}

GeneratorSet GeneratorSet::closure_under_negation(Int modulus, std::span<const GaussRes> seeds) {
  std::vector<GaussRes> out;
  for (const GaussRes& s : seeds) {
    out.push_back(s);
    out.push_back(gneg(s));
  }
  sort_unique(out);
  return GeneratorSet(modulus, std::move(out));
}

GeneratorSet unit_norm_set(Int p) {
  require_generator_prime(p);
  std::vector<GaussRes> out;
  for (Int a = 0; a < p; ++a) {
    for (Int b = 0; b < p; ++b) {
      GaussRes g(a, b, p);
      if (gnorm(g).value() == 1) out.push_back(g);
    }
  }
  return GeneratorSet(p, std::move(out));
}

GeneratorSet unit_norm_set_param(Int p) {
  require_generator_prime(p);
  std::vector<GaussRes> out;
  out.emplace_back(1, 0, p);
  for (Int sv = 0; sv < p; ++sv) {
    const Residue s(sv, p);
    const Residue den = s * s + Residue(1, p);
    if (den.is_zero()) continue;
    const Residue inv = rinv(den);
    const Residue x = (s * s - Residue(1, p)) * inv;
    const Residue y = -(Residue(2, p) * s) * inv;
    out.emplace_back(x, y);
  }
  sort_unique(out);
  return GeneratorSet(p, std::move(out));
}

std::vector<GaussRes> coset(const GaussRes& g, const GeneratorSet& h) {
  if (g.modulus() != h.modulus()) {
    throw Error(ErrorKind::ModulusMismatch, "coset representative and generator set differ");
  }
  if (g.is_zero()) throw Error(ErrorKind::ZeroElement, "coset of 0 is degenerate");
  std::vector<GaussRes> out;
  out.reserve(h.size());
  for (const GaussRes& x : h) out.push_back(gmul(g, x));
  sort_unique(out);
  return out;
}

std::vector<GaussRes> norm_class(const Residue& c) {
  const Int p = c.modulus();
  require_odd_prime(p);
  std::vector<GaussRes> out;
  for (Int a = 0; a < p; ++a) {
    for (Int b = 0; b < p; ++b) {
      GaussRes g(a, b, p);
      if (gnorm(g) == c) out.push_back(g);
    }
  }
  return out;
}

NormSet neighbor_norms(const Residue& c) {
  const Int p = c.modulus();
  require_odd_prime(p);
  if (c.is_zero()) throw Error(ErrorKind::ZeroNormClass, "N_p(0) is not defined");
  NormSet out{p, {}};
  const GaussRes one = GaussRes::one(p);
  for (const GaussRes& b : norm_class(c)) out.values.insert(gnorm(gadd(one, b)).value());
  return out;
}

NormSet neighbor_norms_poly(const Residue& t) {
  const Int p = t.modulus();
  require_odd_prime(p);
  if (p % 4 != 1) {
    throw Error(ErrorKind::WrongResidueClass, "polynomial form needs p = 1 (mod 4)");
  }
  if (t.is_zero()) throw Error(ErrorKind::ZeroT, "t must be nonzero");
  NormSet out{p, {}};
  const Residue one(1, p);
  for (Int xv = 1; xv < p; ++xv) {
    const Residue x(xv, p);
    out.values.insert((rinv(x) * (x + one) * (x + t)).value());
  }
  return out;
}

NormSet zero_divisor_neighbor_norms(const GaussRes& z) {
  if (!is_zero_divisor(z)) {
    throw Error(ErrorKind::NotZeroDivisor, to_string(z) + " is not a proper zero divisor");
  }
  const Int p = z.modulus();
  NormSet out{p, {}};
  for (const GaussRes& b : unit_norm_set(p)) out.values.insert(gnorm(gadd(b, z)).value());
  return out;
}

Residue curve_poly(const Residue& t, const Residue& x, const Residue& y) {
  const Residue one(1, t.modulus());
  const Residue xp1 = x + one;
  return y * xp1 * xp1 - x * (y + one) * (y + t);
}

Residue curve_poly_homogeneous(const Residue& t, const Residue& x, const Residue& y,
                               const Residue& z) {
  const Residue one(1, t.modulus());
  return x * y * (x - y) + (one - t) * x * y * z + (y - t * x) * z * z;
}

CurvePointCount curve_point_count(const Residue& t) {
  const Int p = t.modulus();
  require_odd_prime(p);
  if (t.value() == 0 || t.value() == 1) {
    throw Error(ErrorKind::DegenerateT, "P_t factors for t in {0, 1}");
  }
  CurvePointCount out{0, 0, 0};
  for (Int xv = 0; xv < p; ++xv) {
    for (Int yv = 0; yv < p; ++yv) {
      if (curve_poly(t, Residue(xv, p), Residue(yv, p)).is_zero()) ++out.affine;
    }
  }
  // Line at infinity: (1 : y : 0) for every y, plus (0 : 1 : 0).
  const Residue zero(0, p);
  const Residue one(1, p);
  for (Int yv = 0; yv < p; ++yv) {
    if (curve_poly_homogeneous(t, one, Residue(yv, p), zero).is_zero()) ++out.at_infinity;
  }
  if (curve_poly_homogeneous(t, zero, one, zero).is_zero()) ++out.at_infinity;
  out.projective = out.affine + out.at_infinity;
  return out;
}

}  // namespace leecode
