#pragma once

// Unit-norm generator sets, norm classes, neighbor-norm sets and the cubic
// curve point counts behind the diameter argument for p = 1 (mod 4).
//
// Brute-force O(p^2) sweeps and the O(p) parametrized constructions both
// ship: each one is the other's cross-check.

#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

#include "leecode/zmod.hpp"

namespace leecode {

// Symmetric generator set H of a Cayley graph on Z[i]/qZ[i]: h in H implies
// -h in H, and 0 is excluded. Elements are kept distinct and sorted by
// (re, im), which is the order every downstream artifact inherits.
class GeneratorSet {
 public:
  // Validates and sorts. Throws InvalidGeneratorSet when an element is zero,
  // duplicated, has a different modulus, or lacks its negative.
  GeneratorSet(Int modulus, std::vector<GaussRes> elements);

  // Expands seeds by multiplication with the units {1, i, -1, -i}.
  static GeneratorSet closure_under_units(Int modulus, std::span<const GaussRes> seeds);
  // Expands seeds by negation only, for sets written as "+-{...}".
  static GeneratorSet closure_under_negation(Int modulus, std::span<const GaussRes> seeds);

  Int modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<GaussRes>& elements() const noexcept { return elements_; }
  bool contains(const GaussRes& g) const;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool operator==(const GeneratorSet&) const = default;

 private:
  Int modulus_;
  std::vector<GaussRes> elements_;
};

// A subset of Z/pZ.
struct NormSet {
  Int modulus;
  std::set<Int> values;

  std::size_t size() const noexcept { return values.size(); }
  bool contains(Int v) const { return values.count(v) != 0; }
  bool operator==(const NormSet&) const = default;
};

// H = {b : N(b) = 1}, by exhaustive sweep of the p^2 ring elements.
GeneratorSet unit_norm_set(Int p);

// Same set via x = (s^2 - 1)/(s^2 + 1), y = -2s/(s^2 + 1) plus the point (1, 0).
GeneratorSet unit_norm_set_param(Int p);

// {g h : h in H}, sorted. Throws ZeroElement for g = 0.
std::vector<GaussRes> coset(const GaussRes& g, const GeneratorSet& h);

// {b : N(b) = c}, sorted, by exhaustive sweep.
std::vector<GaussRes> norm_class(const Residue& c);

// N_p(c) = {N(1 + b) : N(b) = c}. Throws ZeroNormClass for c = 0.
NormSet neighbor_norms(const Residue& c);

// N_p(t) via the sweep {x^{-1} (x + 1)(x + t) : x != 0}. Needs p = 1 (mod 4).
NormSet neighbor_norms_poly(const Residue& t);

// {N(b + z) : N(b) = 1} for a proper zero divisor z.
NormSet zero_divisor_neighbor_norms(const GaussRes& z);

// P_t(x, y) = y (x + 1)^2 - x (y + 1)(y + t).
Residue curve_poly(const Residue& t, const Residue& x, const Residue& y);

// Homogenization x y (x - y) + (1 - t) x y z + (y - t x) z^2.
Residue curve_poly_homogeneous(const Residue& t, const Residue& x, const Residue& y,
                               const Residue& z);

struct CurvePointCount {
  Int affine;      // |V_t|
  Int at_infinity; // projective zeros with z = 0
  Int projective;  // |X_t| = affine + at_infinity
};

// Exhaustive count over (Z/pZ)^2 and the projective line at infinity.
// Throws DegenerateT for t in {0, 1}, where P_t factors.
CurvePointCount curve_point_count(const Residue& t);

}  // namespace leecode
