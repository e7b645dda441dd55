#include <gtest/gtest.h>

#include <cmath>

#include "leecode/normsets.hpp"
#include "oracles.hpp"

using namespace leecode;

namespace {

GaussRes G(Int re, Int im, Int q) { return GaussRes(re, im, q); }

std::vector<GaussRes> elems(std::initializer_list<std::pair<Int, Int>> xs, Int q) {
  std::vector<GaussRes> out;
  for (auto [a, b] : xs) out.emplace_back(a, b, q);
  std::sort(out.begin(), out.end());
  return out;
}

NormSet brute_neighbor_norms(Int c, Int p) {
  NormSet out{p, {}};
  for (Int a = 0; a < p; ++a) {
    for (Int b = 0; b < p; ++b) {
      if (oracle::norm({a, b}, p) == c) out.values.insert(oracle::norm({a + 1, b}, p));
    }
  }
  return out;
}

}  // namespace

TEST(GeneratorSet, ValidatesSymmetryAndZero) {
  EXPECT_THROW(GeneratorSet(7, {G(1, 0, 7)}), Error);
  EXPECT_THROW(GeneratorSet(7, {G(0, 0, 7)}), Error);
  EXPECT_THROW(GeneratorSet(7, {G(1, 0, 7), G(6, 0, 7), G(1, 0, 7)}), Error);
  EXPECT_THROW(GeneratorSet(7, {G(1, 0, 5), G(4, 0, 5)}), Error);
  const GeneratorSet h(7, {G(6, 0, 7), G(1, 0, 7)});
  EXPECT_EQ(h.elements().front(), G(1, 0, 7));
}

TEST(GeneratorSet, UnitClosureReproducesTableSets) {
  const std::vector<GaussRes> seeds{G(1, 0, 13), G(3, 4, 13)};
  const GeneratorSet by_units = GeneratorSet::closure_under_units(13, seeds);
  const std::vector<GaussRes> listed{G(1, 0, 13), G(3, 4, 13), G(0, 1, 13), G(-4, 3, 13)};
  EXPECT_EQ(by_units, GeneratorSet::closure_under_negation(13, listed));
  EXPECT_EQ(by_units.size(), 8u);
}

TEST(UnitNormSet, SmallPrimes) {
  EXPECT_EQ(unit_norm_set(7).elements(),
            elems({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 2}, {-2, -2}, {2, -2}, {-2, 2}}, 7));
  EXPECT_EQ(unit_norm_set(13).size(), 12u);
  EXPECT_EQ(unit_norm_set(3).elements(), elems({{1, 0}, {2, 0}, {0, 1}, {0, 2}}, 3));
}

TEST(UnitNormSet, Errors) {
  EXPECT_THROW(unit_norm_set(2), Error);
  try {
    unit_norm_set(2);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EvenPrime);
  }
  try {
    unit_norm_set(9);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrimeModulus);
  }
}

TEST(UnitNormSet, CardinalityIsTwiceHalfDegree) {
  for (Int p = 3; p <= 1000; p += 2) {
    if (!is_prime(p)) continue;
    const auto h = unit_norm_set_param(p);
    ASSERT_EQ(h.size(), static_cast<std::size_t>(2 * half_degree_for_prime(p))) << p;
    if (p <= 200) ASSERT_EQ(h, unit_norm_set(p)) << p;
  }
}

TEST(UnitNormSet, ParametrizationDetails) {
  // s = 0 gives x = -1, y = 0.
  EXPECT_TRUE(unit_norm_set_param(7).contains(G(-1, 0, 7)));
  // p = 13: the two s with s^2 = -1 are skipped, p - 2 = 11 remain, each
  // giving a distinct point, and (1, 0) brings the total to p - 1 = 12.
  int valid = 0;
  for (Int s = 0; s < 13; ++s) valid += (s * s + 1) % 13 != 0;
  EXPECT_EQ(valid, 11);
  EXPECT_EQ(unit_norm_set_param(13).size(), 12u);
}

TEST(Coset, IdentityAndZeroDivisor) {
  const GeneratorSet h7 = unit_norm_set(7);
  EXPECT_EQ(coset(GaussRes::one(7), h7), h7.elements());
  EXPECT_THROW(coset(GaussRes::zero(7), h7), Error);

  const GaussRes z(2, 1, 5);
  std::vector<GaussRes> multiples;
  for (Int x = 1; x < 5; ++x) multiples.push_back(gmul(GaussRes(x, 0, 5), z));
  std::sort(multiples.begin(), multiples.end());
  EXPECT_EQ(coset(z, unit_norm_set(5)), multiples);
}

TEST(Coset, SizeIsDegreeForEveryNonzeroElement) {
  for (Int p = 3; p <= 50; p += 2) {
    if (!is_prime(p)) continue;
    const GeneratorSet h = unit_norm_set(p);
    for (std::size_t i = 1; i < static_cast<std::size_t>(p * p); ++i) {
      const GaussRes g = GaussRes::from_index(i, p);
      const auto c = coset(g, h);
      ASSERT_EQ(c.size(), h.size()) << to_string(g) << " mod " << p;
      if (!gnorm(g).is_zero()) ASSERT_EQ(c, norm_class(gnorm(g)));
    }
  }
}

TEST(NormClass, Examples) {
  EXPECT_EQ(norm_class(Residue(1, 7)), unit_norm_set(7).elements());
  EXPECT_EQ(norm_class(Residue(0, 7)), std::vector<GaussRes>{GaussRes::zero(7)});
  const auto zeros13 = norm_class(Residue(0, 13));
  EXPECT_EQ(zeros13.size(), 25u);
  // Proper zero divisors lie on the two lines im = +-5 re.
  for (const GaussRes& z : zeros13) {
    const Int a = z.re().value();
    const Int b = z.im().value();
    EXPECT_TRUE((b - 5 * a) % 13 == 0 || (b + 5 * a) % 13 == 0);
  }
}

TEST(NeighborNorms, Examples) {
  const NormSet n7 = neighbor_norms(Residue(1, 7));
  EXPECT_EQ(n7.size(), 5u);
  EXPECT_EQ(n7.values, (std::set<Int>{0, 2, 4, 5, 6}));
  // p = 11 has n = 6; 2 is a non-residue mod 11.
  ASSERT_EQ(legendre(Residue(2, 11)), -1);
  EXPECT_EQ(neighbor_norms(Residue(2, 11)).size(), 6u);
  EXPECT_THROW(neighbor_norms(Residue(0, 11)), Error);
}

TEST(NeighborNorms, OneAbsentForPlusMinusFiveMod12) {
  for (Int p = 5; p < 200; p += 2) {
    if (!is_prime(p) || !(p % 12 == 5 || p % 12 == 7)) continue;
    EXPECT_FALSE(neighbor_norms(Residue(1, p)).contains(1)) << p;
  }
  // ...and present for +-1 (mod 12).
  EXPECT_TRUE(neighbor_norms(Residue(1, 13)).contains(1));
  EXPECT_TRUE(neighbor_norms(Residue(1, 11)).contains(1));
}

TEST(NeighborNorms, SizeFollowsLegendreSymbol) {
  for (Int p = 3; p <= 100; p += 2) {
    if (!is_prime(p)) continue;
    const auto n = static_cast<std::size_t>(half_degree_for_prime(p));
    for (Int c = 1; c < p; ++c) {
      const Residue r(c, p);
      const NormSet s = neighbor_norms(r);
      ASSERT_EQ(s, brute_neighbor_norms(c, p));
      ASSERT_EQ(s.size(), legendre(r) == 1 ? n + 1 : n) << "c=" << c << " p=" << p;
    }
  }
}

TEST(NeighborNorms, PolynomialFormAgrees) {
  for (Int p : {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97}) {
    for (Int t = 1; t < p; ++t) {
      const NormSet poly = neighbor_norms_poly(Residue(t, p));
      ASSERT_EQ(poly, neighbor_norms(Residue(t, p))) << "t=" << t << " p=" << p;
      ASSERT_TRUE(poly.contains(0));
    }
  }
  EXPECT_THROW(neighbor_norms_poly(Residue(1, 7)), Error);
  EXPECT_THROW(neighbor_norms_poly(Residue(0, 13)), Error);
}

TEST(ZeroDivisorNeighborNorms, EverythingButOne) {
  EXPECT_EQ(zero_divisor_neighbor_norms(G(2, 1, 5)).values, (std::set<Int>{0, 2, 3, 4}));
  const NormSet s13 = zero_divisor_neighbor_norms(G(5, 1, 13));
  EXPECT_EQ(s13.size(), 12u);
  EXPECT_FALSE(s13.contains(1));
  for (Int p : {5, 13, 17, 29}) {
    for (const GaussRes& z : norm_class(Residue(0, p))) {
      if (z.is_zero()) continue;
      const NormSet s = zero_divisor_neighbor_norms(z);
      ASSERT_EQ(s.size(), static_cast<std::size_t>(p - 1));
      ASSERT_FALSE(s.contains(1));
    }
  }
  EXPECT_THROW(zero_divisor_neighbor_norms(G(2, 2, 7)), Error);
}

TEST(NormSets, SameNormsForceConjugates) {
  for (Int p = 3; p <= 13; p += 2) {
    if (!is_prime(p)) continue;
    const GaussRes one = GaussRes::one(p);
    for (std::size_t i = 0; i < static_cast<std::size_t>(p * p); ++i) {
      const GaussRes g1 = GaussRes::from_index(i, p);
      for (std::size_t j = 0; j < static_cast<std::size_t>(p * p); ++j) {
        const GaussRes g2 = GaussRes::from_index(j, p);
        if (gnorm(g1) == gnorm(g2) && gnorm(gadd(one, g1)) == gnorm(gadd(one, g2))) {
          ASSERT_TRUE(g1 == g2 || g1 == gconj(g2));
        }
      }
    }
  }
}

TEST(NormSets, OnePlusUnitIsNeverAProperZeroDivisor) {
  for (Int p = 3; p <= 100; p += 2) {
    if (!is_prime(p)) continue;
    for (const GaussRes& b : unit_norm_set(p)) {
      ASSERT_FALSE(is_zero_divisor(gadd(GaussRes::one(p), b))) << to_string(b) << " mod " << p;
    }
  }
}

TEST(Curves, FactorizationIdentities) {
  for (Int p = 3; p <= 13; p += 2) {
    if (!is_prime(p)) continue;
    const Residue one(1, p);
    const Residue zero(0, p);
    for (Int xv = 0; xv < p; ++xv) {
      for (Int yv = 0; yv < p; ++yv) {
        const Residue x(xv, p);
        const Residue y(yv, p);
        ASSERT_EQ(curve_poly(one, x, y), (x * y - one) * (x - y));
        ASSERT_EQ(curve_poly(zero, x, y), (x * x - x * y + x + one) * y);
        for (Int t = 0; t < p; ++t) {
          ASSERT_EQ(curve_poly_homogeneous(Residue(t, p), x, y, one), curve_poly(Residue(t, p), x, y));
        }
      }
    }
  }
}

TEST(Curves, TrivialPointsAndInfinity) {
  for (Int p : {13, 17, 29}) {
    for (Int tv = 2; tv < p; ++tv) {
      const Residue t(tv, p);
      EXPECT_TRUE(curve_poly(t, Residue(0, p), Residue(0, p)).is_zero());
      EXPECT_TRUE(curve_poly(t, Residue(-1, p), Residue(-1, p)).is_zero());
      EXPECT_TRUE(curve_poly(t, Residue(-1, p), -t).is_zero());
      const CurvePointCount c = curve_point_count(t);
      EXPECT_EQ(c.at_infinity, 3);
      EXPECT_EQ(c.projective, c.affine + 3);
    }
  }
}

TEST(Curves, PointCountsForThirteen) {
  // Exhaustive sweep, frozen from an independent enumeration.
  const std::vector<Int> expected{15, 9, 9, 9, 15, 9, 15, 10, 9, 15, 9};
  Int min_count = 1000;
  for (Int t = 2; t < 13; ++t) {
    const Int count = curve_point_count(Residue(t, 13)).affine;
    EXPECT_EQ(count, expected[static_cast<std::size_t>(t - 2)]) << "t=" << t;
    min_count = std::min(min_count, count);
  }
  EXPECT_GE(min_count, 9);
}

TEST(Curves, HasseWeilWindow) {
  for (Int p = 5; p <= 101; p += 4) {
    if (!is_prime(p)) continue;
    for (Int t = 2; t < p; ++t) {
      const CurvePointCount c = curve_point_count(Residue(t, p));
      ASSERT_LE(std::abs(static_cast<double>(c.projective) - static_cast<double>(p + 1)),
                2.0 * std::sqrt(static_cast<double>(p)))
          << "t=" << t << " p=" << p;
      if (p >= 13) {
        ASSERT_GE(static_cast<double>(c.affine), static_cast<double>(p) - 2.0 - 2.0 * std::sqrt(static_cast<double>(p)));
      }
    }
  }
}

TEST(Curves, DegenerateParametersRejected) {
  EXPECT_THROW(curve_point_count(Residue(0, 13)), Error);
  EXPECT_THROW(curve_point_count(Residue(1, 13)), Error);
}
