#pragma once

// Adjacency spectrum of Cayley graphs on Z[i]/pZ[i].
//
// The characters of the additive group are chi_{a,b}(x + yi) =
// exp(2 pi i (a x + b y) / p), and each one is an eigenvector with
// eigenvalue sum_{h in H} chi_{a,b}(h). Because H = -H that sum is real:
// a sum of cosines. Phases are reduced mod p before the table lookup, so
// no angle ever grows beyond 2 pi.

#include <string_view>
#include <vector>

#include "leecode/normsets.hpp"

namespace leecode {

inline constexpr double kRamanujanTolerance = 1e-6;

// Character-sum eigenvalue for the character indexed by (a, b).
double eigenvalue(const GeneratorSet& h, const Residue& a, const Residue& b);

struct SpectrumReport {
  Int p;
  std::size_t degree;
  std::vector<double> eigenvalues;  // index a * p + b
  double max_nontrivial;            // max |lambda| over (a, b) != (0, 0)
  double ramanujan_bound;           // 2 sqrt(degree - 1)
  bool is_ramanujan;
  double margin;                    // max_nontrivial - ramanujan_bound
};

// Spectrum of Cay(Z[i]/qZ[i], H) for any symmetric H.
SpectrumReport spectrum(const GeneratorSet& h);
// Spectrum of the unit-norm graph G_p.
SpectrumReport spectrum(Int p);

enum class PrimeFilter { All, OneMod4, ThreeMod4, PlusMinusFiveMod12, PlusMinusOneMod12 };

// Accepts "all", "1mod4", "3mod4", "pm5mod12", "pm1mod12".
PrimeFilter parse_prime_filter(std::string_view text);
std::string_view to_string(PrimeFilter f) noexcept;
bool matches(PrimeFilter f, Int p) noexcept;

struct ScanRow {
  Int p;
  bool is_ramanujan;
  double margin;
  double max_nontrivial;
  double ramanujan_bound;
};

// One row per odd prime p <= limit passing the filter.
std::vector<ScanRow> scan_primes(Int limit, PrimeFilter filter);

}  // namespace leecode
