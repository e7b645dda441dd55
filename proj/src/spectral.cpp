#include "leecode/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace leecode {

namespace {

std::vector<double> cosine_table(Int q) {
  std::vector<double> out(static_cast<std::size_t>(q));
  for (Int k = 0; k < q; ++k) {
    out[static_cast<std::size_t>(k)] =
        std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q));
  }
  return out;
}

double character_sum(const std::vector<double>& cosines, const GeneratorSet& h, Int a, Int b) {
  const Int q = h.modulus();
  double sum = 0.0;
  for (const GaussRes& g : h) sum += cosines[static_cast<std::size_t>((a * g.re().value() + b * g.im().value()) % q)];
  return sum;
}

}  // namespace

double eigenvalue(const GeneratorSet& h, const Residue& a, const Residue& b) {
  if (a.modulus() != h.modulus() || b.modulus() != h.modulus()) {
    throw Error(ErrorKind::ModulusMismatch, "character index modulus");
  }
  return character_sum(cosine_table(h.modulus()), h, a.value(), b.value());
}

SpectrumReport spectrum(const GeneratorSet& h) {
  const Int q = h.modulus();
  const auto cosines = cosine_table(q);
  SpectrumReport out{};
  out.p = q;
  out.degree = h.size();
  out.eigenvalues.resize(static_cast<std::size_t>(q * q));
  const double degree = static_cast<double>(h.size());
  out.ramanujan_bound = 2.0 * std::sqrt(degree - 1.0);
  out.max_nontrivial = 0.0;
  // Nontrivial eigenvalues with |lambda| = degree (a bipartite component)
  // are allowed by the Ramanujan definition; track the rest separately.
  double max_constrained = 0.0;
  for (Int a = 0; a < q; ++a) {
    for (Int b = 0; b < q; ++b) {
      const double lambda = character_sum(cosines, h, a, b);
      out.eigenvalues[static_cast<std::size_t>(a * q + b)] = lambda;
      if (a == 0 && b == 0) continue;
      const double mag = std::abs(lambda);
      out.max_nontrivial = std::max(out.max_nontrivial, mag);
      if (std::abs(mag - degree) > kRamanujanTolerance) max_constrained = std::max(max_constrained, mag);
    }
  }
  out.is_ramanujan = max_constrained <= out.ramanujan_bound + kRamanujanTolerance;
  out.margin = out.max_nontrivial - out.ramanujan_bound;
  return out;
}

SpectrumReport spectrum(Int p) { return spectrum(unit_norm_set(p)); }

PrimeFilter parse_prime_filter(std::string_view text) {
  if (text == "all") return PrimeFilter::All;
  if (text == "1mod4") return PrimeFilter::OneMod4;
  if (text == "3mod4") return PrimeFilter::ThreeMod4;
  if (text == "pm5mod12") return PrimeFilter::PlusMinusFiveMod12;
  if (text == "pm1mod12") return PrimeFilter::PlusMinusOneMod12;
  throw Error(ErrorKind::ParseError, "unknown prime filter '" + std::string(text) + "'");
}

std::string_view to_string(PrimeFilter f) noexcept {
  switch (f) {
    case PrimeFilter::All: return "all";
    case PrimeFilter::OneMod4: return "1mod4";
    case PrimeFilter::ThreeMod4: return "3mod4";
    case PrimeFilter::PlusMinusFiveMod12: return "pm5mod12";
    case PrimeFilter::PlusMinusOneMod12: return "pm1mod12";
  }
  return "all";
}

bool matches(PrimeFilter f, Int p) noexcept {
  switch (f) {
    case PrimeFilter::All: return true;
    case PrimeFilter::OneMod4: return p % 4 == 1;
    case PrimeFilter::ThreeMod4: return p % 4 == 3;
    case PrimeFilter::PlusMinusFiveMod12: return p % 12 == 5 || p % 12 == 7;
    case PrimeFilter::PlusMinusOneMod12: return p % 12 == 1 || p % 12 == 11;
  }
  return false;
}

std::vector<ScanRow> scan_primes(Int limit, PrimeFilter filter) {
  std::vector<ScanRow> out;
  for (Int p = 3; p <= limit; p += 2) {
    if (!is_prime(p) || !matches(filter, p)) continue;
    const SpectrumReport r = spectrum(p);
    out.push_back({p, r.is_ramanujan, r.margin, r.max_nontrivial, r.ramanujan_bound});
  }
  return out;
}

}  // namespace leecode
