#include "leecode/cayley.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace leecode {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "Lee sphere size exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "Lee sphere size exceeds 64 bits");
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i; divide first where possible.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, i);
    r = checked_mul(r / g, num / (i / g));
  }
  return r;
}

}  // namespace

std::uint64_t lee_sphere_size(std::uint64_t n, std::uint64_t r) {
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i <= std::min(n, r); ++i) {
    if (i >= 64) throw Error(ErrorKind::Overflow, "Lee sphere size exceeds 64 bits");
    const std::uint64_t term =
        checked_mul(checked_mul(std::uint64_t{1} << i, binomial(n, i)), binomial(r, i));
    total = checked_add(total, term);
  }
  return total;
}

DistanceMap distance_map(const GeneratorSet& h) {
  const Int q = h.modulus();
  const auto uq = static_cast<std::uint64_t>(q);
  if (uq * uq > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::ModulusOutOfRange, "graph order exceeds 2^32 vertices");
  }
  const auto count = static_cast<std::size_t>(uq * uq);

  std::vector<std::uint32_t> gen_re;
  std::vector<std::uint32_t> gen_im;
  for (const GaussRes& g : h) {
    gen_re.push_back(static_cast<std::uint32_t>(g.re().value()));
    gen_im.push_back(static_cast<std::uint32_t>(g.im().value()));
  }

  DistanceMap out;
  out.modulus_ = q;
  out.dist_.assign(count, -1);
  out.parent_.assign(count, -1);
  out.order_.reserve(count);
  out.dist_[0] = 0;
  out.order_.push_back(0);

  const auto q32 = static_cast<std::uint32_t>(q);
  for (std::size_t head = 0; head < out.order_.size(); ++head) {
    const std::uint32_t v = out.order_[head];
    const std::uint32_t a = v / q32;
    const std::uint32_t b = v % q32;
    const int next = out.dist_[v] + 1;
    for (std::size_t k = 0; k < gen_re.size(); ++k) {
      std::uint32_t na = a + gen_re[k];
      if (na >= q32) na -= q32;
      std::uint32_t nb = b + gen_im[k];
      if (nb >= q32) nb -= q32;
      const std::uint32_t w = na * q32 + nb;
      if (out.dist_[w] < 0) {
        out.dist_[w] = next;
        out.parent_[w] = static_cast<int>(k);
        out.order_.push_back(w);
      }
    }
  }
  if (out.order_.size() != count) {
    throw Error(ErrorKind::NotGenerating,
                std::to_string(count - out.order_.size()) + " vertices unreachable from 0");
  }
  out.max_distance_ = out.dist_[out.order_.back()];
  return out;
}

std::uint64_t CayleyAnalysis::ball_size(int t) const {
  std::uint64_t total = 0;
  for (int s = 0; s <= t && s < static_cast<int>(distribution.size()); ++s) total += distribution[s];
  return total;
}

CayleyAnalysis analyze(const DistanceMap& dist, std::size_t degree) {
  if (degree % 2 != 0) {
    throw Error(ErrorKind::OddDegree, "|H| = " + std::to_string(degree) + " is odd");
  }
  CayleyAnalysis out{};
  out.modulus = dist.modulus();
  out.degree = degree;
  out.half_degree = degree / 2;
  out.order = static_cast<std::uint64_t>(dist.modulus()) * static_cast<std::uint64_t>(dist.modulus());
  out.diameter = dist.max_distance();
  out.distribution.assign(static_cast<std::size_t>(out.diameter) + 1, 0);
  for (int d : dist.distances()) ++out.distribution[static_cast<std::size_t>(d)];

  // Ball sizes never exceed the sphere sizes, and the sphere grows strictly,
  // so the first mismatch ends the scan.
  out.correction_capacity = 0;
  for (int t = 1; t <= out.diameter; ++t) {
    if (out.ball_size(t) != lee_sphere_size(out.half_degree, static_cast<std::uint64_t>(t))) break;
    out.correction_capacity = t;
  }
  return out;
}

CayleyAnalysis analyze(const GeneratorSet& h) {
  if (h.size() % 2 != 0) {
    throw Error(ErrorKind::OddDegree, "|H| = " + std::to_string(h.size()) + " is odd");
  }
  return analyze(distance_map(h), h.size());
}

DistanceBoundsReport verify_distance_bounds(const CayleyAnalysis& a) {
  const std::uint64_t n = a.half_degree;
  const auto w = [&](int t) -> std::uint64_t {
    return t < static_cast<int>(a.distribution.size()) ? a.distribution[t] : 0;
  };
  const bool far_vertex = a.diameter >= 4;

  DistanceBoundsReport out{};
  out.p = a.modulus;
  out.n = n;
  out.order = a.order;
  out.counting_total = 4 * n * n + 1;
  out.counting_applies = a.modulus % 4 == 3;
  out.contradiction = out.counting_total > out.order;

  const auto row = [&](int t, std::uint64_t bound, bool exact, bool conditional) {
    DistanceBound r{t, w(t), bound, exact, conditional, conditional && !far_vertex, false};
    const bool ok = exact ? r.actual == bound : r.actual >= bound;
    r.holds = r.vacuous || ok;
    out.rows.push_back(r);
  };
  row(0, 1, true, false);
  row(1, 2 * n, true, false);
  row(2, (n - 1) * 2 * n, false, false);
  row(3, (n - 1) * 2 * n, false, true);
  row(4, 2 * n, false, true);

  out.all_hold = std::all_of(out.rows.begin(), out.rows.end(),
                             [](const DistanceBound& r) { return r.holds; }) &&
                 (!out.counting_applies || out.contradiction);
  return out;
}

}  // namespace leecode
