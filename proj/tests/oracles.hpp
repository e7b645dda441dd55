#pragma once

// Test-only reference implementations. They use plain integer arithmetic,
// dense matrices and exhaustive search, and deliberately share no code path
// with the library routines they check.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Pair = std::pair<long long, long long>;

inline long long mod(long long a, long long q) { return ((a % q) + q) % q; }

inline Pair mul(Pair a, Pair b, long long q) {
  return {mod(a.first * b.first - a.second * b.second, q), mod(a.first * b.second + a.second * b.first, q)};
}

inline long long norm(Pair a, long long q) { return mod(a.first * a.first + a.second * a.second, q); }

// Inverse by exhaustive search; (-1, -1) if none exists.
inline Pair brute_inverse(Pair a, long long q) {
  for (long long x = 0; x < q; ++x) {
    for (long long y = 0; y < q; ++y) {
      if (mul(a, {x, y}, q) == Pair{1, 0}) return {x, y};
    }
  }
  return {-1, -1};
}

// Number of integer vectors in Z^n with L1 norm <= r.
inline std::uint64_t lattice_ball(int n, int r) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (int v = -r; v <= r; ++v) total += lattice_ball(n - 1, r - std::abs(v));
  return total;
}

// Distances from vertex 0 via powers of (I + A): d(v) is the least k with
// ((I + A)^k)[v, 0] > 0. Vertex index is re * q + im.
inline std::vector<int> reachability_distances(long long q, const std::vector<Pair>& gens) {
  const int count = static_cast<int>(q * q);
  Eigen::MatrixXd step = Eigen::MatrixXd::Identity(count, count);
  for (int v = 0; v < count; ++v) {
    const long long a = v / q;
    const long long b = v % q;
    for (auto [x, y] : gens) step(static_cast<int>(mod(a + x, q) * q + mod(b + y, q)), v) = 1.0;
  }
  std::vector<int> dist(static_cast<std::size_t>(count), -1);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(count, count);
  for (int k = 0; k <= count; ++k) {
    for (int v = 0; v < count; ++v) {
      if (dist[static_cast<std::size_t>(v)] < 0 && power(v, 0) > 0.5) dist[static_cast<std::size_t>(v)] = k;
    }
    power = step * power;
    power = power.unaryExpr([](double x) { return x > 0.5 ? 1.0 : 0.0; });
  }
  return dist;
}

// Adjacency eigenvalues, ascending, from a dense symmetric eigensolver.
inline std::vector<double> dense_spectrum(long long q, const std::vector<Pair>& gens) {
  const int count = static_cast<int>(q * q);
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(count, count);
  for (int v = 0; v < count; ++v) {
    const long long a = v / q;
    const long long b = v % q;
    for (auto [x, y] : gens) adj(static_cast<int>(mod(a + x, q) * q + mod(b + y, q)), v) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline long long lee_weight(const std::vector<long long>& w, long long q) {
  long long total = 0;
  for (long long c : w) {
    const long long r = mod(c, q);
    total += std::min(r, q - r);
  }
  return total;
}

// All x in Z_q^n with M x = 0, M given by two integer rows.
inline std::vector<std::vector<long long>> kernel(const std::vector<long long>& row0,
                                                  const std::vector<long long>& row1, long long q) {
  const std::size_t n = row0.size();
  std::vector<std::vector<long long>> out;
  std::vector<long long> x(n, 0);
  for (;;) {
    long long s0 = 0;
    long long s1 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      s0 += row0[j] * x[j];
      s1 += row1[j] * x[j];
    }
    if (mod(s0, q) == 0 && mod(s1, q) == 0) out.push_back(x);
    std::size_t j = 0;
    while (j < n && ++x[j] == q) x[j++] = 0;
    if (j == n) break;
  }
  return out;
}

inline long long nearest_codeword_distance(const std::vector<long long>& x,
                                           const std::vector<std::vector<long long>>& codewords,
                                           long long q) {
  long long best = -1;
  for (const auto& c : codewords) {
    std::vector<long long> diff(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) diff[j] = x[j] - c[j];
    const long long d = lee_weight(diff, q);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

}  // namespace oracle
