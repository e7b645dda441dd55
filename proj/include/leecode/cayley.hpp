#pragma once

// Cayley graphs Cay(Z[i]/qZ[i], H) over the additive group.
//
// The graph is never materialized: vertices are ring elements addressed by
// GaussRes::index(), and neighbors are produced on the fly by adding each
// generator. BFS is O(q^2 |H|) time and O(q^2) memory.

#include <cstdint>
#include <vector>

#include "leecode/normsets.hpp"

namespace leecode {

// |B_r^n| = sum_{i=0}^{min(n,r)} 2^i C(n,i) C(r,i). Throws Overflow if the
// count does not fit in 64 bits.
std::uint64_t lee_sphere_size(std::uint64_t n, std::uint64_t r);

// Shortest-path distances from 0 plus a BFS tree.
class DistanceMap {
 public:
  Int modulus() const noexcept { return modulus_; }
  int distance(const GaussRes& v) const { return dist_.at(v.index()); }
  const std::vector<int>& distances() const noexcept { return dist_; }
  int max_distance() const noexcept { return max_distance_; }

  // Index into H of the last generator on the BFS-tree path 0 -> v, or -1
  // for the root. Ties follow the canonical order of H.
  int parent_generator(const GaussRes& v) const { return parent_.at(v.index()); }

  // Vertex indices in BFS discovery order; parents always precede children.
  const std::vector<std::uint32_t>& order() const noexcept { return order_; }

 private:
  friend DistanceMap distance_map(const GeneratorSet& h);

  Int modulus_ = 0;
  int max_distance_ = 0;
  std::vector<int> dist_;
  std::vector<int> parent_;
  std::vector<std::uint32_t> order_;
};

// Throws NotGenerating if H does not reach every vertex.
DistanceMap distance_map(const GeneratorSet& h);

struct CayleyAnalysis {
  Int modulus;
  std::size_t degree;        // |H|
  std::size_t half_degree;   // n = |H| / 2
  std::uint64_t order;       // q^2
  std::vector<std::uint64_t> distribution;  // W_0 .. W_diameter
  int diameter;
  int correction_capacity;

  // Number of vertices within distance t of 0.
  std::uint64_t ball_size(int t) const;
};

// Throws OddDegree when |H| is odd, plus the errors of distance_map.
CayleyAnalysis analyze(const GeneratorSet& h);
CayleyAnalysis analyze(const DistanceMap& dist, std::size_t degree);

// One row of the distance-distribution table used in the counting argument
// for p = 3 (mod 4). Rows for t = 3 and t = 4 only bind if some vertex sits
// at distance 4; when none does they are reported as vacuous.
struct DistanceBound {
  int t;
  std::uint64_t actual;
  std::uint64_t bound;
  bool exact;        // W_t == bound rather than W_t >= bound
  bool conditional;  // only meaningful under a distance-4 vertex
  bool vacuous;
  bool holds;
};

struct DistanceBoundsReport {
  Int p;
  std::uint64_t n;
  std::vector<DistanceBound> rows;
  std::uint64_t counting_total;  // 1 + 2n(1 + (n-1) + (n-1) + 1) = 4n^2 + 1
  std::uint64_t order;           // p^2
  bool counting_applies;         // p = 3 (mod 4)
  bool contradiction;            // counting_total > order
  bool all_hold;
};

// Expects the analysis of the unit-norm graph for an odd prime p.
DistanceBoundsReport verify_distance_bounds(const CayleyAnalysis& analysis);

}  // namespace leecode
