#pragma once

// Linear Lee codes C = ker(phi) with phi(e_j) = beta_j, where {+-beta_j} is
// the generator set of a Cayley graph on Z[i]/qZ[i]. The parity-check
// matrix has Re(beta_j) in row 0 and Im(beta_j) in row 1.
//
// Syndrome decoding uses the BFS tree of the Cayley graph: the coset leader
// of a syndrome s is read off the tree path from 0 to s, so its Lee weight
// equals the graph distance d(s, 0).

#include <array>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leecode/cayley.hpp"

namespace leecode {

// Element of Z_q^n with coordinates in [0, q).
class Word {
 public:
  Word(Int modulus, std::vector<Int> coords);

  static Word zero(Int modulus, std::size_t n);
  static Word unit(Int modulus, std::size_t n, std::size_t j);

  Int modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<Int>& coords() const noexcept { return coords_; }
  Int operator[](std::size_t j) const { return coords_.at(j); }

  friend Word operator+(const Word& a, const Word& b);
  friend Word operator-(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

 private:
  Int modulus_;
  std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

Int lee_weight(const Word& w);
Int lee_distance(const Word& v, const Word& w);

struct Classification {
  int correction;
  int covering;
  bool operator==(const Classification&) const = default;
};

struct DecodeResult {
  Word codeword;
  Word error;
};

struct ParityCheckMatrix {
  Int modulus;
  std::array<std::vector<Int>, 2> rows;
  bool operator==(const ParityCheckMatrix&) const = default;
};

class LeeCode {
 public:
  // Any symmetric generator set whose elements pair up as {b, -b} with
  // b != -b. From each pair the lexicographically smaller element becomes a
  // representative; representatives keep the canonical order of H.
  static LeeCode from_generators(GeneratorSet h);

  Int modulus() const noexcept { return generators_.modulus(); }
  std::size_t dimension() const noexcept { return representatives_.size(); }
  const GeneratorSet& generators() const noexcept { return generators_; }
  const std::vector<GaussRes>& representatives() const noexcept { return representatives_; }
  const ParityCheckMatrix& parity_check() const noexcept { return parity_; }
  const CayleyAnalysis& analysis() const noexcept { return analysis_; }
  const DistanceMap& distances() const noexcept { return dist_; }

  // Minimal-Lee-weight word with the given syndrome.
  Word leader(const GaussRes& syndrome) const;
  // One entry per group element: q^2.
  std::size_t leader_count() const noexcept { return dist_.distances().size(); }

 private:
  LeeCode(GeneratorSet h, DistanceMap dist);

  GeneratorSet generators_;
  std::vector<GaussRes> representatives_;
  ParityCheckMatrix parity_;
  DistanceMap dist_;
  CayleyAnalysis analysis_;
  std::vector<std::size_t> gen_coord_;
  std::vector<Int> gen_sign_;
};

// The unit-norm code over Z_p^n, n = 2[p/4]. Requires an odd prime.
LeeCode build_code(Int p);

GaussRes syndrome(const LeeCode& code, const Word& w);
bool is_codeword(const LeeCode& code, const Word& w);
DecodeResult decode(const LeeCode& code, const Word& w);

// (error correction, covering radius) = (graph capacity, graph diameter).
Classification classify(const LeeCode& code);

// p^{n-2} in decimal; exact for any size.
std::string codeword_count(const LeeCode& code);

// Rank of the parity-check matrix over Z/pZ. Requires a prime modulus.
std::size_t parity_check_rank(const LeeCode& code);

// Every codeword, by filtering all q^n words through the parity check.
// Limited to q^n <= kMaxBruteForceWords.
inline constexpr std::uint64_t kMaxBruteForceWords = 100'000;
std::vector<Word> enumerate_codewords(const LeeCode& code);

// Calls visit(w) for every word of Lee weight exactly r.
void for_each_word_of_weight(Int modulus, std::size_t n, int r,
                             const std::function<void(const Word&)>& visit);

struct Lemma1Row {
  Word word;
  int graph_distance;  // d_G(phi(x), 0)
  Int code_distance;   // min over codewords of d(x, c)
  bool agrees;
};

struct Lemma1Report {
  std::string method;  // "codeword-enumeration" or "ball-search"
  std::vector<Lemma1Row> rows;
  bool all_agree;
};

// Compares graph distance of the syndrome with the distance to the code,
// computed by brute force over codewords when q^n is small, otherwise by
// growing Lee balls around x until one hits the coset x + C.
Lemma1Report verify_lemma1(const LeeCode& code, std::span<const Word> sample);

// "csv": two newline-terminated rows of comma-separated residues.
// "json": {"p", "n", "rows", "representatives"}.
std::string export_parity_check(const LeeCode& code, std::string_view format);
ParityCheckMatrix parse_parity_check(std::string_view text, std::string_view format,
                                     Int modulus = 0);

}  // namespace leecode
