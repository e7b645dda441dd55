#include "leecode/code.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace leecode {

Word::Word(Int modulus, std::vector<Int> coords) : modulus_(modulus), coords_(std::move(coords)) {
  check_modulus(modulus_);
  for (Int& c : coords_) c = Residue(c, modulus_).value();
}

Word Word::zero(Int modulus, std::size_t n) { return Word(modulus, std::vector<Int>(n, 0)); }

Word Word::unit(Int modulus, std::size_t n, std::size_t j) {
  std::vector<Int> c(n, 0);
  c.at(j) = 1;
  return Word(modulus, std::move(c));
}

namespace {

void same_shape(const Word& a, const Word& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorKind::ModulusMismatch, "word moduli differ");
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "word lengths " + std::to_string(a.size()) + " and " +
                                               std::to_string(b.size()));
  }
}

}  // namespace

Word operator+(const Word& a, const Word& b) {
  same_shape(a, b);
  std::vector<Int> c(a.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coords_[j] + b.coords_[j];
  return Word(a.modulus_, std::move(c));
}

Word operator-(const Word& a, const Word& b) {
  same_shape(a, b);
  std::vector<Int> c(a.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coords_[j] - b.coords_[j];
  return Word(a.modulus_, std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  os << '(';
  for (std::size_t j = 0; j < w.size(); ++j) os << (j ? "," : "") << w[j];
  return os << ')';
}

Int lee_weight(const Word& w) {
  Int total = 0;
  for (Int c : w.coords()) total += std::min(c, w.modulus() - c);
  return total;
}

Int lee_distance(const Word& v, const Word& w) { return lee_weight(v - w); }

LeeCode::LeeCode(GeneratorSet h, DistanceMap dist)
    : generators_(std::move(h)),
      parity_{generators_.modulus(), {}},
      dist_(std::move(dist)),
      analysis_(analyze(dist_, generators_.size())) {
  const auto& hs = generators_.elements();
  for (const GaussRes& g : hs) {
    const GaussRes neg = gneg(g);
    if (g == neg) {
      throw Error(ErrorKind::InvalidGeneratorSet, to_string(g) + " is its own negative");
    }
    if (g < neg) representatives_.push_back(g);
  }
  for (const GaussRes& r : representatives_) {
    parity_.rows[0].push_back(r.re().value());
    parity_.rows[1].push_back(r.im().value());
  }
  gen_coord_.resize(hs.size());
  gen_sign_.resize(hs.size());
  for (std::size_t k = 0; k < hs.size(); ++k) {
    const bool positive = hs[k] < gneg(hs[k]);
    const GaussRes rep = positive ? hs[k] : gneg(hs[k]);
    const auto it = std::lower_bound(representatives_.begin(), representatives_.end(), rep);
    gen_coord_[k] = static_cast<std::size_t>(it - representatives_.begin());
    gen_sign_[k] = positive ? 1 : -1;
  }
}

LeeCode LeeCode::from_generators(GeneratorSet h) {
  DistanceMap dist = distance_map(h);
  return LeeCode(std::move(h), std::move(dist));
}

LeeCode build_code(Int p) { return LeeCode::from_generators(unit_norm_set(p)); }

Word LeeCode::leader(const GaussRes& s) const {
  if (s.modulus() != modulus()) throw Error(ErrorKind::ModulusMismatch, "syndrome modulus");
  std::vector<Int> e(dimension(), 0);
  GaussRes v = s;
  for (int k = dist_.parent_generator(v); k >= 0; k = dist_.parent_generator(v)) {
    const auto idx = static_cast<std::size_t>(k);
    e[gen_coord_[idx]] += gen_sign_[idx];
    v = gsub(v, generators_.elements()[idx]);
  }
  return Word(modulus(), std::move(e));
}

GaussRes syndrome(const LeeCode& code, const Word& w) {
  if (w.modulus() != code.modulus()) throw Error(ErrorKind::ModulusMismatch, "word modulus");
  if (w.size() != code.dimension()) {
    throw Error(ErrorKind::LengthMismatch, "word has length " + std::to_string(w.size()) +
                                               ", code has dimension " +
                                               std::to_string(code.dimension()));
  }
  const Int q = code.modulus();
  GaussRes s = GaussRes::zero(q);
  for (std::size_t j = 0; j < w.size(); ++j) {
    s = gadd(s, gmul(GaussRes(w[j], 0, q), code.representatives()[j]));
  }
  return s;
}

bool is_codeword(const LeeCode& code, const Word& w) { return syndrome(code, w).is_zero(); }

DecodeResult decode(const LeeCode& code, const Word& w) {
  Word error = code.leader(syndrome(code, w));
  Word codeword = w - error;
  return {std::move(codeword), std::move(error)};
}

Classification classify(const LeeCode& code) {
  return {code.analysis().correction_capacity, code.analysis().diameter};
}

std::string codeword_count(const LeeCode& code) {
  // Little-endian base-10 digits.
  std::vector<int> digits{1};
  const Int q = code.modulus();
  const std::size_t n = code.dimension();
  for (std::size_t k = 2; k < n; ++k) {
    Int carry = 0;
    for (int& d : digits) {
      const Int v = static_cast<Int>(d) * q + carry;
      d = static_cast<int>(v % 10);
      carry = v / 10;
    }
    for (; carry > 0; carry /= 10) digits.push_back(static_cast<int>(carry % 10));
  }
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) out.push_back(static_cast<char>('0' + *it));
  return out;
}

std::size_t parity_check_rank(const LeeCode& code) {
  const Int p = code.modulus();
  require_odd_prime(p);
  std::array<std::vector<Residue>, 2> m;
  for (int r = 0; r < 2; ++r) {
    for (Int v : code.parity_check().rows[r]) m[r].emplace_back(v, p);
  }
  std::size_t rank = 0;
  const std::size_t cols = code.dimension();
  for (std::size_t c = 0; c < cols && rank < 2; ++c) {
    std::size_t pivot = rank;
    while (pivot < 2 && m[pivot][c].is_zero()) ++pivot;
    if (pivot == 2) continue;
    std::swap(m[rank], m[pivot]);
    const Residue inv = rinv(m[rank][c]);
    for (std::size_t r = 0; r < 2; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Residue f = m[r][c] * inv;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Word> enumerate_codewords(const LeeCode& code) {
  const auto q = static_cast<std::uint64_t>(code.modulus());
  const std::size_t n = code.dimension();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    total *= q;
    if (total > kMaxBruteForceWords) {
      throw Error(ErrorKind::Overflow, "q^n exceeds the brute-force enumeration limit");
    }
  }
  const auto& rows = code.parity_check().rows;
  const Int qi = code.modulus();
  std::vector<Word> out;
  std::vector<Int> c(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < n; ++j) {
      c[j] = static_cast<Int>(rest % q);
      rest /= q;
    }
    Int s0 = 0;
    Int s1 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      s0 = (s0 + rows[0][j] * c[j]) % qi;
      s1 = (s1 + rows[1][j] * c[j]) % qi;
    }
    if (s0 == 0 && s1 == 0) out.emplace_back(qi, c);
  }
  return out;
}

namespace {

void weight_words(Int q, std::size_t j, int remaining, std::vector<Int>& c,
                  const std::function<void(const Word&)>& visit) {
  if (j == c.size()) {
    if (remaining == 0) visit(Word(q, c));
    return;
  }
  for (int w = 0; w <= remaining && 2 * static_cast<Int>(w) <= q; ++w) {
    if (w == 0) {
      c[j] = 0;
      weight_words(q, j + 1, remaining, c, visit);
      continue;
    }
    c[j] = w;
    weight_words(q, j + 1, remaining - w, c, visit);
    if (2 * static_cast<Int>(w) != q) {
      c[j] = q - w;
      weight_words(q, j + 1, remaining - w, c, visit);
    }
  }
  c[j] = 0;
}

}  // namespace

void for_each_word_of_weight(Int modulus, std::size_t n, int r,
                             const std::function<void(const Word&)>& visit) {
  std::vector<Int> c(n, 0);
  weight_words(modulus, 0, r, c, visit);
}

Lemma1Report verify_lemma1(const LeeCode& code, std::span<const Word> sample) {
  Lemma1Report out;
  out.all_agree = true;

  std::vector<Word> codewords;
  bool enumerate = true;
  try {
    codewords = enumerate_codewords(code);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
    enumerate = false;
  }
  out.method = enumerate ? "codeword-enumeration" : "ball-search";

  for (const Word& x : sample) {
    const GaussRes s = syndrome(code, x);
    const int graph = code.distances().distance(s);
    Int best = -1;
    if (enumerate) {
      for (const Word& c : codewords) {
        const Int d = lee_distance(x, c);
        if (best < 0 || d < best) best = d;
      }
    } else {
      // x - c ranges over the coset of words with syndrome s.
      for (int r = 0; best < 0; ++r) {
        for_each_word_of_weight(code.modulus(), code.dimension(), r, [&](const Word& y) {
          if (best < 0 && syndrome(code, y) == s) best = r;
        });
      }
    }
    const bool agrees = best == graph;
    out.all_agree = out.all_agree && agrees;
    out.rows.push_back({x, graph, best, agrees});
  }
  return out;
}

std::string export_parity_check(const LeeCode& code, std::string_view format) {
  const auto& rows = code.parity_check().rows;
  if (format == "csv") {
    std::ostringstream os;
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
      os << '\n';
    }
    return os.str();
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["p"] = code.modulus();
    j["n"] = code.dimension();
    j["rows"] = {rows[0], rows[1]};
    auto reps = nlohmann::ordered_json::array();
    for (const GaussRes& r : code.representatives()) reps.push_back({r.re().value(), r.im().value()});
    j["representatives"] = reps;
    return j.dump() + "\n";
  }
  throw Error(ErrorKind::UnknownFormat, "unknown export format '" + std::string(format) + "'");
}

namespace {

std::vector<Int> parse_csv_row(const std::string& line) {
  std::vector<Int> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(cell, &used));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad matrix entry '" + cell + "'");
    }
    if (used != cell.size()) throw Error(ErrorKind::ParseError, "bad matrix entry '" + cell + "'");
  }
  return out;
}

}  // namespace

ParityCheckMatrix parse_parity_check(std::string_view text, std::string_view format, Int modulus) {
  ParityCheckMatrix out{modulus, {}};
  if (format == "csv") {
    std::stringstream ss{std::string(text)};
    std::string line;
    std::size_t r = 0;
    while (std::getline(ss, line)) {
      if (line.empty()) continue;
      if (r == 2) throw Error(ErrorKind::ParseError, "more than two rows");
      out.rows[r++] = parse_csv_row(line);
    }
    if (r != 2) throw Error(ErrorKind::ParseError, "expected two rows");
  } else if (format == "json") {
    try {
      const auto j = nlohmann::json::parse(text);
      out.modulus = j.at("p").get<Int>();
      const auto& rows = j.at("rows");
      if (rows.size() != 2) throw Error(ErrorKind::ParseError, "expected two rows");
      out.rows[0] = rows[0].get<std::vector<Int>>();
      out.rows[1] = rows[1].get<std::vector<Int>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  } else {
    throw Error(ErrorKind::UnknownFormat, "unknown format '" + std::string(format) + "'");
  }
  if (out.rows[0].size() != out.rows[1].size()) {
    throw Error(ErrorKind::ParseError, "rows have different lengths");
  }
  return out;
}

}  // namespace leecode
