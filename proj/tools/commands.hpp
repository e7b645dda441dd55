#pragma once

// Command implementations behind the `leecode` executable. Each command
// returns a RunReport; main() only parses flags and prints.
//
// Exit codes: 0 all checks pass, 1 a verified claim failed, 2 usage or
// input error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "leecode/spectral.hpp"

namespace leecode::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

// Largest scan limit accepted without --extended.
inline constexpr Int kDefaultScanCap = 500;
// Largest modulus accepted by verify (q^2 must index 32-bit vertex ids).
inline constexpr Int kMaxVerifyPrime = 46'337;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<std::string> text;  // human-readable rendering
  int exit_code = kExitOk;
  double elapsed_ms = 0.0;
};

// {"command", "params", "results", "version"}; elapsed time is left out so
// identical inputs serialize identically.
nlohmann::ordered_json to_json(const RunReport& report);
std::string render_text(const RunReport& report);

RunReport cmd_construct(Int p);
RunReport cmd_verify(Int first, Int last);
RunReport cmd_table1();

struct DecodeOptions {
  Int p = 7;
  std::optional<std::vector<Int>> word;
  std::optional<int> random_errors;
  int trials = 1000;
  std::uint64_t seed = 1;
};
RunReport cmd_decode(const DecodeOptions& options);

struct SpectrumOptions {
  std::optional<Int> prime;
  std::optional<Int> scan_limit;
  PrimeFilter filter = PrimeFilter::All;
  bool extended = false;
};
RunReport cmd_spectrum(const SpectrumOptions& options);

RunReport cmd_curves(Int p);

// results["content"] holds the serialized matrix.
RunReport cmd_export(Int p, const std::string& format);

// "A..B" -> (A, B).
std::pair<Int, Int> parse_range(const std::string& text);
// "1,2,3" -> {1, 2, 3}.
std::vector<Int> parse_word(const std::string& text);

// Uniform integer in [0, bound) from raw mt19937_64 output, by rejection.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed);
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leecode::cli
