#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycpres/cli/cache.hpp"
#include "cycpres/cli/records.hpp"

namespace cycpres::cli {

enum class Mode {
  Classify,
  VerifyTheoremA,
  VerifyCorollaryB,
  VerifyTheoremC,
  VerifyLemma,
  VerifyOdoni,
  VerifyResultantSymmetry,
  VerifyReduction,
  VerifyFlip,
  OpenCases,
};

std::optional<Mode> parse_mode(std::string_view name);
std::string_view mode_name(Mode m);
const std::vector<std::string_view>& mode_names();

enum class NFilter { All, Gcd6Coprime };

struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

inline constexpr std::int64_t kDefaultMaxN = 60;

struct ScanSpec {
  std::vector<std::int64_t> n_values;
  NFilter filter = NFilter::All;
  std::optional<IntRange> r, s, k, q;  // default 1..n
  bool s_locked = false;               // s = r - 1
  bool r_ge_s = false;
  Mode mode = Mode::Classify;
  unsigned jobs = 1;
  bool witness = false;
};

/// "5,7,11", "2..30" or a comma-separated mix. Throws std::invalid_argument.
std::vector<std::int64_t> parse_n_list(std::string_view text);

/// "A..B" or "A". Throws std::invalid_argument.
IntRange parse_range(std::string_view text);

/// Throws std::invalid_argument on an empty n set, n < 2, empty ranges, or
/// n above kDefaultMaxN without `force`.
void validate(const ScanSpec& spec, bool force);

/// Tuples visited by the spec's mode, sorted lexicographically by (r,n,k,s,q).
std::vector<PrishParams> enumerate(const ScanSpec& spec);

struct Evaluation {
  ResultRecord record;
  bool violation = false;
};

struct SweepSummary {
  std::uint64_t tuples = 0;
  std::uint64_t perfect = 0;
  std::uint64_t violations = 0;
  std::vector<PrishParams> violating;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_spot_checks = 0;
  std::uint64_t cache_mismatches = 0;
};

using Sink = std::function<void(const Evaluation&)>;

/// Evaluates every tuple of the spec with `jobs` workers and hands results to
/// `sink` in enumeration order. The cache, when given, supplies determinants
/// and receives new ones; about 1% of hits are recomputed and compared.
SweepSummary run_sweep(const ScanSpec& spec, const Sink& sink, ResultCache* cache = nullptr,
                       std::ostream* warnings = nullptr);

} // namespace cycpres::cli
