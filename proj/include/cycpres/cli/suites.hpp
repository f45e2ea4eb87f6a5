#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cycpres::cli {

struct SuiteReport {
  std::string name;
  std::vector<std::int64_t> n_values;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> violating;  // verbatim descriptions
  std::vector<std::string> notes;

  bool passed() const noexcept { return violations == 0; }
};

struct SuiteOptions {
  std::optional<std::vector<std::int64_t>> n_values;
  std::optional<std::int64_t> n_max;
  unsigned jobs = 1;
  std::size_t samples = 500;       // dual-determinant polynomials per n
  std::uint64_t seed = 20240229;   // dual-determinant RNG seed
  bool force = false;
};

const std::vector<std::string_view>& suite_names();

/// Default n set of a suite before --n / --n-max are applied.
std::vector<std::int64_t> suite_default_n(std::string_view name);

/// nullopt for an unknown suite name. Throws std::invalid_argument on bad bounds.
std::optional<SuiteReport> run_suite(std::string_view name, const SuiteOptions& opt);

/// Power-sum equality versus multiset equality over all pairs of size-l multisets mod n.
SuiteReport newton_girard_suite(const std::vector<std::int64_t>& ns, std::size_t l = 4);

/// |det circ_n(c)| against prod_{d|n} |Res(f, Phi_d)| for random c in [-3, 3]^n.
SuiteReport dual_determinant_suite(const std::vector<std::int64_t>& ns, std::size_t samples,
                                   std::uint64_t seed);

void print_report(std::ostream& os, const SuiteReport& rep);

} // namespace cycpres::cli
