#include "cycpres/cli/suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cycpres/classify.hpp"
#include "cycpres/cli/sweep.hpp"
#include "cycpres/cyclic_words.hpp"
#include "cycpres/errors.hpp"

namespace cycpres::cli {

namespace {

struct SuiteDef {
  std::string_view name;
  std::optional<Mode> mode;  // nullopt for the non-tuple suites
  std::int64_t default_n_max;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs{
      {"theorem-a", Mode::VerifyTheoremA, 13},
      {"corollary-b", Mode::VerifyCorollaryB, 13},
      {"theorem-c", Mode::VerifyTheoremC, 13},
      {"lemma", Mode::VerifyLemma, 13},
      {"odoni", Mode::VerifyOdoni, 13},
      {"resultant-symmetry", Mode::VerifyResultantSymmetry, 20},
      {"reduction", Mode::VerifyReduction, 20},
      {"flip", Mode::VerifyFlip, 13},
      {"newton-girard", std::nullopt, 7},
      {"dual-determinant", std::nullopt, 30},
  };
  return defs;
}

const SuiteDef* find_suite(std::string_view name) {
  for (const auto& d : suites()) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

std::vector<std::int64_t> range_2_to(std::int64_t m) {
  std::vector<std::int64_t> v;
  for (std::int64_t n = 2; n <= m; ++n) v.push_back(n);
  return v;
}

std::string describe(const std::vector<std::int64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void multisets(std::int64_t n, std::size_t l, std::vector<std::int64_t>& cur,
               std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() == l) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = cur.empty() ? 0 : cur.back(); v < n; ++v) {
    cur.push_back(v);
    multisets(n, l, cur, out);
    cur.pop_back();
  }
}

} // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto& d : suites()) v.push_back(d.name);
    return v;
  }();
  return names;
}

std::vector<std::int64_t> suite_default_n(std::string_view name) {
  const SuiteDef* def = find_suite(name);
  if (!def) return {};
  if (name == "newton-girard") return {5, 7};
  return range_2_to(def->default_n_max);
}

std::optional<SuiteReport> run_suite(std::string_view name, const SuiteOptions& opt) {
  const SuiteDef* def = find_suite(name);
  if (!def) return std::nullopt;

  std::vector<std::int64_t> ns;
  if (opt.n_values) ns = *opt.n_values;
  else if (opt.n_max) ns = range_2_to(*opt.n_max);
  else ns = suite_default_n(name);

  if (name == "newton-girard") {
    for (std::int64_t n : ns) {
      if (n < 1) throw std::invalid_argument("n must be >= 1");
    }
    return newton_girard_suite(ns);
  }
  if (name == "dual-determinant") {
    ScanSpec probe;
    probe.n_values = ns;
    validate(probe, opt.force);
    return dual_determinant_suite(ns, opt.samples, opt.seed);
  }

  ScanSpec spec;
  spec.n_values = ns;
  spec.mode = *def->mode;
  spec.jobs = opt.jobs;
  validate(spec, opt.force);

  SuiteReport rep;
  rep.name = std::string(name);
  const SweepSummary sum = run_sweep(spec, nullptr);
  for (std::int64_t n : ns) {
    if (spec.mode == Mode::VerifyTheoremA || spec.mode == Mode::VerifyCorollaryB ||
        spec.mode == Mode::VerifyLemma) {
      if (gcd_i64(n, 6) != 1) continue;
    }
    rep.n_values.push_back(n);
  }
  rep.checked = sum.tuples;
  rep.violations = sum.violations;
  for (const auto& p : sum.violating) rep.violating.push_back("P(" + p.key() + ")");
  rep.notes.push_back("perfect: " + std::to_string(sum.perfect));
  return rep;
}

SuiteReport newton_girard_suite(const std::vector<std::int64_t>& ns, std::size_t l) {
  SuiteReport rep;
  rep.name = "newton-girard";
  rep.n_values = ns;
  for (std::int64_t n : ns) {
    std::vector<std::vector<std::int64_t>> all;
    std::vector<std::int64_t> cur;
    multisets(n, l, cur, all);
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = a; b < all.size(); ++b) {
        const NewtonGirardResult res = newton_girard_check(n, all[a], all[b]);
        ++rep.checked;
        if (res.power_sums_equal != res.multisets_equal) {
          ++rep.violations;
          rep.violating.push_back("n=" + std::to_string(n) + " " + describe(all[a]) + " vs " +
                                  describe(all[b]));
        }
      }
    }
  }
  return rep;
}

SuiteReport dual_determinant_suite(const std::vector<std::int64_t>& ns, std::size_t samples,
                                   std::uint64_t seed) {
  SuiteReport rep;
  rep.name = "dual-determinant";
  rep.n_values = ns;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
  for (std::int64_t n : ns) {
    for (std::size_t t = 0; t < samples; ++t) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(n));
      for (auto& x : c) x = coeff(rng);
      const Integer lhs = abs(det(circulant_of(c)));
      const IntPoly f = rep_poly(c);
      Integer rhs = f.degree() < 0 ? 0 : 1;
      if (f.degree() >= 0) {
        for (std::int64_t d : divisors(n)) rhs *= abs(resultant(f, cyclotomic(d)));
      }
      ++rep.checked;
      if (lhs != rhs) {
        ++rep.violations;
        rep.violating.push_back("n=" + std::to_string(n) + " c=" + describe(c) + " det=" +
                                to_decimal(lhs) + " norm=" + to_decimal(rhs));
      }
    }
  }
  return rep;
}

void print_report(std::ostream& os, const SuiteReport& rep) {
  os << "suite: " << rep.name << '\n';
  os << "n: " << describe(rep.n_values) << '\n';
  os << "checked: " << rep.checked << '\n';
  for (const auto& note : rep.notes) os << note << '\n';
  os << "violations: " << rep.violations << '\n';
  for (const auto& v : rep.violating) os << "violation: " << v << '\n';
  os << "result: " << (rep.passed() ? "PASS" : "FAIL") << '\n';
}

} // namespace cycpres::cli
