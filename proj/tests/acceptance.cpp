// Acceptance run: one PASS/FAIL line per criterion, diagnostics on indented "#" lines.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cycpres/classify.hpp"
#include "cycpres/cli/suites.hpp"
#include "cycpres/cli/sweep.hpp"
#include "cycpres/errors.hpp"

using namespace cycpres;
using namespace cycpres::cli;

namespace {

int failures = 0;

void verdict(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  C" << id << " " << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

void info(const std::string& line) { std::cout << "      # " << line << std::endl; }

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

SweepSummary sweep(Mode mode, std::vector<std::int64_t> ns, unsigned jobs, bool r_ge_s = false) {
  ScanSpec spec;
  spec.mode = mode;
  spec.n_values = std::move(ns);
  spec.jobs = jobs;
  spec.r_ge_s = r_ge_s;
  return run_sweep(spec, nullptr);
}

std::string list_some(const std::vector<PrishParams>& v, std::size_t limit = 6) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? " " : "") + ("P(" + v[i].key() + ")");
  if (v.size() > limit) s += " ...";
  return s;
}

std::string report_detail(const SuiteReport& rep) {
  return std::to_string(rep.checked) + " checked, " + std::to_string(rep.violations) + " violations";
}

bool meets_conditions(const PrishParams& p) {
  const TypeFlags f = type_flags(p);
  return f.type_Ztilde() || f.any_obvious();
}

// The listed conditions applied to p, to flip(p), and to the normalized q = 1
// tuple of either, whose congruences are read mod N = n / gcd(n, q).
bool explained_by_flip_or_reduction(const PrishParams& p) {
  for (const PrishParams& x : {p, flip(p)}) {
    if (meets_conditions(x)) return true;
    if (x.s != x.r - 1) continue;
    try {
      if (meets_conditions(reduce(x).reduced)) return true;
    } catch (const ReductionError&) {
    }
  }
  return false;
}

const std::vector<std::int64_t> kTheoremASet{5, 7, 11, 13, 25, 35};

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const SweepSummary small = sweep(Mode::VerifyTheoremA, {5, 7, 11, 13}, 1);
  const double small_time = seconds_since(t0);
  const SweepSummary large = sweep(Mode::VerifyTheoremA, {25, 35}, workers());

  std::vector<PrishParams> bad = small.violating;
  bad.insert(bad.end(), large.violating.begin(), large.violating.end());
  const std::uint64_t tuples = small.tuples + large.tuples;
  verdict(1, "theorem-a-sweep", bad.empty() && small_time < 600.0,
          std::to_string(tuples) + " tuples, " + std::to_string(small.perfect + large.perfect) +
              " perfect, " + std::to_string(bad.size()) + " violations (expected 0); n<=13 single-threaded " +
              fmt_seconds(small_time));
  if (bad.empty()) return;

  std::vector<std::uint64_t> per_n(kTheoremASet.size(), 0);
  std::uint64_t explained = 0;
  for (const auto& p : bad) {
    explained += explained_by_flip_or_reduction(p);
    for (std::size_t i = 0; i < kTheoremASet.size(); ++i) per_n[i] += kTheoremASet[i] == p.n;
  }
  std::string counts;
  for (std::size_t i = 0; i < kTheoremASet.size(); ++i) {
    counts += (i ? ", " : "") + ("n=" + std::to_string(kTheoremASet[i])) + ": " + std::to_string(per_n[i]);
  }
  info("violations by n: " + counts);
  info("examples: " + list_some(bad));
  info("violations whose flip or q = 1 reduction meets a listed condition: " + std::to_string(explained) + "/" +
       std::to_string(bad.size()));
  const SweepSummary ordered_small = sweep(Mode::VerifyTheoremA, {5, 7, 11, 13}, workers(), true);
  const SweepSummary ordered_large = sweep(Mode::VerifyTheoremA, {25, 35}, workers(), true);
  info("restricted to r >= s: " + std::to_string(ordered_small.tuples + ordered_large.tuples) + " tuples, " +
       std::to_string(ordered_small.violations + ordered_large.violations) + " violations");
}

void criterion_2() {
  const SweepSummary b = sweep(Mode::VerifyCorollaryB, kTheoremASet, workers());
  std::uint64_t applicable = 0;
  {
    ScanSpec spec;
    spec.mode = Mode::VerifyCorollaryB;
    spec.n_values = kTheoremASet;
    spec.jobs = workers();
    run_sweep(spec, [&](const Evaluation& e) { applicable += e.record.classifier != Verdict::Inapplicable; });
  }
  verdict(2, "corollary-b-agreement", b.violations == 0,
          std::to_string(applicable) + " tuples under the hypotheses, " + std::to_string(b.violations) +
              " disagreements (expected 0)");
  if (b.violations == 0) return;
  info("examples: " + list_some(b.violating));
  const SweepSummary c = sweep(Mode::VerifyTheoremC, kTheoremASet, workers());
  info("with the type Z~ hypothesis (theorem_c_classify): " + std::to_string(c.violations) + " disagreements");
}

void criterion_3_4() {
  SuiteOptions opt;
  opt.n_values = std::vector<std::int64_t>{5, 7, 11, 13};
  opt.jobs = workers();
  const SuiteReport lemma = *run_suite("lemma", opt);
  verdict(3, "main-lemma-sweep", lemma.passed(), report_detail(lemma));
  for (const auto& v : lemma.violating) info(v);
  const SuiteReport odoni = *run_suite("odoni", opt);
  verdict(4, "odoni-direction", odoni.passed(), report_detail(odoni));
  for (const auto& v : odoni.violating) info(v);
}

IntPoly folded(const IntPoly& f, std::int64_t n) { return fold_mod_xn_minus_1(f, static_cast<std::size_t>(n)); }

void criterion_5() {
  // Bareiss plus cyclotomic-norm route, independent of the modular kernel used by the sweeps.
  std::uint64_t checked = 0, bad = 0;
  std::string first;
  for (std::int64_t n = 2; n <= 20; ++n)
    for (std::int64_t r = 2; r <= n; ++r)
      for (std::int64_t k = 2; k <= n; ++k) {
        const Integer a = abs(circulant_resultant(folded(poly_F(r, k), n), n));
        const Integer b = abs(circulant_resultant(folded(poly_G(r, k), n), n));
        ++checked;
        if (a != b) {
          ++bad;
          if (first.empty()) first = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k);
        }
      }
  verdict(5, "resultant-symmetry", bad == 0,
          std::to_string(checked) + " (n,r,k) checked, " + std::to_string(bad) + " mismatches");
  if (bad) info("first mismatch: " + first);
}

void criterion_6() {
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 2; n <= 30; ++n) ns.push_back(n);
  const SuiteReport rep = dual_determinant_suite(ns, 500, 20240229);
  verdict(6, "dual-determinant-paths", rep.passed(), report_detail(rep));
  for (std::size_t i = 0; i < rep.violating.size() && i < 5; ++i) info(rep.violating[i]);
}

void criterion_7() {
  struct Check {
    std::string what;
    bool ok;
  };
  std::vector<Check> checks;
  const auto P = PrishParams::make;
  const auto absdet = [](const PrishParams& p) -> Integer { return abs(relation_determinant(p)); };

  const Reduction red = reduce(P(3, 5, 5, 2, 2));
  checks.push_back({"P(3,5,5,2,2) reduces to P(3,5,3,2,1) with (d,N,Q,Qhat,K) = (1,5,2,3,3)",
                    red.reduced == P(3, 5, 3, 2, 1) && red.d == 1 && red.N == 5 && red.Q == 2 &&
                        red.Qhat == 3 && red.K == 3});
  checks.push_back({"P(3,5,5,2,2) and P(3,5,3,2,1) perfect",
                    abelianization(P(3, 5, 5, 2, 2)).is_perfect && abelianization(P(3, 5, 3, 2, 1)).is_perfect});
  checks.push_back({"P(4,3,3,3,1) type Z and perfect",
                    type_flags(P(4, 3, 3, 3, 1)).type_Z && abelianization(P(4, 3, 3, 3, 1)).is_perfect});
  checks.push_back({"P(2,5,3,1,1) |det| = 11", absdet(P(2, 5, 3, 1, 1)) == 11});
  const Integer s23 = absdet(P(2, 3, 2, 1, 2));
  const Integer s24 = absdet(P(2, 4, 2, 1, 2));
  checks.push_back({"P(2,3,2,1,2) |det| = 3 (observed " + to_decimal(s23) + ")", s23 == 3});
  checks.push_back({"P(2,4,2,1,2) |det| = 2 (observed " + to_decimal(s24) + ")", s24 == 2});
  checks.push_back({"P(2,5,2,1,2) perfect", abelianization(P(2, 5, 2, 1, 2)).is_perfect});

  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.ok;
  verdict(7, "named-instances", passed == checks.size(),
          std::to_string(passed) + "/" + std::to_string(checks.size()) + " sub-checks hold");
  for (const auto& c : checks) info(std::string(c.ok ? "ok   " : "FAIL ") + c.what);
  if (passed != checks.size()) {
    std::ostringstream os;
    os << "S(2,3) invariant factors:";
    for (const auto& f : abelianization(P(2, 3, 2, 1, 2)).invariant_factors.invariant_factors) os << ' ' << f;
    os << " (Z/2 + Z/2, the abelianization of Q8); S(2,4) invariant factors:";
    for (const auto& f : abelianization(P(2, 4, 2, 1, 2)).invariant_factors.invariant_factors) os << ' ' << f;
    info(os.str());
  }
}

void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport rep = newton_girard_suite({5, 7}, 4);
  const double t = seconds_since(t0);
  verdict(8, "newton-girard-exhaustive", rep.passed() && t < 60.0,
          report_detail(rep) + " multiset pairs in " + fmt_seconds(t));
}

void criterion_9() {
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 2; n <= 30; ++n) ns.push_back(n);
  const SweepSummary s = sweep(Mode::VerifyReduction, ns, workers());
  verdict(9, "reduction-multiplicativity", s.violations == 0,
          std::to_string(s.tuples) + " tuples, " + std::to_string(s.violations) + " violations");
  if (s.violations) info("examples: " + list_some(s.violating));
}

void criterion_10() {
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 2; n <= 13; ++n) ns.push_back(n);
  const SweepSummary s = sweep(Mode::VerifyFlip, ns, workers());
  verdict(10, "flip-invariance", s.violations == 0,
          std::to_string(s.tuples) + " tuples, " + std::to_string(s.violations) + " violations");
  if (s.violations) info("examples: " + list_some(s.violating));
}

} // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria FAILED") << " ("
            << fmt_seconds(seconds_since(t0)) << ")" << std::endl;
  return failures == 0 ? 0 : 1;
}
