#include "cycpres/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "cycpres/cli/cache.hpp"
#include "cycpres/cli/records.hpp"
#include "cycpres/cli/suites.hpp"
#include "cycpres/cli/sweep.hpp"
#include "cycpres/errors.hpp"

namespace cycpres::cli {

namespace {

struct TupleArgs {
  std::int64_t r = 0, n = 0, k = 0, s = 0, q = 0;

  void attach(CLI::App* sub) {
    sub->add_option("R", r, "number of x_{iq} letters")->required();
    sub->add_option("N", n, "number of generators")->required();
    sub->add_option("K", k, "offset of the negative block, read mod N")->required();
    sub->add_option("S", s, "number of inverted letters")->required();
    sub->add_option("Q", q, "generator step")->required();
  }

  PrishParams params() const { return PrishParams::make(r, n, k, s, q); }
};

int cmd_classify(const TupleArgs& t, bool json, bool witness, std::ostream& out) {
  RecordOptions opt;
  opt.witness = witness;
  const ResultRecord rec = make_record(t.params(), opt);
  if (json) out << to_json(rec).dump() << '\n';
  else out << to_text(rec);
  return kExitOk;
}

int cmd_abelianize(const std::string& word, std::int64_t n, bool json, std::ostream& out) {
  const CyclicWord w = parse_word(word, n);
  const AbelianReport rep = abelianization(w);
  if (json) {
    out << to_json(w, rep).dump() << '\n';
    return kExitOk;
  }
  out << "word: " << w.to_string() << '\n' << "n: " << n << '\n';
  out << "det: " << to_decimal(rep.det) << '\n' << "invariant_factors:";
  for (const auto& f : rep.invariant_factors.invariant_factors) out << ' ' << to_decimal(f);
  out << '\n' << "perfect: " << (rep.is_perfect ? "true" : "false") << '\n';
  out << "finite_abelianization: " << (rep.is_finite_ab ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_reduce(const TupleArgs& t, std::ostream& out) {
  out << to_json(reduce(t.params())).dump() << '\n';
  return kExitOk;
}

struct ScanArgs {
  std::string mode = "classify";
  std::string n;
  std::string filter = "all";
  std::string r, s, k, q;
  bool s_locked = false;
  bool r_ge_s = false;
  unsigned jobs = 1;
  std::string format = "csv";
  std::string output;
  std::string cache;
  bool force = false;
  bool witness = false;
};

int cmd_scan(const ScanArgs& a, bool cache_requested, std::ostream& out, std::ostream& err) {
  ScanSpec spec;
  const auto mode = parse_mode(a.mode);
  if (!mode) throw std::invalid_argument("unknown mode: " + a.mode);
  spec.mode = *mode;
  spec.n_values = parse_n_list(a.n);
  spec.filter = a.filter == "gcd6_coprime" ? NFilter::Gcd6Coprime : NFilter::All;
  if (!a.r.empty()) spec.r = parse_range(a.r);
  if (!a.s.empty()) spec.s = parse_range(a.s);
  if (!a.k.empty()) spec.k = parse_range(a.k);
  if (!a.q.empty()) spec.q = parse_range(a.q);
  spec.s_locked = a.s_locked;
  spec.r_ge_s = a.r_ge_s;
  spec.jobs = a.jobs;
  spec.witness = a.witness;
  validate(spec, a.force);

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output, std::ios::out | std::ios::trunc);
    if (!file) throw IoError("cannot open output file for writing: " + a.output);
  }
  std::ostream& sink_stream = a.output.empty() ? out : file;

  std::unique_ptr<ResultCache> cache;
  if (cache_requested) {
    cache = std::make_unique<ResultCache>(a.cache.empty() ? ResultCache::default_path() : a.cache, err);
  }

  const bool csv = a.format == "csv";
  if (csv) sink_stream << csv_header() << '\n';
  const SweepSummary sum = run_sweep(
      spec,
      [&](const Evaluation& e) {
        if (csv) sink_stream << to_csv(e.record) << '\n';
        else sink_stream << to_json(e.record).dump() << '\n';
      },
      cache.get(), &err);

  if (csv) {
    sink_stream << "# tuples: " << sum.tuples << ", perfect: " << sum.perfect
                << ", violations: " << sum.violations << '\n';
  } else {
    Json footer;
    footer["summary"] = Json{{"mode", std::string(mode_name(spec.mode))},
                             {"tuples", sum.tuples},
                             {"perfect", sum.perfect},
                             {"violations", sum.violations}};
    sink_stream << footer.dump() << '\n';
  }
  sink_stream.flush();
  if (!sink_stream) throw IoError("write failed" + (a.output.empty() ? std::string() : ": " + a.output));
  if (cache) {
    err << "cache: " << cache->path() << ", hits " << sum.cache_hits << ", spot-checked "
        << sum.cache_spot_checks << ", mismatches " << sum.cache_mismatches << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::string n;
  std::int64_t n_max = 0;
  unsigned jobs = 1;
  std::size_t samples = 500;
  bool force = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  if (!a.n.empty()) opt.n_values = parse_n_list(a.n);
  if (a.n_max > 0) opt.n_max = a.n_max;
  opt.jobs = a.jobs;
  opt.samples = a.samples;
  opt.force = a.force;
  const auto rep = run_suite(a.suite, opt);
  if (!rep) {
    err << "error: unknown suite '" << a.suite << "'; known suites:";
    for (auto s : suite_names()) err << ' ' << s;
    err << '\n';
    return kExitUsage;
  }
  print_report(out, *rep);
  return rep->passed() ? kExitOk : kExitViolations;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of Prishchepov groups and cyclically presented groups"};
  app.name("cycpres");
  app.require_subcommand(1, 1);

  TupleArgs classify_args;
  bool classify_json = false, classify_witness = false;
  auto* classify = app.add_subcommand("classify", "Classify P(R,N,K,S,Q) by its abelianization");
  classify_args.attach(classify);
  classify->add_flag("--json", classify_json, "emit a JSON record");
  classify->add_flag("--witness", classify_witness, "search for a unit-symmetry witness");

  std::string word;
  std::int64_t word_n = 0;
  bool abel_json = false;
  auto* abelianize = app.add_subcommand("abelianize", "Abelianization of G_n(w) for a word w");
  abelianize->add_option("--word", word, "word such as \"x0 x1 X2\"")->required();
  abelianize->add_option("--n", word_n, "number of generators")->required();
  abelianize->add_flag("--json", abel_json, "emit JSON");

  TupleArgs reduce_args;
  bool reduce_json = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Normalize P(R,N,K,R-1,Q) to a free product of q = 1 groups");
  reduce_args.attach(reduce_cmd);
  reduce_cmd->add_flag("--json", reduce_json, "accepted for uniformity; output is always JSON");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Sweep parameter tuples and emit one record per tuple");
  scan->add_option("--mode", sa.mode, "sweep mode")->check(CLI::IsMember(mode_names()));
  scan->add_option("--n", sa.n, "n values: list and/or ranges, e.g. 5,7 or 2..13")->required();
  scan->add_option("--filter", sa.filter, "n filter")->check(CLI::IsMember({"gcd6_coprime", "all"}));
  scan->add_option("--r", sa.r, "r range A..B (default 1..n)");
  scan->add_option("--s", sa.s, "s range A..B (default 1..n)");
  scan->add_option("--k", sa.k, "k range A..B (default 1..n)");
  scan->add_option("--q", sa.q, "q range A..B (default 1..n)");
  scan->add_flag("--s-locked", sa.s_locked, "only s = r - 1");
  scan->add_flag("--r-ge-s", sa.r_ge_s, "only r >= s");
  scan->add_option("--jobs", sa.jobs, "worker threads");
  scan->add_option("--format", sa.format, "output format")->check(CLI::IsMember({"csv", "jsonl"}));
  scan->add_option("--output", sa.output, "output file (default stdout)");
  auto* cache_opt = scan->add_option("--cache", sa.cache, "JSON-lines cache (default $CYCPRES_CACHE or cycpres-cache.jsonl)")
                        ->expected(0, 1);
  scan->add_flag("--force", sa.force, "allow n above the default cap");
  scan->add_flag("--witness", sa.witness, "include unit-symmetry witnesses");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 on any violation");
  verify->add_option("SUITE", va.suite, "suite name")->required();
  verify->add_option("--n", va.n, "explicit n values");
  verify->add_option("--n-max", va.n_max, "use n = 2..M");
  verify->add_option("--jobs", va.jobs, "worker threads");
  verify->add_option("--samples", va.samples, "random polynomials per n (dual-determinant)");
  verify->add_flag("--force", va.force, "allow n above the default cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(classify_args, classify_json, classify_witness, out);
    if (*abelianize) return cmd_abelianize(word, word_n, abel_json, out);
    if (*reduce_cmd) return cmd_reduce(reduce_args, out);
    if (*scan) return cmd_scan(sa, cache_opt->count() > 0, out, err);
    if (*verify) return cmd_verify(va, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ReductionError& e) {
    err << "error: inapplicable: " << e.what() << '\n';
    return kExitInapplicable;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

} // namespace cycpres::cli
