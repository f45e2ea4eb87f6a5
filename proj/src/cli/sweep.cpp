#include "cycpres/cli/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <random>
#include <stdexcept>
#include <thread>

#include "cycpres/circulant_mod.hpp"
#include "cycpres/errors.hpp"

namespace cycpres::cli {

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 10> kModes{{
    {Mode::Classify, "classify"},
    {Mode::VerifyTheoremA, "verify-theorem-a"},
    {Mode::VerifyCorollaryB, "verify-corollary-b"},
    {Mode::VerifyTheoremC, "verify-theorem-c"},
    {Mode::VerifyLemma, "verify-lemma"},
    {Mode::VerifyOdoni, "verify-odoni"},
    {Mode::VerifyResultantSymmetry, "verify-resultant-symmetry"},
    {Mode::VerifyReduction, "verify-reduction"},
    {Mode::VerifyFlip, "verify-flip"},
    {Mode::OpenCases, "open-cases"},
}};

constexpr std::size_t kWindow = 8192;

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

bool needs_gcd6(Mode m) {
  return m == Mode::VerifyTheoremA || m == Mode::VerifyCorollaryB || m == Mode::VerifyLemma;
}

IntRange or_default(const std::optional<IntRange>& r, std::int64_t n) {
  return r ? *r : IntRange{1, n};
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::int64_t> coefficient_vector(const IntPoly& f, std::int64_t n) {
  const IntPoly folded = fold_mod_xn_minus_1(f, static_cast<std::size_t>(n));
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  for (long i = 0; i <= folded.degree(); ++i) c[static_cast<std::size_t>(i)] = folded.coeff(i).get_si();
  return c;
}

Integer power(const Integer& base, std::int64_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

struct Worker {
  const ScanSpec& spec;
  const ResultCache* cache;
  std::uint64_t seed;

  struct Out {
    Evaluation eval;
    bool fresh = false;
    bool hit = false;
    bool spot_checked = false;
    bool mismatch = false;
  };

  Out operator()(const PrishParams& p, std::size_t index) const {
    Out out;
    const bool want_factors = spec.mode == Mode::Classify;
    const std::string key = p.key();
    const CacheEntry* cached = cache ? cache->find(key) : nullptr;

    Integer det;
    std::optional<std::vector<Integer>> factors;
    if (cached) {
      out.hit = true;
      det = cached->det;
      factors = cached->invariant_factors;
      if (splitmix(seed ^ index) % 100 == 0) {
        out.spot_checked = true;
        const Integer fresh_det = relation_determinant(p);
        bool same = fresh_det == det;
        if (same && factors) same = invariant_factors_for(p, fresh_det) == *factors;
        if (!same) {
          out.mismatch = true;
          out.fresh = true;
          det = fresh_det;
          factors.reset();
        }
      }
    } else {
      out.fresh = true;
      det = relation_determinant(p);
    }
    if (want_factors && !factors) {
      factors = invariant_factors_for(p, det);
      out.fresh = true;
    }

    RecordOptions opt;
    opt.invariant_factors = want_factors;
    opt.witness = spec.witness || spec.mode == Mode::VerifyLemma || spec.mode == Mode::VerifyOdoni;
    out.eval.record = make_record(p, det, want_factors ? factors : std::nullopt, opt);
    out.eval.violation = violates(out.eval.record);
    return out;
  }

  bool violates(ResultRecord& rec) const {
    const PrishParams& p = rec.params;
    switch (spec.mode) {
    case Mode::Classify:
    case Mode::OpenCases:
      return false;
    case Mode::VerifyTheoremA:
      return !theorem_a_instance(p);
    case Mode::VerifyCorollaryB: {
      const Verdict v = rec.classifier;
      return v != Verdict::Inapplicable && (v == Verdict::Perfect) != rec.perfect;
    }
    case Mode::VerifyTheoremC: {
      rec.classifier = theorem_c_classify(p).verdict;
      const Verdict v = rec.classifier;
      return v != Verdict::Inapplicable && (v == Verdict::Perfect) != rec.perfect;
    }
    case Mode::VerifyLemma:
      return !main_lemma_instance(p.n, p.r, p.k);
    case Mode::VerifyOdoni:
      return is_unit_at(poly_F(p.r, p.k), p.n) && !rec.witness;
    case Mode::VerifyResultantSymmetry: {
      const Integer g = circulant_det(coefficient_vector(poly_G(p.r, p.k), p.n));
      return abs(rec.det) != abs(g);
    }
    case Mode::VerifyReduction: {
      const Reduction red = reduce(p);
      return abs(rec.det) != power(abs(relation_determinant(red.reduced)), red.d);
    }
    case Mode::VerifyFlip:
      return abs(rec.det) != abs(relation_determinant(flip(p)));
    }
    return false;
  }
};

} // namespace

std::optional<Mode> parse_mode(std::string_view name) {
  for (const auto& [m, s] : kModes) {
    if (s == name) return m;
  }
  return std::nullopt;
}

std::string_view mode_name(Mode m) {
  for (const auto& [mm, s] : kModes) {
    if (mm == m) return s;
  }
  return "?";
}

const std::vector<std::string_view>& mode_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto& entry : kModes) v.push_back(entry.second);
    return v;
  }();
  return names;
}

std::vector<std::int64_t> parse_n_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const IntRange r = parse_range(item);
    for (std::int64_t v = r.lo; v <= r.hi; ++v) out.push_back(v);
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntRange parse_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::int64_t v = parse_int(text);
    return {v, v};
  }
  const IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw std::invalid_argument("empty range: '" + std::string(text) + "'");
  return r;
}

void validate(const ScanSpec& spec, bool force) {
  if (spec.n_values.empty()) throw std::invalid_argument("empty n set");
  for (std::int64_t n : spec.n_values) {
    if (n < 2) throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
    if (n > kDefaultMaxN && !force) {
      throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the default cap of " +
                                  std::to_string(kDefaultMaxN) + " (use --force)");
    }
  }
  for (const auto* r : {&spec.r, &spec.s, &spec.k, &spec.q}) {
    if (*r && ((*r)->lo > (*r)->hi || (*r)->lo < 1)) {
      throw std::invalid_argument("parameter ranges must be nonempty and start at >= 1");
    }
  }
  if (spec.jobs == 0) throw std::invalid_argument("--jobs must be >= 1");
}

std::vector<PrishParams> enumerate(const ScanSpec& spec) {
  std::vector<PrishParams> out;
  auto push = [&](std::int64_t r, std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t q) {
    out.push_back(PrishParams{r, n, k, s, q});
  };
  for (std::int64_t n : spec.n_values) {
    if (spec.filter == NFilter::Gcd6Coprime && gcd_i64(n, 6) != 1) continue;
    if (needs_gcd6(spec.mode) && gcd_i64(n, 6) != 1) continue;
    const IntRange R = or_default(spec.r, n), S = or_default(spec.s, n);
    const IntRange K = or_default(spec.k, n), Q = or_default(spec.q, n);

    switch (spec.mode) {
    case Mode::Classify:
    case Mode::VerifyTheoremA:
    case Mode::VerifyCorollaryB:
    case Mode::VerifyTheoremC:
    case Mode::VerifyFlip:
      for (std::int64_t r = R.lo; r <= R.hi; ++r)
        for (std::int64_t k = K.lo; k <= K.hi; ++k)
          for (std::int64_t s = S.lo; s <= S.hi; ++s) {
            if (spec.s_locked && s != r - 1) continue;
            if (spec.r_ge_s && r < s) continue;
            for (std::int64_t q = Q.lo; q <= Q.hi; ++q) push(r, n, k, s, q);
          }
      break;
    case Mode::VerifyLemma:
    case Mode::VerifyOdoni:
      for (std::int64_t r = std::max<std::int64_t>(R.lo, 2); r <= R.hi; ++r)
        for (std::int64_t k = K.lo; k <= K.hi; ++k) push(r, n, k, r - 1, 1);
      break;
    case Mode::VerifyResultantSymmetry:
      for (std::int64_t r = std::max<std::int64_t>(R.lo, 2); r <= R.hi; ++r)
        for (std::int64_t k = std::max<std::int64_t>(K.lo, 2); k <= K.hi; ++k) push(r, n, k, r - 1, 1);
      break;
    case Mode::VerifyReduction:
      for (std::int64_t r = std::max<std::int64_t>(R.lo, 2); r <= R.hi; ++r)
        for (std::int64_t k = K.lo; k <= K.hi; ++k)
          for (std::int64_t q = Q.lo; q <= Q.hi; ++q) {
            const std::int64_t d = gcd_i64(n, q);
            if (n / d < 2 || mod_floor(k - 1, d) != 0) continue;
            push(r, n, k, r - 1, q);
          }
      break;
    case Mode::OpenCases:
      for (std::int64_t r = std::max<std::int64_t>(R.lo, 2); r <= R.hi; ++r) {
        if (mod_floor(2 * r - 1, n) != 0) continue;
        for (std::int64_t k = K.lo; k <= K.hi; ++k) {
          if (k <= 2 || 2 * k > n + 1 || gcd_i64(k - 1 - r, n) != 1) continue;
          push(r, n, k, r - 1, 1);
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SweepSummary run_sweep(const ScanSpec& spec, const Sink& sink, ResultCache* cache,
                       std::ostream* warnings) {
  const std::vector<PrishParams> tuples = enumerate(spec);
  const Worker worker{spec, cache, std::random_device{}()};
  SweepSummary sum;
  std::vector<Worker::Out> slots;
  const unsigned jobs = std::max(1u, spec.jobs);

  for (std::size_t base = 0; base < tuples.size(); base += kWindow) {
    const std::size_t count = std::min(kWindow, tuples.size() - base);
    slots.assign(count, {});
    if (jobs == 1) {
      for (std::size_t i = 0; i < count; ++i) slots[i] = worker(tuples[base + i], base + i);
    } else {
      std::atomic<std::size_t> next{0};
      auto drain = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) slots[i] = worker(tuples[base + i], base + i);
      };
      std::vector<std::jthread> pool;
      for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(drain);
      drain();
    }

    for (std::size_t i = 0; i < count; ++i) {
      const Worker::Out& o = slots[i];
      const ResultRecord& rec = o.eval.record;
      ++sum.tuples;
      if (rec.perfect) ++sum.perfect;
      if (o.eval.violation) {
        ++sum.violations;
        sum.violating.push_back(rec.params);
      }
      if (o.hit) ++sum.cache_hits;
      if (o.spot_checked) ++sum.cache_spot_checks;
      if (o.mismatch) {
        ++sum.cache_mismatches;
        if (warnings) *warnings << "warning: cached record for " << rec.params.key() << " disagrees with recomputation\n";
      }
      if (cache && o.fresh) cache->append(rec.params.key(), CacheEntry{rec.det, rec.invariant_factors});
      if (sink) sink(o.eval);
    }
  }
  return sum;
}

} // namespace cycpres::cli
