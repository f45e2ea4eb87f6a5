#include "cycpres/cli/records.hpp"

#include <sstream>

#include "cycpres/errors.hpp"

namespace cycpres::cli {

namespace {

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_decimal(x));
  return a;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

} // namespace

std::vector<Integer> invariant_factors_for(const PrishParams& p, const Integer& det) {
  if (abs(det) == 1) return std::vector<Integer>(static_cast<std::size_t>(p.n), Integer(1));
  return smith_normal_form(circulant_of(exponent_vector(p))).invariant_factors;
}

std::optional<UnitSymmetry> record_witness(const PrishParams& p) {
  if (p.r < 2 || p.s != p.r - 1) return std::nullopt;
  if (p.q == 1) return unit_symmetry_search(p.n, p.r, p.k);
  try {
    const Reduction red = reduce(p);
    return unit_symmetry_search(red.reduced.n, red.reduced.r, red.reduced.k);
  } catch (const ReductionError&) {
    return std::nullopt;
  }
}

ResultRecord make_record(const PrishParams& p, Integer det,
                         std::optional<std::vector<Integer>> factors, const RecordOptions& opt) {
  ResultRecord rec;
  rec.params = p;
  rec.perfect = abs(det) == 1;
  rec.det = std::move(det);
  if (opt.invariant_factors) {
    rec.invariant_factors = factors ? std::move(factors) : invariant_factors_for(p, rec.det);
  }
  rec.flags = type_flags(p);
  rec.classifier = corollary_b_classify(p).verdict;
  if (opt.witness) rec.witness = record_witness(p);
  return rec;
}

ResultRecord make_record(const PrishParams& p, const RecordOptions& opt) {
  return make_record(p, relation_determinant(p), std::nullopt, opt);
}

std::string obvious_field(const TypeFlags& f) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '|';
    out += name;
  };
  add(f.obvious_k1, "k1");
  add(f.obvious_k1q, "k1q");
  add(f.obvious_r0, "r0");
  add(f.obvious_s0, "s0");
  return out;
}

Json to_json(const ResultRecord& r) {
  Json j;
  j["r"] = r.params.r;
  j["n"] = r.params.n;
  j["k"] = r.params.k;
  j["s"] = r.params.s;
  j["q"] = r.params.q;
  j["det"] = to_decimal(r.det);
  j["invariant_factors"] = r.invariant_factors ? integers(*r.invariant_factors) : Json(nullptr);
  j["perfect"] = r.perfect;
  j["type_Z"] = r.flags.type_Z;
  j["type_Zprime"] = r.flags.type_Zprime;
  j["obvious"] = Json{{"k1", r.flags.obvious_k1},
                      {"k1q", r.flags.obvious_k1q},
                      {"r0", r.flags.obvious_r0},
                      {"s0", r.flags.obvious_s0}};
  j["classifier"] = std::string(verdict_name(r.classifier));
  if (r.witness) {
    j["witness"] = Json{{"j", r.witness->j}, {"epsilon", r.witness->epsilon}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const Reduction& red) {
  Json j;
  j["d"] = red.d;
  j["N"] = red.N;
  j["Q"] = red.Q;
  j["Qhat"] = red.Qhat;
  j["Kprime"] = red.Kprime;
  j["K"] = red.K;
  j["copies"] = red.copies;
  j["reduced"] = Json{{"r", red.reduced.r},
                      {"n", red.reduced.n},
                      {"k", red.reduced.k},
                      {"s", red.reduced.s},
                      {"q", red.reduced.q}};
  return j;
}

Json to_json(const CyclicWord& w, const AbelianReport& rep) {
  Json j;
  j["word"] = w.to_string();
  j["n"] = w.rank();
  j["det"] = to_decimal(rep.det);
  j["invariant_factors"] = integers(rep.invariant_factors.invariant_factors);
  j["perfect"] = rep.is_perfect;
  j["finite_abelianization"] = rep.is_finite_ab;
  return j;
}

const std::string& csv_header() {
  static const std::string h =
      "r,n,k,s,q,det,perfect,type_Z,type_Zprime,obvious,classifier,witness_j,witness_eps";
  return h;
}

std::string to_csv(const ResultRecord& r) {
  std::ostringstream os;
  const auto& p = r.params;
  os << p.r << ',' << p.n << ',' << p.k << ',' << p.s << ',' << p.q << ','
     << to_decimal(r.det) << ',' << boolean(r.perfect) << ',' << boolean(r.flags.type_Z) << ','
     << boolean(r.flags.type_Zprime) << ',' << obvious_field(r.flags) << ','
     << verdict_name(r.classifier) << ',';
  if (r.witness) os << r.witness->j << ',' << r.witness->epsilon;
  else os << ',';
  return os.str();
}

std::string to_text(const ResultRecord& r) {
  std::ostringstream os;
  const auto& p = r.params;
  os << "P(" << p.key() << ")\n";
  os << "det: " << to_decimal(r.det) << '\n';
  if (r.invariant_factors) {
    os << "invariant_factors:";
    for (const auto& f : *r.invariant_factors) os << ' ' << to_decimal(f);
    os << '\n';
  }
  os << "perfect: " << boolean(r.perfect) << '\n';
  os << "type_Z: " << boolean(r.flags.type_Z) << '\n';
  os << "type_Zprime: " << boolean(r.flags.type_Zprime) << '\n';
  const std::string ob = obvious_field(r.flags);
  os << "obvious: " << (ob.empty() ? "none" : ob) << '\n';
  os << "classifier: " << verdict_name(r.classifier) << '\n';
  if (r.witness) os << "witness: j=" << r.witness->j << " eps=" << r.witness->epsilon << '\n';
  return os.str();
}

} // namespace cycpres::cli
