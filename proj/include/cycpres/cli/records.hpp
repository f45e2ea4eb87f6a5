#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycpres/classify.hpp"
#include "cycpres/cyclic_words.hpp"
#include "cycpres/prishchepov.hpp"

namespace cycpres::cli {

using Json = nlohmann::ordered_json;

struct ResultRecord {
  PrishParams params;
  Integer det;
  std::optional<std::vector<Integer>> invariant_factors;  // omitted by fast sweeps
  bool perfect = false;
  TypeFlags flags;
  Verdict classifier = Verdict::Inapplicable;
  std::optional<UnitSymmetry> witness;
};

struct RecordOptions {
  bool invariant_factors = true;
  bool witness = false;
};

/// Invariant factors of the relation matrix given its determinant, skipping
/// the SNF when the determinant is a unit.
std::vector<Integer> invariant_factors_for(const PrishParams& p, const Integer& det);

/// Unit-symmetry witness for F attached to p: p itself when s = r-1 and q = 1,
/// otherwise its normalized tuple when reduce() applies.
std::optional<UnitSymmetry> record_witness(const PrishParams& p);

/// Fills flags, classifier (Corollary B) and the optional parts around a known det.
ResultRecord make_record(const PrishParams& p, Integer det,
                         std::optional<std::vector<Integer>> factors, const RecordOptions& opt);

ResultRecord make_record(const PrishParams& p, const RecordOptions& opt);

std::string obvious_field(const TypeFlags& f);

Json to_json(const ResultRecord& r);
Json to_json(const Reduction& red);
Json to_json(const CyclicWord& w, const AbelianReport& rep);

const std::string& csv_header();
std::string to_csv(const ResultRecord& r);

/// Multi-line human-readable rendering.
std::string to_text(const ResultRecord& r);

} // namespace cycpres::cli
