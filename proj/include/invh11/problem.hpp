#pragma once

// Problem documents: a structure (catalog entry or custom structure constants
// plus coframe), an optional metric, an optional sweep grid and run options.
// All numbers are kept exact; "p/q" strings and decimal strings are accepted.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "invh11/decision.hpp"

namespace invh11 {

using json = nlohmann::ordered_json;

/// Parse or validation failure with the offending location ("line 3, column 7"
/// for syntax errors, a JSON pointer such as "/metric/r" for field errors).
class ProblemError : public std::runtime_error {
 public:
  ProblemError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct StructureConstant {
  int i = 1;
  int j = 1;
  int k = 2;
  Rational c;
  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

struct StructureSpec {
  /// Catalog key; empty for a custom structure.
  std::string catalog;
  CatalogParams params;
  std::string name;
  std::vector<StructureConstant> constants;
  AlmostComplexCoframe::Rows coframe{};
  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

/// Either (r, s) or (r^2, s^2), plus u.
struct MetricSpec {
  bool squares = false;
  Rational r;  // r^2 when squares
  Rational s;  // s^2 when squares
  GaussRational u;
  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;

  /// Throws ProblemError when the metric inequalities fail.
  MetricParams params() const;
};

struct SweepSpec {
  Rational r = 1;
  Rational s = 1;
  Rational u_re_lo = 0, u_re_hi = 0;
  Rational u_im_lo = 0, u_im_hi = 0;
  int steps_re = 1;
  int steps_im = 1;
  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct OptionsSpec {
  std::optional<std::string> b_minus;
  std::optional<std::string> backend;
  std::optional<double> tolerance;
  friend bool operator==(const OptionsSpec&, const OptionsSpec&) = default;
};

struct ProblemSpec {
  StructureSpec structure;
  std::optional<MetricSpec> metric;
  std::optional<SweepSpec> sweep;
  OptionsSpec options;
  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Options from a document, with `overrides` (e.g. command-line flags) winning.
DecisionOptions decision_options(const OptionsSpec& document, const OptionsSpec& overrides = {});

ProblemSpec parse_problem(const std::string& text);
ProblemSpec parse_problem_json(const json& doc);
json problem_to_json(const ProblemSpec& spec);

/// Validated structure ready for computation.
struct ResolvedStructure {
  std::string label;
  LieStructure lie;
  AlmostComplexCoframe coframe;
  std::optional<CatalogEntry> entry;

  const CatalogEntry* entry_ptr() const { return entry ? &*entry : nullptr; }
};

/// Throws ProblemError for unknown entries, bad parameters, d^2 != 0 or a
/// singular coframe.
ResolvedStructure resolve_structure(const StructureSpec& spec);

struct ValidationReport {
  bool structure_ok = true;
  std::string structure_message;
  bool d_squared_ok = true;
  std::vector<std::string> d_squared_failures;
  bool coframe_ok = true;
  std::string coframe_message;
  std::optional<bool> metric_ok;
  std::string metric_message;

  bool ok() const { return structure_ok && d_squared_ok && coframe_ok && metric_ok.value_or(true); }
};

ValidationReport validate_problem(const ProblemSpec& spec);

/// The u values of a sweep axis: lo + k (hi - lo) / (steps - 1).
std::vector<Rational> sweep_axis(const Rational& lo, const Rational& hi, int steps);

}  // namespace invh11
