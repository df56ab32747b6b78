#pragma once

// Structured (JSON) and human-readable renderings of every result, and the
// parameter sweep over u.

#include <string>
#include <vector>

#include "invh11/problem.hpp"

namespace invh11 {

inline constexpr const char* kVersion = "0.1.0";

json validation_to_json(const ValidationReport& v);
json decision_to_json(const DecisionReport& d);
json cohomology_to_json(const CohomologyReport& c);
json almost_kahler_to_json(const AlmostKahlerVerdict& v);
json symplectic_to_json(const SymplecticVerdict& v);
/// d phi^1, d phi^2 and 4i del, 4i delbar of the (1,1) basis.
json operator_tables_to_json(const ResolvedStructure& s);
json catalog_listing_to_json();
json catalog_entry_to_json(const CatalogEntry& e);

std::string format_validation(const ValidationReport& v);
std::string format_decision(const DecisionReport& d);
std::string format_cohomology(const CohomologyReport& c);
std::string format_almost_kahler(const AlmostKahlerVerdict& v);
std::string format_symplectic(const SymplecticVerdict& v);
std::string format_operator_tables(const ResolvedStructure& s);
std::string format_catalog_listing();
std::string format_catalog_entry(const CatalogEntry& e);

struct SweepCell {
  bool valid = false;
  int delta = 0;
};

struct SweepResult {
  std::vector<Rational> u_re;
  std::vector<Rational> u_im;
  /// cells[row][col]: row follows u_im, column follows u_re.
  std::vector<std::vector<SweepCell>> cells;
};

/// Evaluates every grid cell on `threads` workers (0 = hardware concurrency).
/// Throws BackendDisagreement for the first disagreeing cell in grid order.
SweepResult run_sweep(const ResolvedStructure& s, const SweepSpec& grid, const DecisionOptions& options,
                      unsigned threads = 0);
std::string sweep_csv(const SweepResult& r);

}  // namespace invh11
