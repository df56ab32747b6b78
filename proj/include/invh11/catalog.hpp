#pragma once

// The eight left-invariant almost Hermitian examples on compact quotients of
// four-dimensional solvable Lie groups, with their documented classification.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "invh11/bidegree.hpp"
#include "invh11/hermitian.hpp"
#include "invh11/lie.hpp"

namespace invh11 {

/// Parameter values by name ("alpha", "beta", "t"); real parameters use im = 0.
using CatalogParams = std::map<std::string, GaussRational>;

struct CatalogEntry {
  std::string name;
  std::string description;
  CatalogParams params;
  LieStructure lie;
  AlmostComplexCoframe coframe;
  /// Betti numbers as recalled in the literature for the compact quotient.
  int reference_b2 = 0;
  int reference_b_minus = 0;
  /// Nilpotent algebras: invariant cohomology equals de Rham cohomology.
  bool nilpotent = false;
  std::string parameter_domain;
  /// Documented locus of metrics with h^{1,1} = b^- + 1.
  std::string expected_condition;
  std::function<bool(const MetricParams&)> expected_delta;
  /// Documented locus of almost Kaehler metrics (as printed in the source).
  std::string expected_ak_condition;
  std::function<bool(const MetricParams&)> expected_ak;
};

struct CatalogInfo {
  std::string name;
  std::vector<std::string> parameters;
  std::string parameter_domain;
};

/// The eight stable catalog keys, in presentation order.
const std::vector<CatalogInfo>& catalog_names();

/// Builds an entry; throws std::invalid_argument for unknown names, missing
/// parameters or parameters outside their domain.
CatalogEntry catalog(const std::string& name, const CatalogParams& params = {});

}  // namespace invh11
