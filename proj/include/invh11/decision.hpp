#pragma once

// Decides whether the invariant harmonic (1,1) space has dimension b^- + 1 or
// b^-, by solving for an anti-self-dual gamma with i d^c gamma = d omega, and
// related feasibility checks: almost Kaehler metrics, symplectic forms, and
// Chevalley-Eilenberg cohomology.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invh11/catalog.hpp"
#include "invh11/hermitian.hpp"
#include "invh11/linalg.hpp"

namespace invh11 {

enum class Backend { Exact, Float, Both };
std::string backend_name(Backend b);
Backend parse_backend(const std::string& name);

/// Linear system M x = v in x = (A, B', C') with B' = B tau, C' = C tau.
/// The first two rows are del(omega - gamma) = 0 on phi^{1 2 1b}, phi^{1 2 2b};
/// the last two are delbar(omega + gamma) = 0 on phi^{1 1b 2b}, phi^{2 1b 2b}.
template <class S>
struct HarmonicSystem {
  Matrix<S> matrix;
  std::vector<S> rhs;
  std::vector<std::string> row_labels;
  std::vector<BasisWord> row_words;
};

inline const std::array<const char*, 3>& unknown_names() {
  static const std::array<const char*, 3> names = {"A", "B'", "C'"};
  return names;
}

template <class S>
HarmonicSystem<S> assemble_system(const AlmostComplexStructure<S>& acs, const MetricParams& m) {
  using T = scalar_traits<S>;
  const Form<S> omega = fundamental_form<S>(m);
  const std::array<Form<S>, 3> columns = {asd_11_form_scaled<S>(m, T::one(), T::zero(), T::zero()),
                                          asd_11_form_scaled<S>(m, T::zero(), T::one(), T::zero()),
                                          asd_11_form_scaled<S>(m, T::zero(), T::zero(), T::one())};
  HarmonicSystem<S> sys;
  sys.matrix = Matrix<S>(0, 3);

  const Form<S> del_omega = del(acs, omega);
  std::array<Form<S>, 3> del_cols = {del(acs, columns[0]), del(acs, columns[1]), del(acs, columns[2])};
  for (BasisWord w : words_of_bidegree(2, 1)) {
    sys.matrix.append_row({del_cols[0].coeff(w), del_cols[1].coeff(w), del_cols[2].coeff(w)});
    sys.rhs.push_back(del_omega.coeff(w));
    sys.row_labels.push_back("del(omega - gamma) on " + w.label(FrameTag::Complex));
    sys.row_words.push_back(w);
  }
  const Form<S> delbar_omega = delbar(acs, omega);
  std::array<Form<S>, 3> delbar_cols = {delbar(acs, columns[0]), delbar(acs, columns[1]), delbar(acs, columns[2])};
  for (BasisWord w : words_of_bidegree(1, 2)) {
    sys.matrix.append_row({delbar_cols[0].coeff(w), delbar_cols[1].coeff(w), delbar_cols[2].coeff(w)});
    sys.rhs.push_back(-delbar_omega.coeff(w));
    sys.row_labels.push_back("delbar(omega + gamma) on " + w.label(FrameTag::Complex));
    sys.row_words.push_back(w);
  }
  return sys;
}

/// Sign of omega^2 against e^{1234}: the orientation induced by J.
int complex_orientation(const AlmostComplexCoframe& coframe);

struct CohomologyReport {
  std::array<int, 5> betti{};
  /// Closed real 2-forms whose classes form a basis of H^2.
  std::vector<Form<Rational>> h2_basis;
  /// Coefficient of e^{1234} in a_i ^ a_j; meaningful only when b^4 = 1.
  Matrix<Rational> intersection_matrix;
  bool unimodular = true;
  int b_plus = 0;
  int b_minus = 0;
};

CohomologyReport ce_cohomology(const LieStructure& lie);

enum class BMinusSource { Default, CeComputed, PaperReference, Override };
std::string b_minus_source_name(BMinusSource s);

struct BMinusPolicy {
  BMinusSource source = BMinusSource::Default;
  int value = 0;  // used by Override

  /// "ce", "paper", "default" or a non-negative integer.
  static BMinusPolicy parse(const std::string& text);
  std::string describe() const;
};

struct DecisionOptions {
  Backend backend = Backend::Both;
  double tolerance = 1e-9;
  BMinusPolicy b_minus;
};

struct RankData {
  int rank_matrix = 0;
  int rank_augmented = 0;
};

struct ExactVerdict {
  int delta = 0;
  RankData ranks;
  /// (A, B', C'), minimum norm.
  std::optional<std::array<GaussRational, 3>> scaled_witness;
  /// (A, B, C) after dividing B', C' by tau.
  std::optional<std::array<Surd, 3>> witness;
  /// y with y^T M = 0 and y^T v != 0 when no witness exists.
  std::optional<std::vector<GaussRational>> certificate;
  /// Witness checks by direct evaluation: i d^c gamma - d omega and *gamma + gamma.
  bool dc_residual_zero = false;
  bool star_residual_zero = false;
};

struct FloatVerdict {
  int delta = 0;
  RankData ranks;
  std::vector<double> singular_values;
  double least_squares_residual = 0.0;
  std::optional<std::array<Complex, 3>> scaled_witness;
  std::optional<std::array<Complex, 3>> witness;
  double dc_residual = 0.0;
  double star_residual = 0.0;
};

struct DecisionReport {
  int delta = 0;
  int h11 = 0;
  Backend backend = Backend::Both;
  double tolerance = 1e-9;

  int b_minus_used = 0;
  BMinusSource b_minus_source = BMinusSource::CeComputed;
  std::optional<int> b_minus_ce;
  std::optional<int> b_minus_reference;
  bool b_minus_discrepancy = false;
  std::vector<std::string> notes;

  HarmonicSystem<GaussRational> system;
  std::optional<ExactVerdict> exact;
  std::optional<FloatVerdict> floating;
};

/// Raised when the exact and floating backends reach different verdicts.
class BackendDisagreement : public std::runtime_error {
 public:
  explicit BackendDisagreement(DecisionReport report);
  const DecisionReport& report() const { return report_; }

 private:
  DecisionReport report_;
};

/// `entry` supplies the reference b^- and the default policy; pass nullptr
/// for custom structures.
DecisionReport decide_h11(const LieStructure& lie, const AlmostComplexCoframe& coframe, const MetricParams& m,
                          const DecisionOptions& options = {}, const CatalogEntry* entry = nullptr);

/// Exact solve of the harmonic system alone (no b^-, no verification).
ExactVerdict solve_exact(const HarmonicSystem<GaussRational>& sys, const MetricParams& m);
FloatVerdict solve_floating(const HarmonicSystem<Complex>& sys, const MetricParams& m, double tolerance);

enum class Feasibility { Feasible, Infeasible, Unknown };
std::string feasibility_name(Feasibility f);

struct AlmostKahlerVerdict {
  Feasibility verdict = Feasibility::Unknown;
  /// delbar omega = 0 as real equations in x = (r^2, s^2, Re u, Im u).
  Matrix<Rational> constraints;
  std::vector<std::vector<Rational>> kernel;
  /// Inertia of x1 x2 - x3^2 - x4^2 restricted to the kernel.
  int restricted_positive = 0;
  int restricted_negative = 0;
  int restricted_zero = 0;
  std::optional<MetricParams> witness;
  bool witness_verified = false;
  std::string certificate;
};

AlmostKahlerVerdict almost_kahler_feasible(const LieStructure& lie, const AlmostComplexCoframe& coframe);

struct SymplecticVerdict {
  Feasibility verdict = Feasibility::Unknown;
  std::vector<Form<Rational>> closed_basis;
  /// Coefficient of e^{1234} in z_i ^ z_j.
  Matrix<Rational> gram;
  std::optional<Form<Rational>> witness;
  bool witness_verified = false;
  std::string certificate;
};

SymplecticVerdict symplectic_feasible(const LieStructure& lie);

}  // namespace invh11
