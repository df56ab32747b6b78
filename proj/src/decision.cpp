#include "invh11/decision.hpp"

#include <cmath>

namespace invh11 {

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Exact:
      return "exact";
    case Backend::Float:
      return "float";
    case Backend::Both:
      return "both";
  }
  return "both";
}

Backend parse_backend(const std::string& name) {
  if (name == "exact") return Backend::Exact;
  if (name == "float") return Backend::Float;
  if (name == "both") return Backend::Both;
  throw std::invalid_argument("backend must be exact, float or both (got '" + name + "')");
}

std::string b_minus_source_name(BMinusSource s) {
  switch (s) {
    case BMinusSource::Default:
      return "default";
    case BMinusSource::CeComputed:
      return "ce_computed";
    case BMinusSource::PaperReference:
      return "paper_reference";
    case BMinusSource::Override:
      return "override";
  }
  return "default";
}

BMinusPolicy BMinusPolicy::parse(const std::string& text) {
  if (text == "ce") return {BMinusSource::CeComputed, 0};
  if (text == "paper") return {BMinusSource::PaperReference, 0};
  if (text == "default" || text.empty()) return {};
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 0) {
    throw std::invalid_argument("b-minus must be a non-negative integer, 'ce' or 'paper' (got '" + text + "')");
  }
  return {BMinusSource::Override, value};
}

std::string BMinusPolicy::describe() const {
  if (source == BMinusSource::Override) return std::to_string(value);
  if (source == BMinusSource::CeComputed) return "ce";
  if (source == BMinusSource::PaperReference) return "paper";
  return "default";
}

std::string feasibility_name(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible:
      return "feasible";
    case Feasibility::Infeasible:
      return "infeasible";
    case Feasibility::Unknown:
      return "unknown";
  }
  return "unknown";
}

BackendDisagreement::BackendDisagreement(DecisionReport report)
    : std::runtime_error("exact and floating backends disagree (exact delta=" +
                         std::to_string(report.exact ? report.exact->delta : -1) +
                         ", float delta=" + std::to_string(report.floating ? report.floating->delta : -1) + ")"),
      report_(std::move(report)) {}

namespace {

const BasisWord kTop(15);

Matrix<Rational> d_matrix(const LieStructure& lie, int k) {
  auto cols = words_of_degree(k);
  auto rows = words_of_degree(k + 1);
  Matrix<Rational> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Form<Rational> image = d_invariant(lie, Form<Rational>::basis(FrameTag::Real, cols[c]));
    for (std::size_t r = 0; r < rows.size(); ++r) m(static_cast<int>(r), static_cast<int>(c)) = image.coeff(rows[r]);
  }
  return m;
}

Form<Rational> two_form(const std::vector<Rational>& coefficients) {
  auto words = words_of_degree(2);
  Form<Rational> f(FrameTag::Real, 2);
  for (std::size_t i = 0; i < words.size(); ++i) f.add_term(words[i], coefficients[i]);
  return f;
}

Rational top_coefficient(const Form<Rational>& a, const Form<Rational>& b) { return wedge(a, b).coeff(kTop); }

Matrix<Rational> gram_of(const std::vector<Form<Rational>>& forms) {
  int n = static_cast<int>(forms.size());
  Matrix<Rational> g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = top_coefficient(forms[static_cast<std::size_t>(i)], forms[static_cast<std::size_t>(j)]);
  return g;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> t(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

void verify_exact(const LieStructure& lie, const AlmostComplexCoframe& coframe, const MetricParams& m,
                  ExactVerdict& v) {
  if (!v.witness) return;
  AlmostComplexStructure<Surd> acs(lie, coframe);
  const auto& w = *v.witness;
  Form<Surd> gamma = asd_11_form<Surd>(m, w[0], w[1], w[2]);
  Form<Surd> omega = fundamental_form<Surd>(m);
  Form<Surd> dc = scalar_traits<Surd>::imag_unit() * d_c(acs, gamma) - acs.d(omega);
  v.dc_residual_zero = dc.is_zero();
  v.star_residual_zero = (hodge_star(gamma, m) + gamma).is_zero();
}

void verify_float(const LieStructure& lie, const AlmostComplexCoframe& coframe, const MetricParams& m,
                  FloatVerdict& v) {
  if (!v.witness) return;
  AlmostComplexStructure<Complex> acs(lie, coframe);
  const auto& w = *v.witness;
  Form<Complex> gamma = asd_11_form<Complex>(m, w[0], w[1], w[2]);
  Form<Complex> omega = fundamental_form<Complex>(m);
  v.dc_residual = (Complex(0, 1) * d_c(acs, gamma) - acs.d(omega)).max_abs();
  v.star_residual = (hodge_star(gamma, m) + gamma).max_abs();
}

}  // namespace

int complex_orientation(const AlmostComplexCoframe& coframe) {
  AlmostComplexStructure<GaussRational> acs(LieStructure(), coframe);
  Form<GaussRational> omega(FrameTag::Complex, 2);
  omega.add_term(parse_word("phi^{1 1b}", FrameTag::Complex), GaussRational(0, 1));
  omega.add_term(parse_word("phi^{2 2b}", FrameTag::Complex), GaussRational(0, 1));
  Form<GaussRational> real = acs.to_real(omega);
  GaussRational top = wedge(real, real).coeff(kTop);
  return sgn(top.re) > 0 ? 1 : -1;
}

CohomologyReport ce_cohomology(const LieStructure& lie) {
  CohomologyReport rep;
  std::array<int, 5> ranks{};
  for (int k = 0; k < 4; ++k) ranks[static_cast<std::size_t>(k)] = rank(d_matrix(lie, k));
  for (int k = 0; k <= 4; ++k) {
    int dim = static_cast<int>(words_of_degree(k).size());
    int out = k < 4 ? ranks[static_cast<std::size_t>(k)] : 0;
    int in = k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
    rep.betti[static_cast<std::size_t>(k)] = dim - out - in;
  }

  // Representatives: closed forms extending a basis of the exact ones.
  Matrix<Rational> d1 = d_matrix(lie, 1);
  Matrix<Rational> span(0, 6);
  for (int c = 0; c < d1.cols(); ++c) {
    auto col = d1.col(c);
    Matrix<Rational> trial = span;
    trial.append_row(col);
    if (rank(trial) > rank(span)) span = trial;
  }
  for (const auto& z : nullspace(d_matrix(lie, 2))) {
    Matrix<Rational> trial = span;
    trial.append_row(z);
    if (rank(trial) > rank(span)) {
      span = trial;
      rep.h2_basis.push_back(two_form(z));
    }
  }

  rep.unimodular = rep.betti[4] == 1;
  rep.intersection_matrix = gram_of(rep.h2_basis);
  if (rep.unimodular && !rep.h2_basis.empty()) {
    Inertia in = inertia(rep.intersection_matrix);
    rep.b_plus = in.positive;
    rep.b_minus = in.negative;
  }
  return rep;
}

ExactVerdict solve_exact(const HarmonicSystem<GaussRational>& sys, const MetricParams& m) {
  ExactVerdict v;
  v.ranks.rank_matrix = rank(sys.matrix);
  v.ranks.rank_augmented = rank(augment(sys.matrix, sys.rhs));
  if (v.ranks.rank_matrix == v.ranks.rank_augmented) {
    auto x = min_norm_solution(sys.matrix, sys.rhs);
    if (!x) throw std::logic_error("consistent system without a solution");
    v.delta = 1;
    v.scaled_witness = std::array<GaussRational, 3>{(*x)[0], (*x)[1], (*x)[2]};
    Surd tau = Surd::root(m.tau2());
    v.witness = std::array<Surd, 3>{Surd((*x)[0]), Surd((*x)[1]) / tau, Surd((*x)[2]) / tau};
  } else {
    v.delta = 0;
    for (auto& y : nullspace(transpose(sys.matrix))) {
      GaussRational pairing;
      for (std::size_t i = 0; i < y.size(); ++i) pairing += y[i] * sys.rhs[i];
      if (!pairing.is_zero()) {
        v.certificate = y;
        break;
      }
    }
  }
  return v;
}

FloatVerdict solve_floating(const HarmonicSystem<Complex>& sys, const MetricParams& m, double tolerance) {
  FloatVerdict v;
  FloatSolve s = solve_float(sys.matrix, sys.rhs, tolerance);
  v.ranks.rank_matrix = s.rank_matrix;
  v.ranks.rank_augmented = s.rank_augmented;
  v.singular_values = s.singular_values;
  v.least_squares_residual = s.residual;
  v.delta = s.consistent ? 1 : 0;
  if (s.consistent) {
    double tau = std::sqrt(m.tau2().get_d());
    v.scaled_witness = std::array<Complex, 3>{s.solution[0], s.solution[1], s.solution[2]};
    v.witness = std::array<Complex, 3>{s.solution[0], s.solution[1] / tau, s.solution[2] / tau};
  }
  return v;
}

DecisionReport decide_h11(const LieStructure& lie, const AlmostComplexCoframe& coframe, const MetricParams& m,
                          const DecisionOptions& options, const CatalogEntry* entry) {
  if (!(options.tolerance > 0) || !std::isfinite(options.tolerance)) {
    throw std::invalid_argument("tolerance must be a positive number");
  }
  if (!validate_d_squared(lie).ok) throw std::invalid_argument("structure constants violate d^2 = 0");

  DecisionReport rep;
  rep.backend = options.backend;
  rep.tolerance = options.tolerance;

  CohomologyReport coh = ce_cohomology(lie);
  if (coh.unimodular) {
    // b^- is taken for the orientation of J, which may be opposite to e^{1234}.
    rep.b_minus_ce = complex_orientation(coframe) > 0 ? coh.b_minus : coh.b_plus;
  }
  if (entry) rep.b_minus_reference = entry->reference_b_minus;
  rep.b_minus_discrepancy = rep.b_minus_ce && rep.b_minus_reference && *rep.b_minus_ce != *rep.b_minus_reference;
  if (rep.b_minus_discrepancy) {
    rep.notes.push_back("b^- differs: reference value " + std::to_string(*rep.b_minus_reference) +
                        ", invariant cohomology " + std::to_string(*rep.b_minus_ce));
  }

  BMinusSource source = options.b_minus.source;
  if (source == BMinusSource::Default) {
    source = entry && !entry->nilpotent ? BMinusSource::PaperReference : BMinusSource::CeComputed;
  }
  switch (source) {
    case BMinusSource::PaperReference:
      if (!rep.b_minus_reference) throw std::invalid_argument("b-minus 'paper' needs a catalog entry");
      rep.b_minus_used = *rep.b_minus_reference;
      break;
    case BMinusSource::CeComputed:
      if (!rep.b_minus_ce) {
        throw std::invalid_argument("b-minus 'ce' is undefined: the algebra is not unimodular (b^4 = 0)");
      }
      rep.b_minus_used = *rep.b_minus_ce;
      if (!entry || !entry->nilpotent) {
        rep.notes.push_back("b^- from invariant cohomology; equals the de Rham value only when invariant "
                            "cohomology computes it (e.g. nilpotent or completely solvable algebras)");
      }
      break;
    case BMinusSource::Override:
      rep.b_minus_used = options.b_minus.value;
      break;
    case BMinusSource::Default:
      break;
  }
  rep.b_minus_source = source;

  AlmostComplexStructure<GaussRational> acs(lie, coframe);
  rep.system = assemble_system(acs, m);

  if (options.backend != Backend::Float) {
    ExactVerdict v = solve_exact(rep.system, m);
    verify_exact(lie, coframe, m, v);
    if (v.witness && !(v.dc_residual_zero && v.star_residual_zero)) {
      throw std::logic_error("exact witness failed re-verification");
    }
    rep.exact = std::move(v);
  }
  if (options.backend != Backend::Exact) {
    AlmostComplexStructure<Complex> facs(lie, coframe);
    FloatVerdict v = solve_floating(assemble_system(facs, m), m, options.tolerance);
    verify_float(lie, coframe, m, v);
    if (v.witness && std::max(v.dc_residual, v.star_residual) > options.tolerance) {
      rep.notes.push_back("floating witness residual exceeds the tolerance");
    }
    rep.floating = std::move(v);
  }

  rep.delta = rep.exact ? rep.exact->delta : rep.floating->delta;
  rep.h11 = rep.b_minus_used + rep.delta;
  if (rep.exact && rep.floating && rep.exact->delta != rep.floating->delta) throw BackendDisagreement(rep);
  return rep;
}

AlmostKahlerVerdict almost_kahler_feasible(const LieStructure& lie, const AlmostComplexCoframe& coframe) {
  AlmostKahlerVerdict v;
  AlmostComplexStructure<GaussRational> acs(lie, coframe);
  const GaussRational i(0, 1);
  auto word = [](const char* s) { return parse_word(s, FrameTag::Complex); };
  // omega = x1 (i phi^{1 1b}) + x2 (i phi^{2 2b}) + x3 (phi^{1 2b} - phi^{2 1b}) + x4 (i phi^{1 2b} + i phi^{2 1b})
  std::array<Form<GaussRational>, 4> pieces = {Form<GaussRational>(FrameTag::Complex, 2), Form<GaussRational>(FrameTag::Complex, 2),
                                               Form<GaussRational>(FrameTag::Complex, 2), Form<GaussRational>(FrameTag::Complex, 2)};
  pieces[0].add_term(word("phi^{1 1b}"), i);
  pieces[1].add_term(word("phi^{2 2b}"), i);
  pieces[2].add_term(word("phi^{1 2b}"), 1);
  pieces[2].add_term(word("phi^{2 1b}"), -1);
  pieces[3].add_term(word("phi^{1 2b}"), i);
  pieces[3].add_term(word("phi^{2 1b}"), i);
  std::array<Form<GaussRational>, 4> images = {delbar(acs, pieces[0]), delbar(acs, pieces[1]), delbar(acs, pieces[2]),
                                               delbar(acs, pieces[3])};

  v.constraints = Matrix<Rational>(0, 4);
  for (BasisWord w : words_of_bidegree(1, 2)) {
    std::vector<Rational> re, im;
    for (const auto& f : images) {
      re.push_back(f.coeff(w).re);
      im.push_back(f.coeff(w).im);
    }
    v.constraints.append_row(re);
    v.constraints.append_row(im);
  }
  v.kernel = nullspace(v.constraints);
  const int k = static_cast<int>(v.kernel.size());
  if (k == 0) {
    v.verdict = Feasibility::Infeasible;
    v.certificate = "delbar omega = 0 forces r^2 = s^2 = u = 0";
    return v;
  }

  // q(x) = x1 x2 - x3^2 - x4^2 restricted to the kernel
  Matrix<Rational> w(4, 4);
  w(0, 1) = w(1, 0) = Rational(1, 2);
  w(2, 2) = w(3, 3) = -1;
  Matrix<Rational> restricted(k, k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      Rational s = 0;
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) s += v.kernel[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)] * w(p, q) *
                                         v.kernel[static_cast<std::size_t>(b)][static_cast<std::size_t>(q)];
      restricted(a, b) = s;
    }
  }
  Inertia in = inertia(restricted);
  v.restricted_positive = in.positive;
  v.restricted_negative = in.negative;
  v.restricted_zero = in.zero;

  if (in.positive == 0) {
    v.verdict = Feasibility::Infeasible;
    bool r_forced = true, s_forced = true;
    for (const auto& b : v.kernel) {
      r_forced = r_forced && sgn(b[0]) == 0;
      s_forced = s_forced && sgn(b[1]) == 0;
    }
    v.certificate = "r^2 s^2 - |u|^2 <= 0 on every solution of delbar omega = 0 (solution space of dimension " +
                    std::to_string(k) + ", restricted form has inertia +0 -" + std::to_string(in.negative) + " 0x" +
                    std::to_string(in.zero) + ")";
    if (r_forced) v.certificate += "; the constraints force r^2 = 0";
    if (s_forced) v.certificate += "; the constraints force s^2 = 0";
    return v;
  }

  std::vector<Rational> coef = *in.positive_vector();
  std::array<Rational, 4> x{};
  for (int a = 0; a < k; ++a)
    for (int p = 0; p < 4; ++p) x[static_cast<std::size_t>(p)] += coef[static_cast<std::size_t>(a)] * v.kernel[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)];
  if (sgn(x[0]) < 0)
    for (auto& c : x) c = -c;
  MetricParams m = MetricParams::from_squares(x[0], x[1], GaussRational(x[2], x[3]));
  v.verdict = Feasibility::Feasible;
  v.witness_verified = acs.d(fundamental_form<GaussRational>(m)).is_zero();
  if (!v.witness_verified) throw std::logic_error("almost Kaehler witness is not closed");
  v.witness = m;
  return v;
}

SymplecticVerdict symplectic_feasible(const LieStructure& lie) {
  SymplecticVerdict v;
  for (const auto& z : nullspace(d_matrix(lie, 2))) v.closed_basis.push_back(two_form(z));
  v.gram = gram_of(v.closed_basis);
  const int n = v.gram.rows();
  for (int a = 0; a < n && !v.witness; ++a)
    if (sgn(v.gram(a, a)) != 0) v.witness = v.closed_basis[static_cast<std::size_t>(a)];
  for (int a = 0; a < n && !v.witness; ++a)
    for (int b = a + 1; b < n && !v.witness; ++b)
      if (sgn(v.gram(a, b)) != 0) v.witness = v.closed_basis[static_cast<std::size_t>(a)] + v.closed_basis[static_cast<std::size_t>(b)];
  if (!v.witness) {
    v.verdict = Feasibility::Infeasible;
    v.certificate = "sigma ^ sigma = 0 for every closed invariant 2-form (closed forms span dimension " +
                    std::to_string(n) + ")";
    return v;
  }
  v.witness_verified = d_invariant(lie, *v.witness).is_zero() && sgn(top_coefficient(*v.witness, *v.witness)) != 0;
  if (!v.witness_verified) throw std::logic_error("symplectic witness failed verification");
  v.verdict = Feasibility::Feasible;
  return v;
}

}  // namespace invh11
