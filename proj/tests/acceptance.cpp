// Acceptance suite: one PASS/FAIL line per criterion. The loci below are
// written out by hand, not taken from the catalog predicates.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "invh11/decision.hpp"
#include "support.hpp"
#include "unitary_oracle.hpp"

using namespace invh11;
using testing::I;
using testing::q;
using testing::RationalSource;

namespace {

struct Outcome {
  int checks = 0;
  int on_locus = 0;
  int off_locus = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool passed() const { return failures.empty(); }
  // an "iff" criterion must see both sides
  void expect_both_sides(const std::string& what) { expect(on_locus > 0 && off_locus > 0, what + " never left one side"); }
};

// delta = 1 cases collected by criteria 1-7 for the witness suite
struct Case {
  CatalogEntry entry;
  MetricParams metric;
};
std::vector<Case> delta_one_cases;

std::string describe(const MetricParams& m) {
  return "r^2=" + to_string(m.r2()) + " s^2=" + to_string(m.s2()) + " u=" + to_string(m.u());
}

DecisionOptions exact_only() {
  DecisionOptions o;
  o.backend = Backend::Exact;
  return o;
}

DecisionReport decide(const CatalogEntry& e, const MetricParams& m, DecisionOptions o = {}) {
  return decide_h11(e.lie, e.coframe, m, o, &e);
}

void record(Outcome& out, const CatalogEntry& e, const MetricParams& m, const DecisionReport& d, bool expected) {
  out.expect(d.delta == (expected ? 1 : 0), e.name + " delta at " + describe(m));
  ++(expected ? out.on_locus : out.off_locus);
  if (d.delta == 1) delta_one_cases.push_back({e, m});
}

// metric with given r^2 and u; s grows until the metric is valid
MetricParams metric_with(RationalSource& src, const Rational& r, const GaussRational& u) {
  Rational s = src.positive(4, 3);
  while (!metric_is_valid(r * r, s * s, u)) s += 1;
  return MetricParams::from_rs(r, s, u);
}

bool almost_kahler_at(const CatalogEntry& e, const MetricParams& m) {
  return testing::structure_of(e).d(fundamental_form<GaussRational>(m)).is_zero();
}

void check_ak_witness(Outcome& out, const CatalogEntry& e, const AlmostKahlerVerdict& v,
                      const std::function<bool(const MetricParams&)>& condition) {
  out.expect(v.verdict == Feasibility::Feasible, e.name + " almost Kaehler verdict");
  if (!v.witness) return out.expect(false, e.name + " almost Kaehler witness missing");
  out.expect(v.witness_verified, e.name + " witness flagged unverified");
  out.expect(metric_is_valid(v.witness->r2(), v.witness->s2(), v.witness->u()), e.name + " witness metric invalid");
  out.expect(almost_kahler_at(e, *v.witness), e.name + " witness d omega != 0");
  out.expect(condition(*v.witness), e.name + " witness outside the stated condition");
}

void check_symplectic_witness(Outcome& out, const CatalogEntry& e, const SymplecticVerdict& v) {
  out.expect(v.verdict == Feasibility::Feasible, e.name + " symplectic verdict");
  if (!v.witness) return out.expect(false, e.name + " symplectic witness missing");
  out.expect(v.witness_verified, e.name + " symplectic witness flagged unverified");
  out.expect(d_invariant(e.lie, *v.witness).is_zero(), e.name + " symplectic witness not closed");
  out.expect(!wedge(*v.witness, *v.witness).is_zero(), e.name + " symplectic witness degenerate");
}

Outcome secondary_kodaira_grid() {
  Outcome out;
  auto e = catalog("secondary_kodaira");
  RationalSource src(101);
  for (int k = 0; k < 10; ++k) {
    Rational r, s;
    do {
      r = src.positive(3, 2);
      s = src.positive(3, 2);
    } while (r * r * s * s <= Rational(1, 2));
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        GaussRational u(Rational(i - 10, 20), Rational(j - 10, 20));
        u.re.canonicalize();
        u.im.canonicalize();
        auto m = MetricParams::from_rs(r, s, u);
        auto d = decide(e, m, exact_only());
        bool expected = sgn(u.im) == 0;
        out.expect(d.delta == (expected ? 1 : 0), "delta at " + describe(m));
        ++(expected ? out.on_locus : out.off_locus);
        out.expect(d.b_minus_used == 0 && d.h11 == d.delta, "h11 at " + describe(m));
        // the grid is large; keep only a few for the witness suite
        if (d.delta == 1 && i % 5 == 0 && k < 3) delta_one_cases.push_back({e, m});
      }
    }
  }
  out.expect_both_sides("grid");
  out.expect(almost_kahler_feasible(e.lie, e.coframe).verdict == Feasibility::Infeasible, "almost Kaehler verdict");
  out.expect(symplectic_feasible(e.lie).verdict == Feasibility::Infeasible, "symplectic verdict");
  return out;
}

Outcome inoue() {
  Outcome out;
  RationalSource src(102);
  for (auto [alpha, beta] : std::vector<std::pair<long, long>>{{1, 1}, {2, -1}, {1, 0}}) {
    auto e = catalog("inoue_sm", {{"alpha", q(alpha)}, {"beta", q(beta)}});
    for (int k = 0; k < 50; ++k) {
      MetricParams m = src.metric();
      if (beta != 0 && k % 2 == 0) {
        Rational r = src.positive(3, 2);
        Rational im = -Rational(alpha) * r * r / Rational(beta);
        m = metric_with(src, r, GaussRational(src.rational(3, 3), im));
      }
      // beta Im u = -alpha r^2, which never holds for beta = 0 since alpha != 0
      bool expected = Rational(beta) * m.u().im == -Rational(alpha) * m.r2();
      auto d = decide(e, m);
      record(out, e, m, d, expected);
      if (beta == 0) out.expect(d.delta == 0, "beta = 0 must give delta 0");
    }
    out.expect(almost_kahler_feasible(e.lie, e.coframe).verdict == Feasibility::Infeasible,
               e.name + " almost Kaehler verdict");
  }
  out.expect_both_sides("Inoue sample");
  return out;
}

Outcome nilmanifold_one() {
  Outcome out;
  auto e = catalog("nilmanifold_I");
  RationalSource src(103);
  for (int k = 0; k < 100; ++k) {
    auto m = src.metric();
    auto d = decide(e, m);
    record(out, e, m, d, true);
    out.expect(d.h11 == 2 && d.b_minus_used == 1 && d.b_minus_source == BMinusSource::CeComputed,
               "h11 / b^- at " + describe(m));
    // u + conj(u) = 2 i r^2 has no solution with r > 0
    out.expect(!almost_kahler_at(e, m), "delbar omega vanished at " + describe(m));
  }
  auto c = ce_cohomology(e.lie);
  out.expect(c.betti[2] == 2 && c.b_minus == 1, "invariant cohomology b^2 / b^-");
  out.expect(almost_kahler_feasible(e.lie, e.coframe).verdict == Feasibility::Infeasible, "almost Kaehler verdict");
  check_symplectic_witness(out, e, symplectic_feasible(e.lie));
  return out;
}

Outcome nilmanifold_two() {
  Outcome out;
  auto e = catalog("nilmanifold_II");
  RationalSource src(104);
  for (int k = 0; k < 10; ++k) {
    auto m = src.metric_with_u(q(0));
    record(out, e, m, decide(e, m), true);
  }
  for (int k = 0; k < 50; ++k) {
    MetricParams m = src.metric();
    while (m.u().is_zero()) m = src.metric();
    // half of them on the real or imaginary axis
    if (k % 3 == 1) m = src.metric_with_u(GaussRational(Rational(k % 7 + 1, 5)));
    if (k % 3 == 2) m = src.metric_with_u(GaussRational(0, Rational(-(k % 5 + 1), 4)));
    record(out, e, m, decide(e, m), false);
  }
  out.expect_both_sides("nilmanifold II sample");
  auto ak = almost_kahler_feasible(e.lie, e.coframe);
  check_ak_witness(out, e, ak, [](const MetricParams& m) { return m.u().is_zero(); });
  return out;
}

// rows of the harmonic system proportional to (p | c), meaning p . (A, B', C') + c = 0
std::optional<std::pair<int, GaussRational>> find_row(const HarmonicSystem<GaussRational>& sys,
                                                       const std::vector<GaussRational>& expected) {
  for (int row = 0; row < sys.matrix.rows(); ++row) {
    std::vector<GaussRational> ours = sys.matrix.row(row);
    ours.push_back(-sys.rhs[static_cast<std::size_t>(row)]);
    std::optional<GaussRational> ratio;
    bool ok = true;
    for (std::size_t k = 0; k < ours.size() && ok; ++k) {
      if (expected[k].is_zero() != ours[k].is_zero()) ok = false;
      if (!ok || expected[k].is_zero()) continue;
      GaussRational r = ours[k] / expected[k];
      if (ratio && *ratio != r) ok = false;
      ratio = r;
    }
    if (ok && ratio) return std::make_pair(row, *ratio);
  }
  return std::nullopt;
}

Outcome hyperelliptic_one() {
  Outcome out;
  auto e = catalog("hyperelliptic_I");
  auto acs = testing::structure_of(e);
  RationalSource src(105);
  DecisionOptions ce;
  ce.b_minus = BMinusPolicy::parse("ce");
  for (int k = 0; k < 100; ++k) {
    auto m = src.metric();
    auto d = decide(e, m, ce);
    record(out, e, m, d, false);
    out.expect(d.h11 == 1 && d.b_minus_used == 1 && d.b_minus_source == BMinusSource::CeComputed,
               "h11 with invariant-cohomology b^- at " + describe(m));

    // the two equations whose sum leaves i s^2 r^2, with B' = B tau, C' = C tau
    const GaussRational& u = m.u();
    GaussRational a(Rational(2) * u.norm() - m.r2() * m.s2());
    GaussRational c = I * GaussRational(m.r2() * m.s2());
    std::vector<GaussRational> first = {-a, -I * u.conj(), I * u, c};
    std::vector<GaussRational> second = {a, I * u.conj(), -I * u, c};
    auto sys = assemble_system(acs, m);
    auto p = find_row(sys, first), q2 = find_row(sys, second);
    out.expect(p && q2 && p->first != q2->first, "inconsistent pair not found at " + describe(m));
    if (!p || !q2) continue;
    // undo the row scalings and add: every unknown cancels, 2 i s^2 r^2 remains
    std::vector<GaussRational> sum(4);
    for (auto [row, ratio] : {*p, *q2}) {
      auto coeffs = sys.matrix.row(row);
      coeffs.push_back(-sys.rhs[static_cast<std::size_t>(row)]);
      for (std::size_t k = 0; k < 4; ++k) sum[k] += coeffs[k] / ratio;
    }
    bool cancels = sum[0].is_zero() && sum[1].is_zero() && sum[2].is_zero();
    out.expect(cancels && sum[3] == GaussRational(2) * c && !sum[3].is_zero(), "pair sum at " + describe(m));
  }
  out.expect(almost_kahler_feasible(e.lie, e.coframe).verdict == Feasibility::Infeasible, "almost Kaehler verdict");
  out.expect(ce_cohomology(e.lie).b_minus == 1, "invariant b^-");
  return out;
}

Outcome hyperelliptic_two() {
  Outcome out;
  RationalSource src(106);
  for (GaussRational t : {q(3, 10), GaussRational(0, Rational(1, 2)), GaussRational(Rational(-1, 4), Rational(1, 4))}) {
    auto e = catalog("hyperelliptic_II", {{"t", t}});
    for (int k = 0; k < 50; ++k) {
      auto m = k % 5 == 0 ? src.metric_with_u(q(0)) : src.metric();
      record(out, e, m, decide(e, m), true);
      out.expect(almost_kahler_at(e, m) == m.u().is_zero(), e.name + " almost Kaehler iff u = 0 at " + describe(m));
    }
    check_ak_witness(out, e, almost_kahler_feasible(e.lie, e.coframe),
                     [](const MetricParams& m) { return m.u().is_zero(); });
  }
  return out;
}

Outcome primary_kodaira() {
  Outcome out;
  RationalSource src(107);
  for (long alpha : {1L, -2L}) {
    auto e = catalog("primary_kodaira_I", {{"alpha", q(alpha)}});
    auto condition = [alpha](const MetricParams& m) { return m.u().re == Rational(alpha) * m.r2(); };
    for (int k = 0; k < 40; ++k) {
      MetricParams m = src.metric();
      if (k % 2 == 0) {
        Rational r = src.positive(3, 2);
        m = metric_with(src, r, GaussRational(Rational(alpha) * r * r, src.rational(3, 3)));
      }
      auto d = decide(e, m);
      record(out, e, m, d, condition(m));
      out.expect(almost_kahler_at(e, m) == condition(m), e.name + " almost Kaehler condition at " + describe(m));
      out.expect(d.b_minus_reference == 1 && d.b_minus_ce == 2 && d.b_minus_discrepancy, e.name + " b^- provenance");
      DecisionOptions paper;
      paper.b_minus = BMinusPolicy::parse("paper");
      DecisionOptions ce;
      ce.b_minus = BMinusPolicy::parse("ce");
      out.expect(decide(e, m, paper).h11 == d.delta + 1 && decide(e, m, ce).h11 == d.delta + 2,
                 e.name + " h11 under both provenances");
    }
    check_ak_witness(out, e, almost_kahler_feasible(e.lie, e.coframe), condition);
  }
  for (long beta : {1L, 3L}) {
    auto e = catalog("primary_kodaira_II", {{"beta", q(beta)}});
    auto condition = [](const MetricParams& m) { return sgn(m.u().im) == 0; };
    for (int k = 0; k < 40; ++k) {
      MetricParams m = k % 2 == 0 ? src.metric_with_u(GaussRational(src.rational(3, 3))) : src.metric();
      auto d = decide(e, m);
      record(out, e, m, d, condition(m));
      out.expect(almost_kahler_at(e, m) == condition(m), e.name + " almost Kaehler condition at " + describe(m));
      out.expect(d.b_minus_reference == 1 && d.b_minus_ce == 2 && d.b_minus_discrepancy, e.name + " b^- provenance");
      DecisionOptions paper;
      paper.b_minus = BMinusPolicy::parse("paper");
      out.expect(decide(e, m, paper).h11 == d.delta + 1 && d.h11 == d.delta + 2, e.name + " h11 under both provenances");
    }
    check_ak_witness(out, e, almost_kahler_feasible(e.lie, e.coframe), condition);
  }
  out.expect_both_sides("primary Kodaira sample");
  return out;
}

Outcome witness_soundness() {
  Outcome out;
  out.expect(delta_one_cases.size() > 300, "too few delta = 1 cases collected");
  for (const auto& [e, m] : delta_one_cases) {
    auto d = decide(e, m);
    if (!d.exact || !d.exact->witness || !d.floating || !d.floating->witness) {
      out.expect(false, e.name + " witness missing at " + describe(m));
      continue;
    }
    const auto& w = *d.exact->witness;
    AlmostComplexStructure<Surd> acs(e.lie, e.coframe);
    auto gamma = asd_11_form<Surd>(m, w[0], w[1], w[2]);
    auto omega = fundamental_form<Surd>(m);
    out.expect((Surd(I) * d_c(acs, gamma) - acs.d(omega)).is_zero(), e.name + " exact i d^c gamma - d omega at " + describe(m));
    out.expect((hodge_star(gamma, m) + gamma).is_zero(), e.name + " exact *gamma + gamma at " + describe(m));

    const auto& wf = *d.floating->witness;
    AlmostComplexStructure<Complex> acf(e.lie, e.coframe);
    auto gf = asd_11_form<Complex>(m, wf[0], wf[1], wf[2]);
    auto of = fundamental_form<Complex>(m);
    double dc = (Complex(0, 1) * d_c(acf, gf) - acf.d(of)).max_abs();
    double star = (hodge_star(gf, m) + gf).max_abs();
    out.expect(dc <= 1e-9 && star <= 1e-9, e.name + " float residuals at " + describe(m));
  }
  return out;
}

Outcome operator_properties() {
  Outcome out;
  RationalSource src(109);
  for (const auto& e : testing::all_entries()) {
    auto acs = testing::structure_of(e);
    auto M = [&](const Form<GaussRational>& f) { return mu(acs, f); };
    auto D = [&](const Form<GaussRational>& f) { return del(acs, f); };
    auto Db = [&](const Form<GaussRational>& f) { return delbar(acs, f); };
    auto Mb = [&](const Form<GaussRational>& f) { return mubar(acs, f); };
    auto relations = [&](const Form<GaussRational>& f, const std::string& what) {
      out.expect(M(f) + D(f) + Db(f) + Mb(f) == acs.d(f), e.name + " d split on " + what);
      out.expect(M(M(f)).is_zero(), e.name + " mu mu on " + what);
      out.expect((M(D(f)) + D(M(f))).is_zero(), e.name + " mu del on " + what);
      out.expect((D(D(f)) + M(Db(f)) + Db(M(f))).is_zero(), e.name + " del del on " + what);
      out.expect((D(Db(f)) + Db(D(f)) + M(Mb(f)) + Mb(M(f))).is_zero(), e.name + " del delbar on " + what);
      out.expect((Db(Db(f)) + Mb(D(f)) + D(Mb(f))).is_zero(), e.name + " delbar delbar on " + what);
      out.expect((Mb(Db(f)) + Db(Mb(f))).is_zero(), e.name + " mubar delbar on " + what);
      out.expect(Mb(Mb(f)).is_zero(), e.name + " mubar mubar on " + what);
    };
    for (int k = 0; k <= 4; ++k) {
      for (BasisWord w : words_of_degree(k)) {
        auto real = Form<GaussRational>::basis(FrameTag::Real, w);
        out.expect(d_invariant(e.lie, d_invariant(e.lie, real)).is_zero(), e.name + " d^2 on " + w.label(FrameTag::Real));
        auto cx = Form<GaussRational>::basis(FrameTag::Complex, w);
        out.expect(acs.d(acs.d(cx)).is_zero(), e.name + " d^2 on " + w.label(FrameTag::Complex));
        relations(cx.degree() == 0 ? cx : project(cx, bidegree_of(w)), w.label(FrameTag::Complex));
      }
    }
    for (int k = 0; k < 50; ++k) {
      auto m = src.metric();
      auto omega = fundamental_form<GaussRational>(m);
      relations(omega, "omega at " + describe(m));
      for (BasisWord w : words_of_degree(2)) {
        auto f = Form<GaussRational>::basis(FrameTag::Complex, w);
        out.expect(hodge_star(hodge_star(f, m), m) == f, e.name + " ** on " + w.label(FrameTag::Complex));
      }
      out.expect(gauduchon_residual(acs, m).is_zero(), e.name + " Gauduchon at " + describe(m));
    }
  }
  return out;
}

Outcome star_cross_check() {
  Outcome out;
  RationalSource src(110);
  for (const auto& e : testing::all_entries()) {
    for (int k = 0; k < 50; ++k) {
      auto m = src.metric();
      for (BasisWord w : words_of_bidegree(1, 1)) {
        auto f = Form<GaussRational>::basis(FrameTag::Complex, w);
        out.expect(convert<Surd>(hodge_star(f, m)) == testing::unitary_star(convert<Surd>(f), m),
                   e.name + " star of " + w.label(FrameTag::Complex) + " at " + describe(m));
      }
    }
  }
  return out;
}

Outcome solution_formula() {
  Outcome out;
  auto e = catalog("secondary_kodaira");
  RationalSource src(111);
  for (int k = 0; k < 20; ++k) {
    auto m = src.metric_with_u(GaussRational(src.rational(3, 4)));
    auto d = decide(e, m, exact_only());
    if (!d.exact || !d.exact->witness) {
      out.expect(false, "no witness at " + describe(m));
      continue;
    }
    const auto& w = *d.exact->witness;
    const GaussRational u = m.u();
    const Rational r2 = m.r2();
    Surd tau = Surd::root(m.tau2());
    Surd a(-u / GaussRational(r2));
    Surd c = Surd(I * (GaussRational(r2 * r2) + u * u)) / (Surd(GaussRational(r2)) * tau);
    out.expect(w[0] == a, "A at " + describe(m));
    out.expect(w[1] == -w[2], "B = -C at " + describe(m));
    out.expect(w[2] == c, "C at " + describe(m) + ": got " + to_string(w[2]) + ", want " + to_string(c));
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"secondary Kodaira: delta = 1 iff Im u = 0 on 21x21 grids, no AK, no symplectic", secondary_kodaira_grid},
      {"Inoue S_M: delta = 1 iff beta Im u = -alpha r^2, no AK", inoue},
      {"nilmanifold I: delta = 1 always, b^2 = 2, b^- = 1, no AK, symplectic witness", nilmanifold_one},
      {"nilmanifold II: delta = 1 iff u = 0, AK witness u = 0", nilmanifold_two},
      {"hyperelliptic I: delta = 0, inconsistent row pair, no AK, h11 = 1", hyperelliptic_one},
      {"hyperelliptic II: delta = 1 for three t, AK iff u = 0", hyperelliptic_two},
      {"primary Kodaira I/II: loci, AK witnesses, b^- under both provenances", primary_kodaira},
      {"witnesses: exact residuals zero, float residuals <= 1e-9", witness_soundness},
      {"operator identities, ** = id, Gauduchon on all entries", operator_properties},
      {"closed-form star equals unitary-frame star on (1,1)-forms", star_cross_check},
      {"secondary Kodaira witness equals the closed-form solution", solution_formula},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[n].run();
    } catch (const std::exception& ex) {
      out.expect(false, std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %2zu  %s  (%d checks, %.2fs)\n", out.passed() ? "PASS" : "FAIL", n + 1, criteria[n].title,
                out.checks, secs);
    for (const auto& f : out.failures) std::printf("        %s\n", f.c_str());
    if (!out.passed()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
