#pragma once

// Left-invariant almost Hermitian metrics in the normal form
//   omega = i r^2 phi^{1 1b} + i s^2 phi^{2 2b} + u phi^{1 2b} - conj(u) phi^{2 1b}
// together with the Hodge star and anti-self-dual (1,1)-forms.

#include <array>
#include <optional>

#include "invh11/bidegree.hpp"

namespace invh11 {

template <class S>
using Matrix2 = std::array<std::array<S, 2>, 2>;

struct ASDCoefficients {
  Complex a;
  Complex b;
  Complex c;
};

/// (r, s, u) stored through r^2 and s^2 so that every exact computation
/// stays rational; r and s themselves are rational only for square inputs.
class MetricParams {
 public:
  /// Requires r > 0, s > 0 and r^2 s^2 > |u|^2.
  static MetricParams from_rs(const Rational& r, const Rational& s, const GaussRational& u);
  static MetricParams from_squares(const Rational& r2, const Rational& s2, const GaussRational& u);

  const Rational& r2() const { return r2_; }
  const Rational& s2() const { return s2_; }
  const GaussRational& u() const { return u_; }
  /// tau^2 = r^2 s^2 - |u|^2 > 0.
  Rational tau2() const { return r2_ * s2_ - u_.norm(); }

  std::optional<Rational> r() const;
  std::optional<Rational> s() const;

  /// Hermitian matrix g_{i jbar}.
  template <class S>
  Matrix2<S> g() const {
    using T = scalar_traits<S>;
    GaussRational i{0, 1};
    return {{{T::from(GaussRational(r2_)), T::from(-i * u_)}, {T::from(i * u_.conj()), T::from(GaussRational(s2_))}}};
  }

  friend bool operator==(const MetricParams& a, const MetricParams& b) {
    return a.r2_ == b.r2_ && a.s2_ == b.s2_ && a.u_ == b.u_;
  }

 private:
  MetricParams(Rational r2, Rational s2, GaussRational u);

  Rational r2_;
  Rational s2_;
  GaussRational u_;
};

/// Checks the metric inequalities without throwing.
bool metric_is_valid(const Rational& r2, const Rational& s2, const GaussRational& u);

template <class S>
Form<S> fundamental_form(const MetricParams& m) {
  using T = scalar_traits<S>;
  const S i = T::imag_unit();
  Form<S> w(FrameTag::Complex, 2);
  w.add_term(parse_word("phi^{1 1b}", FrameTag::Complex), i * T::from(GaussRational(m.r2())));
  w.add_term(parse_word("phi^{2 2b}", FrameTag::Complex), i * T::from(GaussRational(m.s2())));
  w.add_term(parse_word("phi^{1 2b}", FrameTag::Complex), T::from(m.u()));
  w.add_term(parse_word("phi^{2 1b}", FrameTag::Complex), -T::from(m.u().conj()));
  return w;
}

/// Volume form omega^2 / 2.
template <class S>
Form<S> volume_form(const MetricParams& m) {
  Form<S> w = fundamental_form<S>(m);
  Form<S> w2 = wedge(w, w);
  S half = scalar_traits<S>::from(GaussRational(Rational(1, 2)));
  return half * w2;
}

/// Rows psi^1, psi^2 in terms of phi^1, phi^2, with omega = i(psi^{1 1b} + psi^{2 2b}):
///   psi^1 = r phi^1 + i conj(u)/r phi^2,  psi^2 = tau/r phi^2.
template <class S>
Matrix2<S> unitary_coframe(const MetricParams& m) {
  using T = scalar_traits<S>;
  S r = T::sqrt(m.r2());
  S inv_r2 = T::from(GaussRational(1 / m.r2()));
  S i = T::imag_unit();
  return {{{r, i * T::from(m.u().conj()) * r * inv_r2}, {T::zero(), T::sqrt(m.tau2() / m.r2())}}};
}

/// Frame-change matrix (psi, psibar letters in phi, phibar letters).
template <class S>
Matrix4<S> unitary_frame_matrix(const MetricParams& m) {
  using T = scalar_traits<S>;
  Matrix2<S> u = unitary_coframe<S>(m);
  Matrix4<S> out;
  for (auto& row : out) row.fill(T::zero());
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out[a][b] = u[a][b];
      out[a + 2][b + 2] = T::conj(u[a][b]);
    }
  }
  return out;
}

/// Hodge star on a complex-frame form of pure bidegree (p,q), landing in
/// bidegree (2-q, 2-p), for the volume form omega^2/2:
///   *psi = (-1)^{pq} det(g) sum_{A,B} eps_{A Bbar} psi^{Abar B} phi^{(B^c)(Abar^c)}
/// where psi^{Abar B} raises indices with g^{ibar j} = (g_{i jbar})^{-1} and
/// eps_{A Bbar} is the sign of (A, Bbar, A^c, Bbar^c).
template <class S>
Form<S> hodge_star(const Form<S>& f, const MetricParams& m) {
  using T = scalar_traits<S>;
  if (f.frame() != FrameTag::Complex) throw std::invalid_argument("hodge_star expects a complex-frame form");
  Bidegree bd = require_pure(f);
  const int p = bd.p;
  const int q = bd.q;

  Matrix2<S> g = m.g<S>();
  S det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  Matrix2<S> h = {{{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}}};
  S prefactor = (p * q) % 2 ? S(-det) : det;

  // Lowered coefficient psi_{gamma lambdabar} for an arbitrary index sequence.
  auto lowered = [&](const std::vector<int>& holo, const std::vector<int>& anti) -> S {
    std::vector<int> seq = holo;
    for (int l : anti) seq.push_back(l + 2);
    int sign = sequence_sign(seq);
    if (sign == 0) return T::zero();
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    S c = f.coeff(BasisWord::from_letters(sorted));
    return sign < 0 ? S(-c) : c;
  };

  // All index tuples in {0,1}^len.
  auto tuples = [](int len) {
    std::vector<std::vector<int>> out;
    for (int code = 0; code < (1 << len); ++code) {
      std::vector<int> t;
      for (int k = 0; k < len; ++k) t.push_back((code >> k) & 1);
      out.push_back(t);
    }
    return out;
  };

  Form<S> out(FrameTag::Complex, 4 - p - q);
  for (BasisWord aw : words_of_bidegree(p, 0)) {
    std::vector<int> a_idx = aw.letters();
    for (BasisWord bw : words_of_bidegree(q, 0)) {
      std::vector<int> b_idx = bw.letters();

      S raised = T::zero();
      for (const auto& gamma : tuples(p)) {
        for (const auto& lambda : tuples(q)) {
          S c = lowered(gamma, lambda);
          if (T::is_zero(c)) continue;
          for (int k = 0; k < p; ++k) c *= h[a_idx[k]][gamma[k]];
          for (int k = 0; k < q; ++k) c *= h[lambda[k]][b_idx[k]];
          raised += c;
        }
      }
      if (T::is_zero(raised)) continue;

      std::vector<int> a_comp, b_comp;
      for (int l = 0; l < 2; ++l) {
        if (!aw.contains(l)) a_comp.push_back(l);
        if (!bw.contains(l)) b_comp.push_back(l);
      }
      std::vector<int> perm = a_idx;
      for (int l : b_idx) perm.push_back(l + 2);
      for (int l : a_comp) perm.push_back(l);
      for (int l : b_comp) perm.push_back(l + 2);
      int eps = sequence_sign(perm);

      std::vector<int> target = b_comp;
      for (int l : a_comp) target.push_back(l + 2);
      S term = prefactor * raised;
      out.add_term(BasisWord::from_letters(target), eps < 0 ? S(-term) : term);
    }
  }
  return out;
}

/// gamma(A, B', C') with B' = B tau and C' = C tau:
///   A r^2 phi^{1 1b} + (A(2|u|^2 - r^2 s^2) + i(B' conj(u) - C' u))/r^2 phi^{2 2b}
///   + (-i A u + B') phi^{1 2b} + (i A conj(u) + C') phi^{2 1b}.
/// Every coefficient is polynomial in (A, B', C') over Q(i) when the metric is rational.
template <class S>
Form<S> asd_11_form_scaled(const MetricParams& m, const S& a, const S& b_scaled, const S& c_scaled) {
  using T = scalar_traits<S>;
  const S i = T::imag_unit();
  const S r2 = T::from(GaussRational(m.r2()));
  const S s2 = T::from(GaussRational(m.s2()));
  const S u = T::from(m.u());
  const S ubar = T::from(m.u().conj());
  const S norm_u = T::from(GaussRational(m.u().norm()));
  const S two = T::from(GaussRational(2));
  Form<S> g(FrameTag::Complex, 2);
  g.add_term(parse_word("phi^{1 1b}", FrameTag::Complex), a * r2);
  g.add_term(parse_word("phi^{2 2b}", FrameTag::Complex),
             (a * (two * norm_u - r2 * s2) + i * (b_scaled * ubar - c_scaled * u)) / r2);
  g.add_term(parse_word("phi^{1 2b}", FrameTag::Complex), -i * a * u + b_scaled);
  g.add_term(parse_word("phi^{2 1b}", FrameTag::Complex), i * a * ubar + c_scaled);
  return g;
}

/// Anti-self-dual (1,1)-form with coefficients (A, B, C); needs sqrt(tau^2) in S.
template <class S>
Form<S> asd_11_form(const MetricParams& m, const S& a, const S& b, const S& c) {
  S tau = scalar_traits<S>::sqrt(m.tau2());
  return asd_11_form_scaled<S>(m, a, b * tau, c * tau);
}

/// del delbar omega; zero exactly when the metric is Gauduchon.
template <class S>
Form<S> gauduchon_residual(const AlmostComplexStructure<S>& acs, const MetricParams& m) {
  return del(acs, delbar(acs, fundamental_form<S>(m)));
}

}  // namespace invh11
