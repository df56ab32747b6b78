#pragma once

// Bidegree splitting with respect to a left-invariant almost complex
// structure, and the components mu, del, delbar, mubar of d.

#include <array>
#include <optional>
#include <vector>

#include "invh11/exterior.hpp"
#include "invh11/lie.hpp"

namespace invh11 {

struct Bidegree {
  int p = 0;
  int q = 0;

  Bidegree() = default;
  Bidegree(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p > 2 || q > 2) throw std::out_of_range("bidegree out of range");
  }
  friend bool operator==(Bidegree a, Bidegree b) { return a.p == b.p && a.q == b.q; }
};

/// phi^1, phi^2 written in e^1..e^4; together with their conjugates they must
/// form a coframe.
class AlmostComplexCoframe {
 public:
  using Rows = std::array<std::array<GaussRational, 4>, 2>;

  explicit AlmostComplexCoframe(Rows rows);

  const Rows& rows() const { return rows_; }
  /// Rows phi^1, phi^2, phibar^1, phibar^2 in terms of e^1..e^4.
  Matrix4<GaussRational> stacked() const;

  friend bool operator==(const AlmostComplexCoframe& a, const AlmostComplexCoframe& b) { return a.rows_ == b.rows_; }

 private:
  Rows rows_;
};

/// Bidegree of a complex-frame word.
inline Bidegree bidegree_of(BasisWord w) { return {w.holomorphic_degree(), w.antiholomorphic_degree()}; }

/// The bidegree of f if all its terms share one, nullopt for mixed forms.
/// The zero form has no bidegree of its own and reports nullopt.
template <class S>
std::optional<Bidegree> pure_bidegree(const Form<S>& f) {
  if (f.frame() == FrameTag::Real) throw std::invalid_argument("bidegree needs a complex-frame form");
  std::optional<Bidegree> b;
  for (const auto& [w, c] : f.terms()) {
    Bidegree wb = bidegree_of(w);
    if (b && !(*b == wb)) return std::nullopt;
    b = wb;
  }
  return b;
}

/// Lie structure plus almost complex coframe, with frame changes and d
/// precomputed for every complex-frame basis word.
template <class S>
class AlmostComplexStructure {
 public:
  using Traits = scalar_traits<S>;

  AlmostComplexStructure(LieStructure lie, AlmostComplexCoframe coframe)
      : lie_(std::move(lie)), coframe_(std::move(coframe)) {
    Matrix4<GaussRational> t = coframe_.stacked();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) complex_in_real_[i][j] = Traits::from(t[i][j]);
    real_in_complex_ = inverse4(complex_in_real_);
    for (unsigned m = 0; m < 16; ++m) {
      BasisWord w(static_cast<std::uint8_t>(m));
      Form<S> real = to_real(Form<S>::basis(FrameTag::Complex, w));
      d_word_.push_back(to_complex(d_invariant(lie_, real)));
    }
  }

  const LieStructure& lie() const { return lie_; }
  const AlmostComplexCoframe& coframe() const { return coframe_; }
  /// Rows phi^1, phi^2, phibar^1, phibar^2 in e^1..e^4.
  const Matrix4<S>& complex_in_real() const { return complex_in_real_; }

  Form<S> to_complex(const Form<S>& f) const {
    if (f.frame() != FrameTag::Real) throw std::invalid_argument("expected a real-frame form");
    return substitute(f, FrameTag::Complex, real_in_complex_);
  }
  Form<S> to_real(const Form<S>& f) const {
    if (f.frame() != FrameTag::Complex) throw std::invalid_argument("expected a complex-frame form");
    return substitute(f, FrameTag::Real, complex_in_real_);
  }

  /// Exterior derivative; complex-frame forms go through the real frame.
  Form<S> d(const Form<S>& f) const {
    if (f.frame() == FrameTag::Real) return d_invariant(lie_, f);
    if (f.frame() != FrameTag::Complex) throw std::invalid_argument("d expects a real or complex-frame form");
    Form<S> out(FrameTag::Complex, f.degree() + 1);
    if (out.trivially_vanishing()) return out;
    for (const auto& [w, c] : f.terms()) out += c * d_word_[w.mask()];
    return out;
  }

 private:
  LieStructure lie_;
  AlmostComplexCoframe coframe_;
  Matrix4<S> complex_in_real_;
  Matrix4<S> real_in_complex_;
  std::vector<Form<S>> d_word_;  // indexed by word mask
};

/// (p,q) component of a complex-frame form.
template <class S>
Form<S> project(const Form<S>& f, Bidegree b) {
  if (f.frame() == FrameTag::Real) throw std::invalid_argument("project needs a complex-frame form");
  if (b.p + b.q != f.degree()) throw std::invalid_argument("bidegree does not match form degree");
  Form<S> out(f.frame(), f.degree());
  for (const auto& [w, c] : f.terms())
    if (bidegree_of(w) == b) out.add_term(w, c);
  return out;
}

/// Component of d f of bidegree (p + dp, q + dq); zero when that type is empty.
template <class S>
Form<S> d_component(const AlmostComplexStructure<S>& acs, const Form<S>& f, Bidegree source, int dp, int dq) {
  Form<S> out(FrameTag::Complex, f.degree() + 1);
  int p = source.p + dp;
  int q = source.q + dq;
  if (p < 0 || q < 0 || p > 2 || q > 2) return out;
  Form<S> df = acs.d(f);
  for (const auto& [w, c] : df.terms())
    if (bidegree_of(w) == Bidegree(p, q)) out.add_term(w, c);
  return out;
}

template <class S>
Bidegree require_pure(const Form<S>& f) {
  auto b = pure_bidegree(f);
  if (b) return *b;
  if (f.is_zero()) {
    // Any splitting of the degree works for the zero form; pick the first valid one.
    for (int p = 0; p <= 2; ++p) {
      int q = f.degree() - p;
      if (q >= 0 && q <= 2) return {p, q};
    }
    throw std::invalid_argument("no bidegree of total degree " + std::to_string(f.degree()));
  }
  throw std::invalid_argument("operator expects a form of pure bidegree");
}

/// Component of d f shifted by (dp, dq); f must have pure bidegree unless it is zero.
template <class S>
Form<S> shifted_component(const AlmostComplexStructure<S>& acs, const Form<S>& f, int dp, int dq) {
  if (f.is_zero()) return Form<S>(FrameTag::Complex, f.degree() + 1);
  return d_component(acs, f, require_pure(f), dp, dq);
}

template <class S>
Form<S> mu(const AlmostComplexStructure<S>& acs, const Form<S>& f) {
  return shifted_component(acs, f, 2, -1);
}
template <class S>
Form<S> del(const AlmostComplexStructure<S>& acs, const Form<S>& f) {
  return shifted_component(acs, f, 1, 0);
}
template <class S>
Form<S> delbar(const AlmostComplexStructure<S>& acs, const Form<S>& f) {
  return shifted_component(acs, f, 0, 1);
}
template <class S>
Form<S> mubar(const AlmostComplexStructure<S>& acs, const Form<S>& f) {
  return shifted_component(acs, f, -1, 2);
}

/// d^c = i(mubar + delbar - del - mu), applied to each bidegree component.
template <class S>
Form<S> d_c(const AlmostComplexStructure<S>& acs, const Form<S>& f) {
  using T = scalar_traits<S>;
  Form<S> out(FrameTag::Complex, f.degree() + 1);
  if (out.trivially_vanishing()) return out;
  for (int p = 0; p <= 2; ++p) {
    int q = f.degree() - p;
    if (q < 0 || q > 2) continue;
    Form<S> part = project(f, Bidegree(p, q));
    if (part.is_zero()) continue;
    Bidegree b(p, q);
    out += d_component(acs, part, b, -1, 2);
    out += d_component(acs, part, b, 0, 1);
    out -= d_component(acs, part, b, 1, 0);
    out -= d_component(acs, part, b, 2, -1);
  }
  return T::imag_unit() * out;
}

}  // namespace invh11
