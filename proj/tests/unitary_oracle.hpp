#pragma once

// Independent Hodge star: move to the unitary coframe psi, then to the real
// coframe x^a = Re psi^a, y^a = Im psi^a in which omega = 2(x^1 y^1 + x^2 y^2),
// apply the flat star there and come back. Requires r^2 to be a rational square.

#include "invh11/hermitian.hpp"

namespace testing {

using invh11::Surd;

inline invh11::Matrix4<Surd> real_in_unitary() {
  const Surd h(invh11::GaussRational(invh11::Rational(1, 2)));
  const Surd ih(invh11::GaussRational(0, invh11::Rational(1, 2)));
  const Surd o{};
  // rows x1, y1, x2, y2 in psi1, psi2, psibar1, psibar2
  return {{{h, o, h, o}, {-ih, o, ih, o}, {o, h, o, h}, {o, -ih, o, ih}}};
}

inline Form<Surd> unitary_star(const Form<Surd>& f, const invh11::MetricParams& m) {
  using invh11::substitute;
  auto psi_in_phi = invh11::unitary_frame_matrix<Surd>(m);
  auto phi_in_psi = invh11::inverse4(psi_in_phi);
  auto xy_in_psi = real_in_unitary();
  auto psi_in_xy = invh11::inverse4(xy_in_psi);

  Form<Surd> in_psi = substitute(f, FrameTag::Unitary, phi_in_psi);
  Form<Surd> in_xy = substitute(in_psi, FrameTag::Real, psi_in_xy);

  // x1 y1 x2 y2 has squared length 1/2 per letter: *w^I = 2^{2-k} sign(I, I^c) w^{I^c}
  Form<Surd> starred(FrameTag::Real, 4 - f.degree());
  for (const auto& [w, c] : in_xy.terms()) {
    BasisWord rest = w.complement();
    int sign = invh11::sign_of_merge(w, rest);
    Rational scale = 1;
    for (int k = w.degree(); k < 2; ++k) scale *= 2;
    for (int k = 2; k < w.degree(); ++k) scale /= 2;
    Surd v = c * Surd(GaussRational(scale));
    starred.add_term(rest, sign < 0 ? -v : v);
  }
  Form<Surd> back_psi = substitute(starred, FrameTag::Unitary, xy_in_psi);
  return substitute(back_psi, FrameTag::Complex, psi_in_phi);
}

}  // namespace testing
