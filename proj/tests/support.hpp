#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>

#include "invh11/catalog.hpp"
#include "invh11/hermitian.hpp"
#include "invh11/linalg.hpp"

namespace testing {

using invh11::BasisWord;
using invh11::Form;
using invh11::FrameTag;
using invh11::GaussRational;
using invh11::Rational;

inline const GaussRational I{0, 1};

inline GaussRational q(long num, long den = 1) { return GaussRational(Rational(num, den)); }

inline GaussRational z(Rational re, Rational im) {
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

/// Builds a form from (label, coefficient) pairs; the degree comes from the first label.
template <class S = GaussRational>
Form<S> form(FrameTag frame, int degree, std::initializer_list<std::pair<const char*, GaussRational>> terms) {
  Form<S> f(frame, degree);
  for (const auto& [label, c] : terms) f.add_term(invh11::parse_word(label, frame), invh11::scalar_traits<S>::from(c));
  return f;
}

inline Form<GaussRational> phi(int degree, std::initializer_list<std::pair<const char*, GaussRational>> terms) {
  return form(FrameTag::Complex, degree, terms);
}

inline Form<GaussRational> real(int degree, std::initializer_list<std::pair<const char*, GaussRational>> terms) {
  return form(FrameTag::Real, degree, terms);
}

/// Small random rationals num/den with num in [-range, range], den in [1, max_den].
class RationalSource {
 public:
  explicit RationalSource(unsigned seed) : rng_(seed) {}

  Rational rational(long range = 6, long max_den = 5) {
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, max_den);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }

  Rational positive(long range = 6, long max_den = 5) {
    std::uniform_int_distribution<long> num(1, range);
    std::uniform_int_distribution<long> den(1, max_den);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }

  GaussRational gauss(long range = 6, long max_den = 5) { return {rational(range, max_den), rational(range, max_den)}; }

  /// Valid metric with rational r, s (so the unitary frame is exact up to tau).
  invh11::MetricParams metric() {
    for (;;) {
      Rational r = positive(), s = positive();
      GaussRational u = gauss(3, 4);
      if (invh11::metric_is_valid(r * r, s * s, u)) return invh11::MetricParams::from_rs(r, s, u);
    }
  }

  /// Valid metric with prescribed u, drawing r, s until r^2 s^2 > |u|^2.
  invh11::MetricParams metric_with_u(const GaussRational& u) {
    for (;;) {
      Rational r = positive(), s = positive(8, 3);
      if (invh11::metric_is_valid(r * r, s * s, u)) return invh11::MetricParams::from_rs(r, s, u);
    }
  }

  Form<GaussRational> form_of_degree(FrameTag frame, int degree) {
    Form<GaussRational> f(frame, degree);
    std::bernoulli_distribution keep(0.7);
    for (BasisWord w : invh11::words_of_degree(degree))
      if (keep(rng_)) f.add_term(w, gauss(4, 3));
    return f;
  }

  Form<GaussRational> form_of_bidegree(int p, int qd) {
    Form<GaussRational> f(FrameTag::Complex, p + qd);
    for (BasisWord w : invh11::words_of_bidegree(p, qd)) f.add_term(w, gauss(4, 3));
    return f;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// All eight entries with admissible parameters.
inline std::vector<invh11::CatalogEntry> all_entries() {
  return {
      invh11::catalog("secondary_kodaira"),
      invh11::catalog("inoue_sm", {{"alpha", q(1)}, {"beta", q(1)}}),
      invh11::catalog("nilmanifold_I"),
      invh11::catalog("nilmanifold_II"),
      invh11::catalog("hyperelliptic_I"),
      invh11::catalog("hyperelliptic_II", {{"t", q(1, 2)}}),
      invh11::catalog("primary_kodaira_I", {{"alpha", q(1)}}),
      invh11::catalog("primary_kodaira_II", {{"beta", q(1)}}),
  };
}

template <class S = GaussRational>
invh11::AlmostComplexStructure<S> structure_of(const invh11::CatalogEntry& e) {
  return invh11::AlmostComplexStructure<S>(e.lie, e.coframe);
}

}  // namespace testing
