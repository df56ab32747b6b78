#include "invh11/hermitian.hpp"

namespace invh11 {

bool metric_is_valid(const Rational& r2, const Rational& s2, const GaussRational& u) {
  return sgn(r2) > 0 && sgn(s2) > 0 && r2 * s2 > u.norm();
}

MetricParams::MetricParams(Rational r2, Rational s2, GaussRational u)
    : r2_(std::move(r2)), s2_(std::move(s2)), u_(std::move(u)) {
  if (!metric_is_valid(r2_, s2_, u_)) {
    throw std::invalid_argument("invalid metric: need r > 0, s > 0 and r^2 s^2 > |u|^2 (r^2=" + to_string(r2_) +
                                ", s^2=" + to_string(s2_) + ", |u|^2=" + to_string(u_.norm()) + ")");
  }
}

MetricParams MetricParams::from_rs(const Rational& r, const Rational& s, const GaussRational& u) {
  if (sgn(r) <= 0 || sgn(s) <= 0) throw std::invalid_argument("invalid metric: r and s must be positive");
  return MetricParams(r * r, s * s, u);
}

MetricParams MetricParams::from_squares(const Rational& r2, const Rational& s2, const GaussRational& u) {
  return MetricParams(r2, s2, u);
}

std::optional<Rational> MetricParams::r() const {
  Rational root;
  if (rational_sqrt(r2_, &root)) return root;
  return std::nullopt;
}

std::optional<Rational> MetricParams::s() const {
  Rational root;
  if (rational_sqrt(s2_, &root)) return root;
  return std::nullopt;
}

}  // namespace invh11
