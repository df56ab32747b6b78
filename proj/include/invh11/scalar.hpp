#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace invh11 {

using Rational = mpq_class;
using Complex = std::complex<double>;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// True when q is the square of a rational; the root is written to *root.
bool rational_sqrt(const Rational& q, Rational* root);

/// Element re + i*im of Q(i).
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(Rational real) : re(std::move(real)) {}
  GaussRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussRational(long real) : re(real) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

std::string to_string(const GaussRational& z);

/// Element a + b*sqrt(d) of Q(i)(sqrt d), d > 0 rational.
///
/// Values built from different radicands only mix when one of them has b == 0.
/// A radicand that is a rational square is folded into a on construction.
class Surd {
 public:
  Surd() = default;
  Surd(GaussRational a) : a_(std::move(a)) {}
  Surd(long a) : a_(a) {}
  Surd(GaussRational a, GaussRational b, Rational d);

  /// sqrt(d) itself.
  static Surd root(const Rational& d) { return Surd(GaussRational{}, GaussRational{1}, d); }

  const GaussRational& rational_part() const { return a_; }
  const GaussRational& surd_part() const { return b_; }
  const Rational& radicand() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  Surd conj() const { return Surd(a_.conj(), b_.conj(), d_); }
  Complex to_complex() const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }
  friend Surd operator-(const Surd& a) { return Surd(-a.a_, -a.b_, a.d_); }
  friend bool operator==(const Surd& x, const Surd& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

 private:
  const Rational& common_radicand(const Surd& o) const;

  GaussRational a_;
  GaussRational b_;
  Rational d_{0};
};

std::string to_string(const Surd& z);
std::string to_string(const Complex& z);

/// Uniform access to the scalar backends: Rational, GaussRational, Surd, Complex.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static Rational from(const GaussRational& z) {
    if (sgn(z.im) != 0) throw std::domain_error("complex value in a real computation");
    return z.re;
  }
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational conj(const Rational& x) { return x; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
  static Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
};

template <>
struct scalar_traits<GaussRational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static GaussRational zero() { return {}; }
  static GaussRational one() { return {1}; }
  static GaussRational imag_unit() { return {0, 1}; }
  static GaussRational from(const GaussRational& z) { return z; }
  static bool is_zero(const GaussRational& x) { return x.is_zero(); }
  static GaussRational conj(const GaussRational& x) { return x.conj(); }
  static double magnitude(const GaussRational& x) { return std::abs(to_complex(x)); }
  static Complex to_complex(const GaussRational& x) { return {x.re.get_d(), x.im.get_d()}; }
  static GaussRational sqrt(const Rational& q) {
    Rational root;
    if (!rational_sqrt(q, &root)) {
      throw std::domain_error("sqrt(" + invh11::to_string(q) + ") is not rational");
    }
    return {root};
  }
};

template <>
struct scalar_traits<Surd> {
  static constexpr bool exact = true;
  static constexpr const char* name = "surd";
  static Surd zero() { return {}; }
  static Surd one() { return {1}; }
  static Surd imag_unit() { return Surd(GaussRational{0, 1}); }
  static Surd from(const GaussRational& z) { return Surd(z); }
  static bool is_zero(const Surd& x) { return x.is_zero(); }
  static Surd conj(const Surd& x) { return x.conj(); }
  static double magnitude(const Surd& x) { return std::abs(x.to_complex()); }
  static Complex to_complex(const Surd& x) { return x.to_complex(); }
  static Surd sqrt(const Rational& q) { return Surd::root(q); }
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static Complex zero() { return {}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex imag_unit() { return {0.0, 1.0}; }
  static Complex from(const GaussRational& z) { return {z.re.get_d(), z.im.get_d()}; }
  static bool is_zero(const Complex& x) { return x == Complex{}; }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static Complex to_complex(const Complex& x) { return x; }
  static Complex sqrt(const Rational& q) { return {std::sqrt(q.get_d()), 0.0}; }
};

}  // namespace invh11
