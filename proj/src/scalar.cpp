#include "invh11/scalar.hpp"

#include <sstream>

namespace invh11 {

namespace {

// "12", "-3/4", "0.125", "-1.5e-3"
Rational parse_decimal(const std::string& text) {
  std::string mantissa = text;
  long exponent = 0;
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = text.substr(0, epos);
    std::size_t used = 0;
    exponent = std::stol(text.substr(epos + 1), &used);
    if (used != text.size() - epos - 1) throw std::invalid_argument("bad exponent in '" + text + "'");
  }
  bool negative = false;
  std::size_t i = 0;
  if (i < mantissa.size() && (mantissa[i] == '+' || mantissa[i] == '-')) {
    negative = mantissa[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < mantissa.size(); ++i) {
    char c = mantissa[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("not a number: '" + text + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a number: '" + text + "'");
  mpz_class num(digits, 10);
  mpz_class ten = 10;
  mpz_class scale;
  long shift = exponent - frac_digits;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift < 0 ? Rational(num, scale) : Rational(num * scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ') text.push_back(c);
  }
  if (text.empty()) throw std::invalid_argument("empty number");
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
  return num / den;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool rational_sqrt(const Rational& q, Rational* root) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (root) {
    *root = Rational(rn, rd);
    root->canonicalize();
  }
  return true;
}

std::string to_string(const GaussRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string im = sgn(z.im) < 0 ? to_string(Rational(-z.im)) : to_string(z.im);
  std::string im_part = (im == "1" ? std::string("i") : im + "*i");
  if (sgn(z.re) == 0) return sgn(z.im) < 0 ? "-" + im_part : im_part;
  return "(" + to_string(z.re) + (sgn(z.im) < 0 ? " - " : " + ") + im_part + ")";
}

Surd::Surd(GaussRational a, GaussRational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) < 0) throw std::domain_error("negative radicand");
  Rational root;
  if (!b_.is_zero() && rational_sqrt(d_, &root)) {
    a_ += b_ * GaussRational(root);
    b_ = GaussRational{};
  }
}

const Rational& Surd::common_radicand(const Surd& o) const {
  if (b_.is_zero()) return o.d_;
  if (o.b_.is_zero() || d_ == o.d_) return d_;
  throw std::domain_error("mixing surds with radicands " + to_string(d_) + " and " + to_string(o.d_));
}

Surd& Surd::operator+=(const Surd& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Rational d = common_radicand(o);
  GaussRational a = a_ * o.a_ + b_ * o.b_ * GaussRational(d);
  GaussRational b = a_ * o.b_ + b_ * o.a_;
  *this = Surd(std::move(a), std::move(b), std::move(d));
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  Rational d = common_radicand(o);
  // (a + b r)^-1 = (a - b r) / (a^2 - b^2 d); the denominator vanishes only for o == 0.
  GaussRational den = o.a_ * o.a_ - o.b_ * o.b_ * GaussRational(d);
  if (den.is_zero()) throw std::domain_error("division by zero surd");
  Surd inv(o.a_ / den, -o.b_ / den, d);
  return *this *= inv;
}

Complex Surd::to_complex() const {
  double r = std::sqrt(d_.get_d());
  return Complex{a_.re.get_d(), a_.im.get_d()} + r * Complex{b_.re.get_d(), b_.im.get_d()};
}

std::string to_string(const Surd& z) {
  if (z.surd_part().is_zero()) return to_string(z.rational_part());
  std::string s = to_string(z.surd_part()) + "*sqrt(" + to_string(z.radicand()) + ")";
  if (z.rational_part().is_zero()) return s;
  return to_string(z.rational_part()) + " + " + s;
}

std::string to_string(const Complex& z) {
  std::ostringstream os;
  os.precision(17);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << "(" << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "*i)";
  }
  return os.str();
}

}  // namespace invh11
