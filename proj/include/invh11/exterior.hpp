#pragma once

// Complexified exterior algebra over a rank-4 space.
//
// A basis word is a subset of the four coframe letters stored as a bit mask;
// its letters are always read in increasing order (e1<e2<e3<e4 for the real
// frame, phi1<phi2<phibar1<phibar2 for the complex and unitary frames).

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "invh11/scalar.hpp"

namespace invh11 {

enum class FrameTag { Real, Complex, Unitary };

std::string frame_name(FrameTag f);
FrameTag parse_frame(const std::string& name);

class BasisWord {
 public:
  constexpr BasisWord() = default;
  constexpr explicit BasisWord(std::uint8_t mask) : mask_(mask) {
    if (mask > 15) throw std::out_of_range("basis word mask out of range");
  }
  /// Letters are 0-based and must be strictly increasing.
  static BasisWord from_letters(const std::vector<int>& letters);

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool contains(int letter) const { return (mask_ >> letter) & 1u; }
  std::vector<int> letters() const;

  /// Holomorphic and antiholomorphic letter counts in a complex-type frame.
  constexpr int holomorphic_degree() const { return std::popcount(static_cast<unsigned>(mask_ & 0b0011u)); }
  constexpr int antiholomorphic_degree() const { return std::popcount(static_cast<unsigned>(mask_ & 0b1100u)); }

  /// Word with holomorphic and antiholomorphic letters exchanged.
  constexpr BasisWord bar() const { return BasisWord(static_cast<std::uint8_t>(((mask_ & 3u) << 2) | (mask_ >> 2))); }

  BasisWord complement() const { return BasisWord(static_cast<std::uint8_t>(~mask_ & 15u)); }

  std::string label(FrameTag frame) const;

  /// Words ordered by degree, then lexicographically by letters.
  friend bool operator<(BasisWord a, BasisWord b);
  friend constexpr bool operator==(BasisWord a, BasisWord b) { return a.mask_ == b.mask_; }
  friend constexpr bool operator!=(BasisWord a, BasisWord b) { return a.mask_ != b.mask_; }

 private:
  std::uint8_t mask_ = 0;
};

/// All words of the given degree in canonical order.
std::vector<BasisWord> words_of_degree(int degree);

/// All words with p holomorphic and q antiholomorphic letters.
std::vector<BasisWord> words_of_bidegree(int p, int q);

BasisWord parse_word(const std::string& label, FrameTag frame);

/// Sign of the permutation sorting the concatenation w1 w2; 0 on a repeated letter.
int sign_of_merge(BasisWord w1, BasisWord w2);

/// Sign of the permutation sorting an arbitrary letter sequence; 0 on repeats.
int sequence_sign(const std::vector<int>& letters);

template <class S>
using Matrix4 = std::array<std::array<S, 4>, 4>;

/// Left-invariant k-form with constant coefficients on one coframe.
template <class S>
class Form {
 public:
  using Traits = scalar_traits<S>;
  using Terms = std::map<BasisWord, S>;

  Form(FrameTag frame, int degree) : frame_(frame), degree_(degree) {
    if (degree < 0 || degree > 8) throw std::out_of_range("form degree out of range");
  }

  static Form basis(FrameTag frame, BasisWord w, const S& coefficient = Traits::one()) {
    Form f(frame, w.degree());
    f.add_term(w, coefficient);
    return f;
  }
  static Form constant(FrameTag frame, const S& value) { return basis(frame, BasisWord{}, value); }

  FrameTag frame() const { return frame_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Set for products whose degree exceeds the dimension; such forms are always zero.
  bool trivially_vanishing() const { return degree_ > 4; }

  S coeff(BasisWord w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  void add_term(BasisWord w, const S& value) {
    if (w.degree() != degree_) throw std::invalid_argument("word degree does not match form degree");
    if (Traits::is_zero(value)) return;
    auto [it, inserted] = terms_.try_emplace(w, value);
    if (!inserted) {
      it->second += value;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Form& operator+=(const Form& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  Form& operator*=(const S& k) {
    if (Traits::is_zero(k)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= k;
      it = Traits::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) { return a *= -Traits::one(); }
  friend Form operator*(const S& k, Form a) { return a *= k; }
  friend Form operator*(Form a, const S& k) { return a *= k; }

  friend bool operator==(const Form& a, const Form& b) {
    return a.frame_ == b.frame_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Largest coefficient magnitude (0 for the zero form).
  double max_abs() const {
    double m = 0.0;
    for (const auto& [w, c] : terms_) m = std::max(m, Traits::magnitude(c));
    return m;
  }

 private:
  void check_compatible(const Form& o) const {
    if (o.frame_ != frame_) throw std::invalid_argument("form frames differ");
    if (o.degree_ != degree_) throw std::invalid_argument("form degrees differ");
  }

  FrameTag frame_;
  int degree_;
  Terms terms_;
};

template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
  if (a.frame() != b.frame()) throw std::invalid_argument("wedge of forms on different frames");
  Form<S> out(a.frame(), a.degree() + b.degree());
  if (out.trivially_vanishing()) return out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      int sign = sign_of_merge(wa, wb);
      if (sign == 0) continue;
      S c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(BasisWord(static_cast<std::uint8_t>(wa.mask() | wb.mask())), c);
    }
  }
  return out;
}

/// Rewrites f on the target coframe. `images[l]` expresses source letter l in target letters.
template <class S>
Form<S> substitute(const Form<S>& f, FrameTag target, const Matrix4<S>& images) {
  std::vector<Form<S>> letter;
  letter.reserve(4);
  for (int l = 0; l < 4; ++l) {
    Form<S> img(target, 1);
    for (int t = 0; t < 4; ++t) img.add_term(BasisWord(static_cast<std::uint8_t>(1u << t)), images[l][t]);
    letter.push_back(std::move(img));
  }
  Form<S> out(target, f.degree());
  for (const auto& [w, c] : f.terms()) {
    Form<S> piece = Form<S>::constant(target, c);
    for (int l : w.letters()) piece = wedge(piece, letter[l]);
    out += piece;
  }
  return out;
}

template <class S>
Matrix4<S> inverse4(const Matrix4<S>& m);

/// `basis_matrix` expresses the target coframe letters in the source letters.
template <class S>
Form<S> change_frame(const Form<S>& f, FrameTag target, const Matrix4<S>& basis_matrix) {
  return substitute(f, target, inverse4(basis_matrix));
}

/// Complex conjugate. On complex-type frames letters are swapped with their bars.
template <class S>
Form<S> conjugate(const Form<S>& f) {
  using T = scalar_traits<S>;
  Form<S> out(f.frame(), f.degree());
  for (const auto& [w, c] : f.terms()) {
    if (f.frame() == FrameTag::Real) {
      out.add_term(w, T::conj(c));
      continue;
    }
    BasisWord b = w.bar();
    // bar(w) as a sequence is (antiholomorphic part, holomorphic part); reorder.
    BasisWord lo(static_cast<std::uint8_t>(b.mask() & 0b1100u));
    BasisWord hi(static_cast<std::uint8_t>(b.mask() & 0b0011u));
    int sign = sign_of_merge(lo, hi);
    S v = T::conj(c);
    out.add_term(b, sign < 0 ? S(-v) : v);
  }
  return out;
}

template <class S>
Matrix4<S> identity4() {
  Matrix4<S> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = i == j ? scalar_traits<S>::one() : scalar_traits<S>::zero();
  return m;
}

template <class S>
Matrix4<S> inverse4(const Matrix4<S>& m) {
  using T = scalar_traits<S>;
  Matrix4<S> a = m;
  Matrix4<S> inv = identity4<S>();
  double scale = 0.0;
  for (const auto& row : m)
    for (const auto& x : row) scale = std::max(scale, T::magnitude(x));
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    if constexpr (T::exact) {
      for (int r = col; r < 4 && pivot < 0; ++r)
        if (!T::is_zero(a[r][col])) pivot = r;
    } else {
      double best = 1e-13 * scale;
      for (int r = col; r < 4; ++r) {
        if (T::magnitude(a[r][col]) > best) {
          best = T::magnitude(a[r][col]);
          pivot = r;
        }
      }
    }
    if (pivot < 0) throw std::domain_error("singular coframe matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    S p = a[col][col];
    for (int j = 0; j < 4; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || T::is_zero(a[r][col])) continue;
      S f = a[r][col];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Converts an exact form to another backend.
template <class S>
Form<S> convert(const Form<GaussRational>& f) {
  Form<S> out(f.frame(), f.degree());
  for (const auto& [w, c] : f.terms()) out.add_term(w, scalar_traits<S>::from(c));
  return out;
}

template <class S>
std::string to_string(const Form<S>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    if (w.degree() > 0) s += " " + w.label(f.frame());
  }
  return s;
}

}  // namespace invh11
