#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invh11/exterior.hpp"

namespace invh11 {

/// Four-dimensional Lie algebra given by the differentials of a real coframe:
/// de^i = sum_{j<k} c^i_{jk} e^{jk}.
class LieStructure {
 public:
  LieStructure() = default;
  explicit LieStructure(std::string name) : name_(std::move(name)) {}

  /// Adds c * e^{jk} to de^i. Indices are 1-based; j != k (j > k flips the sign).
  LieStructure& add(int i, int j, int k, const Rational& c);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::map<BasisWord, Rational>& constants(int i) const;

  /// de^i (1-based) in the real frame.
  template <class S>
  Form<S> differential(int i) const {
    const auto& c = constants(i);
    Form<S> out(FrameTag::Real, 2);
    for (const auto& [w, value] : c) out.add_term(w, scalar_traits<S>::from(GaussRational(value)));
    return out;
  }

  bool is_abelian() const;

  friend bool operator==(const LieStructure& a, const LieStructure& b) { return a.c_ == b.c_; }

 private:
  std::string name_;
  std::array<std::map<BasisWord, Rational>, 4> c_;
};

/// de^i for 1 <= i <= 4.
template <class S>
Form<S> d_on_coframe(const LieStructure& lie, int i) {
  return lie.template differential<S>(i);
}

/// Exterior derivative of an invariant real-frame form, by the Leibniz rule
/// from the coframe differentials.
template <class S>
Form<S> d_invariant(const LieStructure& lie, const Form<S>& f) {
  if (f.frame() != FrameTag::Real) throw std::invalid_argument("d_invariant expects a real-frame form");
  Form<S> out(FrameTag::Real, f.degree() + 1);
  if (out.trivially_vanishing()) return out;
  std::array<std::optional<Form<S>>, 4> de;
  for (const auto& [w, c] : f.terms()) {
    auto letters = w.letters();
    for (std::size_t m = 0; m < letters.size(); ++m) {
      int l = letters[m];
      if (!de[static_cast<std::size_t>(l)]) de[static_cast<std::size_t>(l)] = lie.template differential<S>(l + 1);
      std::vector<int> before(letters.begin(), letters.begin() + static_cast<long>(m));
      std::vector<int> after(letters.begin() + static_cast<long>(m) + 1, letters.end());
      Form<S> term = Form<S>::basis(FrameTag::Real, BasisWord::from_letters(before), c);
      term = wedge(term, *de[static_cast<std::size_t>(l)]);
      term = wedge(term, Form<S>::basis(FrameTag::Real, BasisWord::from_letters(after)));
      if (m % 2 == 1) term = -term;
      out += term;
    }
  }
  return out;
}

struct DSquaredVerdict {
  bool ok = true;
  /// (i, d(de^i)) for every coframe index where d(de^i) != 0.
  std::vector<std::pair<int, Form<GaussRational>>> failures;
};

/// d(de^i) = 0 for all i, i.e. the structure constants satisfy Jacobi.
DSquaredVerdict validate_d_squared(const LieStructure& lie);

}  // namespace invh11
