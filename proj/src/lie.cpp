#include "invh11/lie.hpp"

namespace invh11 {

LieStructure& LieStructure::add(int i, int j, int k, const Rational& c) {
  if (i < 1 || i > 4 || j < 1 || j > 4 || k < 1 || k > 4) throw std::out_of_range("coframe index out of range");
  if (j == k) throw std::invalid_argument("e^{jj} vanishes; j and k must differ");
  Rational value = j < k ? c : Rational(-c);
  BasisWord w = BasisWord::from_letters(j < k ? std::vector<int>{j - 1, k - 1} : std::vector<int>{k - 1, j - 1});
  auto& slot = c_[static_cast<std::size_t>(i - 1)];
  slot[w] += value;
  if (sgn(slot[w]) == 0) slot.erase(w);
  return *this;
}

const std::map<BasisWord, Rational>& LieStructure::constants(int i) const {
  if (i < 1 || i > 4) throw std::out_of_range("coframe index out of range");
  return c_[static_cast<std::size_t>(i - 1)];
}

bool LieStructure::is_abelian() const {
  for (const auto& c : c_)
    if (!c.empty()) return false;
  return true;
}

DSquaredVerdict validate_d_squared(const LieStructure& lie) {
  DSquaredVerdict v;
  for (int i = 1; i <= 4; ++i) {
    Form<GaussRational> dd = d_invariant(lie, lie.differential<GaussRational>(i));
    if (!dd.is_zero()) {
      v.ok = false;
      v.failures.emplace_back(i, dd);
    }
  }
  return v;
}

}  // namespace invh11
