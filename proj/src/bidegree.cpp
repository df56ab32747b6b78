#include "invh11/bidegree.hpp"

namespace invh11 {

AlmostComplexCoframe::AlmostComplexCoframe(Rows rows) : rows_(std::move(rows)) {
  try {
    (void)inverse4(stacked());
  } catch (const std::domain_error&) {
    throw std::invalid_argument("phi^1, phi^2 and their conjugates do not form a coframe");
  }
}

Matrix4<GaussRational> AlmostComplexCoframe::stacked() const {
  Matrix4<GaussRational> t;
  for (int j = 0; j < 4; ++j) {
    t[0][j] = rows_[0][j];
    t[1][j] = rows_[1][j];
    t[2][j] = rows_[0][j].conj();
    t[3][j] = rows_[1][j].conj();
  }
  return t;
}

}  // namespace invh11
