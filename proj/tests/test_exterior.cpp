#include <doctest.h>

#include "support.hpp"

using namespace invh11;
using namespace testing;

namespace {

Matrix4<GaussRational> standard_stacked() { return catalog("secondary_kodaira").coframe.stacked(); }

Form<GaussRational> to_phi(const Form<GaussRational>& f) {
  return change_frame(f, FrameTag::Complex, standard_stacked());
}

}  // namespace

TEST_CASE("wedge of basis covectors") {
  auto e1 = real(1, {{"e^{1}", q(1)}});
  auto e2 = real(1, {{"e^{2}", q(1)}});
  CHECK(wedge(e1, e2) == real(2, {{"e^{12}", q(1)}}));
  CHECK(wedge(e2, e1) == real(2, {{"e^{12}", q(-1)}}));
  CHECK(wedge(e1 + e2, e1 - e2) == real(2, {{"e^{12}", q(-2)}}));
}

TEST_CASE("wedge rejects mixed frames and flags overflow") {
  auto e1 = real(1, {{"e^{1}", q(1)}});
  auto p1 = phi(1, {{"phi^{1}", q(1)}});
  CHECK_THROWS_AS(wedge(e1, p1), std::invalid_argument);
  auto top = real(4, {{"e^{1234}", q(1)}});
  auto big = wedge(top, e1);
  CHECK(big.is_zero());
  CHECK(big.degree() == 5);
  CHECK(big.trivially_vanishing());
}

TEST_CASE("sign of merge") {
  auto w = [](const char* s) { return parse_word(s, FrameTag::Real); };
  CHECK(sign_of_merge(w("e^{14}"), w("e^{23}")) == 1);
  CHECK(sign_of_merge(w("e^{13}"), w("e^{24}")) == -1);
  CHECK(sign_of_merge(w("e^{12}"), w("e^{23}")) == 0);
  // brute-force inversion count over every disjoint pair
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      BasisWord wa(static_cast<std::uint8_t>(a)), wb(static_cast<std::uint8_t>(b));
      if (a & b) {
        CHECK(sign_of_merge(wa, wb) == 0);
        continue;
      }
      int inversions = 0;
      for (int x : wa.letters())
        for (int y : wb.letters()) inversions += x > y;
      CHECK(sign_of_merge(wa, wb) == (inversions % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("word labels round trip") {
  for (unsigned m = 0; m < 16; ++m) {
    BasisWord w(static_cast<std::uint8_t>(m));
    for (FrameTag f : {FrameTag::Real, FrameTag::Complex, FrameTag::Unitary}) CHECK(parse_word(w.label(f), f) == w);
  }
  CHECK(parse_word("phi^{12b}", FrameTag::Complex) == parse_word("phi^{1 2b}", FrameTag::Complex));
  CHECK_THROWS(parse_word("phi^{2 1}", FrameTag::Complex));
  CHECK_THROWS(parse_word("e^{15}", FrameTag::Real));
}

TEST_CASE("change of frame to phi") {
  CHECK(to_phi(real(1, {{"e^{1}", q(1)}})) == phi(1, {{"phi^{1}", q(1, 2)}, {"phi^{1b}", q(1, 2)}}));
  CHECK(to_phi(real(2, {{"e^{12}", q(1)}})) ==
        phi(2, {{"phi^{12}", q(1, 4)}, {"phi^{1 2b}", q(1, 4)}, {"phi^{2 1b}", q(-1, 4)}, {"phi^{1b 2b}", q(1, 4)}}));
  CHECK(to_phi(real(1, {{"e^{3}", q(1)}})) == phi(1, {{"phi^{1}", -I / q(2)}, {"phi^{1b}", I / q(2)}}));
}

TEST_CASE("singular frame change is rejected") {
  Matrix4<GaussRational> m = identity4<GaussRational>();
  m[3] = m[2];
  CHECK_THROWS_AS(change_frame(real(1, {{"e^{1}", q(1)}}), FrameTag::Complex, m), std::domain_error);
  CHECK_THROWS_AS(AlmostComplexCoframe({{{q(1), 0, 0, 0}, {q(1), 0, 0, 0}}}), std::invalid_argument);
  // phi^1 = e^1, phi^2 = e^2 is real, so phi and phibar coincide
  CHECK_THROWS_AS(AlmostComplexCoframe({{{q(1), 0, 0, 0}, {0, q(1), 0, 0}}}), std::invalid_argument);
}

TEST_CASE("graded anticommutativity, associativity, frame change compatibility") {
  RationalSource src(11);
  Matrix4<GaussRational> t = standard_stacked();
  for (int trial = 0; trial < 40; ++trial) {
    for (int da = 0; da <= 4; ++da) {
      for (int db = 0; da + db <= 4; ++db) {
        auto a = src.form_of_degree(FrameTag::Real, da);
        auto b = src.form_of_degree(FrameTag::Real, db);
        auto ab = wedge(a, b);
        auto ba = wedge(b, a);
        CHECK(ab == ((da * db) % 2 ? -ba : ba));
        CHECK(to_phi(ab) == wedge(to_phi(a), to_phi(b)));
        for (int dc = 0; da + db + dc <= 4; ++dc) {
          auto c = src.form_of_degree(FrameTag::Real, dc);
          CHECK(wedge(ab, c) == wedge(a, wedge(b, c)));
        }
      }
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto f = src.form_of_degree(FrameTag::Real, trial % 5);
    auto there = change_frame(f, FrameTag::Complex, t);
    CHECK(change_frame(there, FrameTag::Real, inverse4(t)) == f);
  }
}

TEST_CASE("floating backend agrees within 1e-12") {
  RationalSource src(12);
  Matrix4<Complex> t;
  auto exact = standard_stacked();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = scalar_traits<Complex>::from(exact[i][j]);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = src.form_of_degree(FrameTag::Real, trial % 3);
    auto b = src.form_of_degree(FrameTag::Real, 2);
    auto fa = convert<Complex>(a);
    auto fb = convert<Complex>(b);
    auto lhs = wedge(fa, fb);
    CHECK((lhs - convert<Complex>(wedge(a, b))).max_abs() <= 1e-12 * (1 + lhs.max_abs()));
    auto round = change_frame(change_frame(fa, FrameTag::Complex, t), FrameTag::Real, inverse4(t));
    CHECK((round - fa).max_abs() <= 1e-12 * (1 + fa.max_abs()));
    // b has even degree, so it commutes with a
    CHECK((lhs - wedge(fb, fa)).max_abs() <= 1e-12 * (1 + lhs.max_abs()));
  }
}

TEST_CASE("conjugation") {
  auto f = phi(2, {{"phi^{1 2b}", z(2, 1)}, {"phi^{12}", q(3)}});
  // conj(phi^1 ^ phibar^2) = phibar^1 ^ phi^2 = -phi^{2 1b}
  CHECK(conjugate(f) == phi(2, {{"phi^{2 1b}", -z(2, -1)}, {"phi^{1b 2b}", q(3)}}));
  CHECK(conjugate(conjugate(f)) == f);
}
