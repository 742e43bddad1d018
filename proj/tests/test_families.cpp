#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "djkm/families.hpp"

using namespace djkm;

namespace {
const PolyC c = PolyC::variable();
}

TEST_CASE("recursion tables start from indicator data") {
  for (int which = -4; which <= -1; ++which) {
    FamilyTable t = family_by_recursion(which, 6);
    for (int k = -4; k <= -1; ++k) {
      CHECK(t.entry(k) == (k == which ? PolyC(1) : PolyC()));
    }
  }
  CHECK_THROWS_AS(family_by_recursion(0, 4), WrongFamily);
  CHECK_THROWS_AS(family_by_recursion(-5, 4), WrongFamily);
  CHECK_THROWS_AS(family_by_recursion(-3, 4).entry(5), Error);
}

TEST_CASE("recursion spot values") {
  FamilyTable m3 = family_by_recursion(-3, 8);
  FamilyTable m4 = family_by_recursion(-4, 8);
  FamilyTable m1 = family_by_recursion(-1, 8);
  FamilyTable m2 = family_by_recursion(-2, 8);

  // k = 0: 6 P_0 = -2(-3) P_{-4} => P_0 = delta(which, -4)
  CHECK(m4.entry(0) == PolyC(1));
  CHECK(m3.entry(0) == PolyC());
  // k = 1: 8 P_1 = 4c P_{-1} + 4 P_{-3}
  CHECK(m3.entry(1) == PolyC(Rational(1, 2)));
  CHECK(m1.entry(1) == c * Rational(1, 2));
  // k = 2: 10 P_2 = 8c P_0 + 2 P_{-2}
  CHECK(m4.entry(2) == c * Rational(4, 5));
  CHECK(m2.entry(2) == PolyC(Rational(1, 5)));
  // parity: family -1/-3 vanish at even k >= 0, family -2/-4 at odd k.
  for (int k = 0; k <= 8; ++k) {
    if (k % 2 == 0) {
      CHECK(m1.entry(k) == PolyC());
      CHECK(m3.entry(k) == PolyC());
    } else {
      CHECK(m2.entry(k) == PolyC());
      CHECK(m4.entry(k) == PolyC());
    }
  }
}

TEST_CASE("gegenbauer recursion basics") {
  CHECK(gegenbauer(Rational(-1, 2), 0) == PolyC(1));
  CHECK(gegenbauer(Rational(-1, 2), 1) == c * Rational(-1));
  // Q_2^(-1/2) = (1 - c^2)/2
  CHECK(gegenbauer(Rational(-1, 2), 2) ==
        (PolyC(1) - c * c) * Rational(1, 2));
  // lambda = 1 gives the Chebyshev-U values at n = 2: 4c^2 - 1.
  CHECK(gegenbauer(Rational(1), 2) == c * c * Rational(4) - PolyC(1));
}

TEST_CASE("odd families: closed form matches recursion") {
  FamilyTable m1 = family_by_recursion(-1, 47);
  FamilyTable m3 = family_by_recursion(-3, 47);
  for (int n = 2; 2 * n - 3 <= 47; ++n) {
    int k = 2 * n - 3;
    CHECK(family_closed_form_odd(-1, n) == m1.entry(k));
    CHECK(family_closed_form_odd(-3, n) == m3.entry(k));
  }
  CHECK_THROWS_AS(family_closed_form_odd(-2, 3), WrongFamily);
}

TEST_CASE("even families: elliptic-integral series matches recursion") {
  const int order = 24;
  for (int which : {-2, -4}) {
    SeriesC series = family_elliptic_series(which, order);
    SeriesC table = generating_function(which, order);
    // The elliptic route only produces the k >= -4 stream shifted by 4:
    // compare coefficients of z^k for k in [0, order].
    CHECK(agree_to_order(series, table, order));
  }
  CHECK_THROWS_AS(family_elliptic_series(-1, 4), WrongFamily);
}

TEST_CASE("generating functions satisfy the defining differential equation") {
  const int order = 20;
  for (int which : {-1, -2, -3, -4}) {
    SeriesC g = generating_function(which, order);
    CHECK(ode_residual(g, which).is_zero_to_order());
  }
}

TEST_CASE("sqrt routes agree and square correctly") {
  CHECK(agree_to_order(series_sqrt_gegenbauer(31), series_sqrt_newton(31), 31));
}
