#include "djkm/families.hpp"

#include <string>

namespace djkm {
namespace {

void check_family(int which) {
  if (which < -4 || which > -1) {
    throw WrongFamily("family index " + std::to_string(which) +
                      " not in {-4,-3,-2,-1}");
  }
}

void check_odd_family(int which) {
  check_family(which);
  if (which != -1 && which != -3) {
    throw WrongFamily("closed form only covers families -1 and -3");
  }
}

void check_even_family(int which) {
  check_family(which);
  if (which != -2 && which != -4) {
    throw WrongFamily("elliptic series only covers families -2 and -4");
  }
}

// (P(z))^(-3/2) = sum_n Q_n^(3/2) z^(2n), trusted through `order`.
SeriesC pow_minus_three_halves(int order) {
  std::vector<std::pair<int, PolyC>> terms;
  auto row = gegenbauer_row(Rational(3, 2), order / 2);
  for (int n = 0; 2 * n <= order; ++n) {
    terms.emplace_back(2 * n, row[static_cast<size_t>(n)]);
  }
  return SeriesC::from_terms(std::move(terms), order + 1);
}

}  // namespace

PolyC gegenbauer(const Rational& lambda, int n) {
  return gegenbauer_row(lambda, n).back();
}

std::vector<PolyC> gegenbauer_row(const Rational& lambda, int nmax) {
  std::vector<PolyC> q;
  q.reserve(static_cast<size_t>(nmax) + 1);
  q.push_back(PolyC(1));
  if (nmax >= 1) q.push_back(PolyC::variable() * (Rational(2) * lambda));
  for (int n = 2; n <= nmax; ++n) {
    PolyC a = PolyC::variable() * q[static_cast<size_t>(n - 1)] *
              (Rational(2) * (Rational(n) + lambda - Rational(1)));
    PolyC b = q[static_cast<size_t>(n - 2)] *
              (Rational(n) + Rational(2) * lambda - Rational(2));
    q.push_back((a - b) * Rational(1, n));
  }
  return q;
}

const PolyC& FamilyTable::entry(int k) const {
  if (k < -4 || k > kmax()) {
    throw Error("family entry " + std::to_string(k) + " outside table range");
  }
  return entries_[static_cast<size_t>(k + 4)];
}

FamilyTable family_by_recursion(int which, int kmax) {
  check_family(which);
  std::vector<PolyC> entries;
  entries.reserve(static_cast<size_t>(std::max(kmax, -4) + 5));
  for (int k = -4; k <= -1; ++k) {
    entries.push_back(k == which ? PolyC(1) : PolyC());
  }
  for (int k = 0; k <= kmax; ++k) {
    // (6 + 2k) P_k = 4kc P_{k-2} - 2(k - 3) P_{k-4}
    PolyC p = PolyC::variable() * entries[static_cast<size_t>(k + 2)] *
                  Rational(4 * k, 6 + 2 * k) -
              entries[static_cast<size_t>(k)] *
                  Rational(2 * (k - 3), 6 + 2 * k);
    entries.push_back(std::move(p));
  }
  return FamilyTable(which, std::move(entries));
}

PolyC family_closed_form_odd(int which, int n) {
  check_odd_family(which);
  if (n < 2) throw Error("closed form needs n >= 2");
  PolyC q = gegenbauer(Rational(-1, 2), n);
  if (which == -1) q = PolyC::variable() * q;
  PolyC c2m1 = PolyC::variable() * PolyC::variable() - PolyC(1);
  return PolyC::exact_div(-q, c2m1);
}

SeriesC series_sqrt_gegenbauer(int order) {
  std::vector<std::pair<int, PolyC>> terms;
  auto row = gegenbauer_row(Rational(-1, 2), (order - 1) / 2);
  for (int n = 0; 2 * n + 1 <= order; ++n) {
    terms.emplace_back(2 * n + 1, row[static_cast<size_t>(n)]);
  }
  return SeriesC::from_terms(std::move(terms), order + 1);
}

SeriesC series_sqrt_newton(int order) {
  // Newton iteration S <- (S + A/S)/2 on S^2 = A = 1 - 2cz^2 + z^4,
  // doubling the trusted order each step from the seed S = 1.
  SeriesC a = SeriesC::from_terms(
      {{0, PolyC(1)}, {2, PolyC::variable() * Rational(-2)}, {4, PolyC(1)}});
  SeriesC s = SeriesC::monomial(0, PolyC(1), 1);
  int trusted = 1;
  while (trusted <= order) {
    trusted = std::min(2 * trusted, order + 1);
    // Re-trust the current approximation at the doubled order: Newton
    // doubles the number of correct coefficients per step.
    SeriesC cur = SeriesC::from_terms(s.terms(), trusted);
    SeriesC quotient = a * power_series_inverse(cur, trusted);
    s = (cur + quotient).scaled(Rational(1, 2));
  }
  // Shift by z to match the odd-exponent Gegenbauer stream.
  return (SeriesC::monomial(1, PolyC(1)) * s).truncated(order + 1);
}

SeriesC family_elliptic_series(int which, int order) {
  check_even_family(which);
  const int inner = order + 4;
  SeriesC zsqrt = series_sqrt_gegenbauer(inner);
  SeriesC integrand = pow_minus_three_halves(inner);
  if (which == -4) {
    SeriesC factor = SeriesC::from_terms(
        {{0, PolyC::variable() * Rational(4)}, {-2, PolyC(-1)}});
    integrand = factor * integrand;
  }
  return (zsqrt * integrand.antiderivative()).truncated(order + 1);
}

SeriesC generating_function(int which, int order) {
  FamilyTable table = family_by_recursion(which, order - 4);
  std::vector<std::pair<int, PolyC>> terms;
  for (int k = 0; k <= order; ++k) {
    terms.emplace_back(k, table.entry(k - 4));
  }
  return SeriesC::from_terms(std::move(terms), order + 1);
}

SeriesC ode_residual(const SeriesC& series, int which) {
  check_family(which);
  SeriesC a = SeriesC::from_terms({{5, PolyC(1)},
                                   {3, PolyC::variable() * Rational(-2)},
                                   {1, PolyC(1)}});
  SeriesC b = SeriesC::from_terms({{4, PolyC(3)},
                                   {2, PolyC::variable() * Rational(-4)},
                                   {0, PolyC(1)}});
  SeriesC rhs;
  switch (which) {
    case -1: rhs = SeriesC::monomial(3, PolyC(2)); break;
    case -2: rhs = SeriesC::monomial(2, PolyC(1)); break;
    case -3: rhs = SeriesC::monomial(3, PolyC::variable() * Rational(2)); break;
    default:
      rhs = SeriesC::from_terms(
          {{2, PolyC::variable() * Rational(4)}, {0, PolyC(-1)}});
  }
  return a * series.derivative() - b * series - rhs;
}

}  // namespace djkm
