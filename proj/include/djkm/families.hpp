#pragma once

#include <vector>

#include "djkm/laurent_series.hpp"
#include "djkm/polyc.hpp"

namespace djkm {

using SeriesC = LaurentSeries<PolyC>;

/// Gegenbauer polynomial Q_n^(lambda)(c): Q_0 = 1, Q_1 = 2*lambda*c,
/// n Q_n = 2c(n + lambda - 1) Q_{n-1} - (n + 2*lambda - 2) Q_{n-2}.
PolyC gegenbauer(const Rational& lambda, int n);

/// Q_0 .. Q_nmax in one sweep of the recursion.
std::vector<PolyC> gegenbauer_row(const Rational& lambda, int nmax);

/// One of the four reduction-coefficient families, indexed by
/// which in {-4,-3,-2,-1}. entry(k) = P_{which,k} for -4 <= k <= kmax.
class FamilyTable {
 public:
  FamilyTable(int which, std::vector<PolyC> entries)
      : which_(which), entries_(std::move(entries)) {}

  int which() const { return which_; }
  int kmax() const { return static_cast<int>(entries_.size()) - 5; }
  const PolyC& entry(int k) const;

 private:
  int which_;
  std::vector<PolyC> entries_;  // entries_[k + 4] = P_{which,k}
};

/// Builds P_{which,k} for -4 <= k <= kmax from the four-term recursion
/// (6 + 2k) P_k = 4kc P_{k-2} - 2(k - 3) P_{k-4}, with indicator initial
/// conditions P_{which,k} = delta_{k,which} on -4 <= k <= -1.
FamilyTable family_by_recursion(int which, int kmax);

/// Closed form for the odd families (which in {-1,-3}), n >= 2:
/// P_{-1,2n-3} = -c Q_n^(-1/2) / (c^2 - 1),
/// P_{-3,2n-3} =   -Q_n^(-1/2) / (c^2 - 1).
/// The division is exact; a nonzero remainder is a hard error.
PolyC family_closed_form_odd(int which, int n);

/// sqrt(1 - 2cz^2 + z^4) * z as a Gegenbauer stream:
/// sum_n Q_n^(-1/2) z^(2n+1), trusted through exponent `order`.
SeriesC series_sqrt_gegenbauer(int order);

/// The same square root computed independently by Newton iteration on
/// S^2 = 1 - 2cz^2 + z^4 (then shifted by z).
SeriesC series_sqrt_newton(int order);

/// Series solution for the even families (which in {-4,-2}):
///   which = -4: z*sqrt(P(z)) * integral((4c - z^-2) (P(z))^(-3/2))
///   which = -2: z*sqrt(P(z)) * integral((P(z))^(-3/2))
/// with P(z) = z^4 - 2cz^2 + 1, integration constants zero, trusted through
/// exponent `order`.
SeriesC family_elliptic_series(int which, int order);

/// Generating function sum_{k>=0} P_{which,k-4} z^k from the recursion
/// table, trusted through exponent `order`.
SeriesC generating_function(int which, int order);

/// Residual of the defining first-order ODE:
///   (z^5 - 2cz^3 + z) P' - (3z^4 - 4cz^2 + 1) P - rhs(which)
/// where rhs(-1) = 2z^3, rhs(-2) = z^2, rhs(-3) = 2cz^3,
/// rhs(-4) = 4cz^2 - 1. Zero to the trusted order for the true series.
SeriesC ode_residual(const SeriesC& series, int which);

}  // namespace djkm
