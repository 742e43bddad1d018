#include "djkm/ring.hpp"

#include <algorithm>
#include <cstdlib>

namespace djkm {

CentralElement<PolyC> psi_table(int k, bool standard_index) {
  using CE = CentralElement<PolyC>;
  if (k >= -4 && k <= -1) return CE::omega(k);
  if (k >= 0) {
    if (k % 2 == 0) {
      FamilyTable p4 = family_by_recursion(-4, k);
      FamilyTable p2 = family_by_recursion(-2, k);
      return CE::omega(-4, p4.entry(k)) + CE::omega(-2, p2.entry(k));
    }
    FamilyTable p3 = family_by_recursion(-3, k);
    return CE::omega(-3, p3.entry(k)) +
           CE::omega(-1, PolyC::variable() * p3.entry(k));
  }
  // k <= -5: the reduction runs upward; the same recursion applies to
  // Psi(-m-4) with the roles of w(-3)/w(-1) exchanged.
  int m = -k - 4;
  if (k % 2 == 0) {
    FamilyTable p4 = family_by_recursion(-4, m);
    FamilyTable p2 = family_by_recursion(-2, m);
    return CE::omega(-4, p4.entry(m)) + CE::omega(-2, p2.entry(m));
  }
  if (!standard_index) {
    // Index read literally at k: out of the family domain, hence zero.
    return CE();
  }
  FamilyTable p3 = family_by_recursion(-3, m);
  return CE::omega(-3, PolyC::variable() * p3.entry(m)) +
         CE::omega(-1, p3.entry(m));
}

int quasi_graded_bound(int window) {
  const PolyC c = PolyC::variable();
  int bound = 0;
  auto doubled_degree = [](int e, bool odd) { return 2 * e + (odd ? 1 : 0); };
  for (int i = -window; i <= window; ++i) {
    for (bool iu : {false, true}) {
      RingElement<PolyC> a =
          iu ? RingElement<PolyC>::t_power_u(i) : RingElement<PolyC>::t_power(i);
      for (int j = -window; j <= window; ++j) {
        for (bool ju : {false, true}) {
          RingElement<PolyC> b = ju ? RingElement<PolyC>::t_power_u(j)
                                    : RingElement<PolyC>::t_power(j);
          int sum = doubled_degree(i, iu) + doubled_degree(j, ju);
          for (int d : degree_support(ring_mul(a, b, c))) {
            bound = std::max(bound, std::abs(d - sum));
          }
        }
      }
    }
  }
  return bound;
}

}  // namespace djkm
