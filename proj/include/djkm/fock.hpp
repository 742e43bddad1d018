#pragma once

#include <compare>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "djkm/rational.hpp"
#include "djkm/report.hpp"

namespace djkm {

/// Polynomial variable families of the two Fock factors: x/x1 carry the
/// oscillator pair, y/y1 the Heisenberg pair. x-indices range over Z,
/// y-indices are negative.
enum class VarFamily : int { X = 0, X1 = 1, Y = 2, Y1 = 3 };

/// Variable id ordered by (family, index).
struct VarId {
  VarFamily family = VarFamily::X;
  int index = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;

  std::string to_string() const {
    static const char* names[4] = {"x", "x1", "y", "y1"};
    return std::string(names[static_cast<int>(family)]) + "[" +
           std::to_string(index) + "]";
  }
};

/// Monomial in the polynomial Fock space tensored with the two-dimensional
/// space V = span{v0, v1}: sorted variable/exponent list plus the V index.
struct Monomial {
  std::vector<std::pair<VarId, int>> vars;  // sorted, exponents > 0
  int v = 0;                                // 0 or 1

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  int degree() const {
    int d = 0;
    for (const auto& [var, e] : vars) d += e;
    return d;
  }

  /// Total index weight sum |index| * exponent (each mode G_n shifts it by
  /// -n up to the documented offsets).
  int weight() const {
    int w = 0;
    for (const auto& [var, e] : vars) w += std::abs(var.index) * e;
    return w;
  }

  std::string to_string() const;
};

/// Finite rational combination of monomials.
class FockState {
 public:
  FockState() = default;

  static FockState vacuum(int v = 0) {
    Monomial m;
    m.v = v;
    return single(m);
  }
  static FockState single(Monomial m, Rational coefficient = Rational(1)) {
    FockState s;
    s.add(std::move(m), coefficient);
    return s;
  }

  void add(Monomial m, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(std::move(m), coefficient);
    if (!fresh) {
      it->second += coefficient;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<Monomial, Rational>& terms() const { return t_; }

  FockState operator-() const {
    FockState r;
    for (const auto& [m, v] : t_) r.t_.emplace(m, -v);
    return r;
  }
  FockState& operator+=(const FockState& o) {
    for (const auto& [m, v] : o.t_) add(m, v);
    return *this;
  }
  FockState& operator-=(const FockState& o) {
    for (const auto& [m, v] : o.t_) add(m, -v);
    return *this;
  }
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend bool operator==(const FockState& a, const FockState& b) {
    return a.t_ == b.t_;
  }

  FockState scaled(const Rational& s) const {
    FockState r;
    if (s.is_zero()) return r;
    for (const auto& [m, v] : t_) r.t_.emplace(m, v * s);
    return r;
  }

  /// Multiplication by one variable.
  FockState multiplied_by(const VarId& var) const;
  /// Partial derivative in one variable.
  FockState differentiated_by(const VarId& var) const;
  /// Applies the 2x2 matrix ((m00, m01), (m10, m11)) to the V factor, where
  /// column j lists the image coefficients of v_j.
  FockState v_transformed(const Rational& m00, const Rational& m10,
                          const Rational& m01, const Rational& m11) const;

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> t_;
};

/// Convention toggles, fixed once per run. The alternate settings exist to
/// show the verification discriminates: each one fails a pinned check.
struct Conventions {
  /// Standard: the sign-repaired Heisenberg action (satisfies the pinned
  /// bracket relations). Alternate: the uncorrected variant.
  bool heisenberg_standard_signs = true;
  /// Standard: negative odd Psi indices read the family at |k|-4.
  /// Alternate: literal out-of-domain read, yielding zero.
  bool psi_standard_index = true;
  /// Standard: the alpha1 alpha* alpha* cubic is normal-ordered. Alternate:
  /// factors applied in written order (provably identical, and checked so).
  bool e1_normal_ordered = true;
};

/// Parameters of one realization run: ring parameter c0 (c0^2 != 1),
/// normal-ordering flavor r (0 usual, 1 natural), Heisenberg central value
/// kappa0, and the Borel data (lambda, mu, nu, varkappa) of the b/b1
/// zero-mode action.
struct RealizationParams {
  Rational c0;
  int r = 0;
  Rational kappa0;
  Rational lambda, mu, nu, varkappa;
  Conventions conventions;

  RealizationParams(Rational c0_in, int r_in, Rational kappa0_in,
                    Rational lambda_in = Rational(0),
                    Rational mu_in = Rational(0),
                    Rational nu_in = Rational(0),
                    Rational varkappa_in = Rational(0))
      : c0(std::move(c0_in)),
        r(r_in),
        kappa0(std::move(kappa0_in)),
        lambda(std::move(lambda_in)),
        mu(std::move(mu_in)),
        nu(std::move(nu_in)),
        varkappa(std::move(varkappa_in)) {
    if (c0 * c0 == Rational(1)) {
      throw InvalidParameter("c0 = +-1 degenerates the ring");
    }
    if (r != 0 && r != 1) throw InvalidParameter("r must be 0 or 1");
  }

  /// Value the loop central class w0 acts by: kappa0 + 4 delta_{r,0}.
  Rational chi0() const {
    return r == 0 ? kappa0 + Rational(4) : kappa0;
  }
};

/// Mode operator label: oscillator families a, a*, a1, a1* and Heisenberg
/// families b, b1, with an integer mode index.
enum class OscGen : int { A = 0, AStar = 1, A1 = 2, A1Star = 3, B = 4, B1 = 5 };

struct ModeKey {
  OscGen gen = OscGen::A;
  int n = 0;

  friend auto operator<=>(const ModeKey&, const ModeKey&) = default;

  std::string to_string() const {
    static const char* names[6] = {"a", "a*", "a1", "a1*", "b", "b1"};
    return std::string(names[static_cast<int>(gen)]) + "(" +
           std::to_string(n) + ")";
  }
};

/// Oscillator action (families a, a*, a1, a1* only):
///   r = 0: a_n = d/dx_n (n >= 0) or x_n (n < 0);
///          a*_n = x_{-n} (n <= 0) or -d/dx_{-n} (n > 0)
///   r = 1: a_n = x_n; a*_n = -d/dx_{-n}
/// and the same on the x1 family. Throws WrongFamily for b/b1 modes.
FockState apply_oscillator(const ModeKey& mode, const FockState& s,
                           const RealizationParams& params);

/// Heisenberg action (families b, b1 only):
///   b_n  = y_n (n < 0); lambda (n = 0); -2n kappa0 d/dy_{-n} (n > 0)
///   b1_n = y1_n - delta_{n,-1} kappa0 d/dy1_{-3}
///               + delta_{n,-3} kappa0 d/dy1_{-1}            (n < 0)
///   b1_0 = -4 kappa0 d/dy1_{-4} + 4 c0 kappa0 d/dy1_{-2} + B
///          with B v0 = mu v0 + nu v1, B v1 = varkappa v0 + mu v1
///   b1_n = -2(n+2) kappa0 d/dy1_{-n-4} + 4c0(n+1) kappa0 d/dy1_{-n-2}
///          - 2n kappa0 d/dy1_{-n}                           (n > 0)
/// Under the alternate sign convention the three corrections flip and the
/// n >= 0 rows take their uncorrected values. Throws WrongFamily otherwise.
FockState apply_heisenberg(const ModeKey& mode, const FockState& s,
                           const RealizationParams& params);

/// Dispatch by family.
FockState apply_mode(const ModeKey& mode, const FockState& s,
                     const RealizationParams& params);

/// True when the mode lands on the creation side of the normal ordering:
/// r = 0: a/a1 for n < 0, a*/a1* for n <= 0; r = 1: a/a1 always, a*/a1*
/// never; b/b1 for n < 0 in both flavors.
bool is_creation(const ModeKey& mode, int r);

/// Checks the canonical commutation relations [c_m, c*_n] = delta_{m+n,0},
/// with all same-kind and cross-family brackets zero, for |m|, |n| <=
/// window, on each test state.
Report oscillator_ccr_check(int window, const std::vector<FockState>& states,
                            const RealizationParams& params);

/// Checks on each test state, at one mode pair (m, n):
///   [b_m, b_n]   = -2m delta_{m+n,0} kappa0
///   [b1_m, b1_n] = 2((n+2) d_{m+n,-4} - 2c0(n+1) d_{m+n,-2}
///                  + n d_{m+n,0}) kappa0
///   [b_m, b1_n] = [b1_m, b_n] = 0
Report heisenberg_relation_check(int m, int n,
                                 const std::vector<FockState>& states,
                                 const RealizationParams& params);

}  // namespace djkm
