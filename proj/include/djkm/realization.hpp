#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "djkm/algebra.hpp"
#include "djkm/fock.hpp"
#include "djkm/laurent_poly.hpp"

namespace djkm {

/// The six current generators the free-field map covers; parity-1 names
/// carry the u factor.
enum class GenId : int { E = 0, F = 1, H = 2, E1 = 3, F1 = 4, H1 = 5 };

inline BasisKey basis_key(GenId g, int n) {
  static constexpr Gen kGen[6] = {Gen::E, Gen::F, Gen::H,
                                  Gen::E, Gen::F, Gen::H};
  return BasisKey::current(kGen[static_cast<int>(g)],
                           static_cast<int>(g) >= 3 ? 1 : 0, n);
}

const char* gen_name(GenId g);
GenId parse_gen(const std::string& name);

/// Formal field expression: generators alpha(z).., normal-ordered products,
/// z-derivatives, Laurent-polynomial multipliers, sums, scalar multiples.
struct FieldExpr {
  enum class Node : int { Gen, NormProd, Deriv, PolyMul, Sum, ScalarMul };

  Node node = Node::Gen;
  OscGen gen = OscGen::A;            // Gen
  bool normal_ordered = true;        // NormProd: false applies factors as
                                     // written (pairwise-commuting only)
  Rational scalar;                   // ScalarMul
  LaurentPoly<Rational> poly;        // PolyMul
  std::vector<FieldExpr> kids;

  static FieldExpr generator(OscGen g) {
    FieldExpr e;
    e.gen = g;
    return e;
  }
  static FieldExpr product(std::vector<FieldExpr> kids,
                           bool normal_ordered = true) {
    FieldExpr e;
    e.node = Node::NormProd;
    e.normal_ordered = normal_ordered;
    e.kids = std::move(kids);
    return e;
  }
  static FieldExpr derivative(FieldExpr inner) {
    FieldExpr e;
    e.node = Node::Deriv;
    e.kids.push_back(std::move(inner));
    return e;
  }
  static FieldExpr poly_mul(LaurentPoly<Rational> p, FieldExpr inner) {
    FieldExpr e;
    e.node = Node::PolyMul;
    e.poly = std::move(p);
    e.kids.push_back(std::move(inner));
    return e;
  }
  static FieldExpr sum(std::vector<FieldExpr> kids) {
    FieldExpr e;
    e.node = Node::Sum;
    e.kids = std::move(kids);
    return e;
  }
  static FieldExpr scaled(Rational s, FieldExpr inner) {
    FieldExpr e;
    e.node = Node::ScalarMul;
    e.scalar = std::move(s);
    e.kids.push_back(std::move(inner));
    return e;
  }
};

/// One mode of a field expression: the coefficient of z^(-m-1) with every
/// generator weighted by 1 (alpha, alpha1, beta, beta1) or 0 (the starred
/// pair).
struct ModeOperator {
  FieldExpr field;
  int m = 0;
};

/// A primitive factor of a flattened product: d-fold z-derivative of one
/// generator field.
struct FlatFactor {
  OscGen gen = OscGen::A;
  int deriv = 0;
};

/// scalar * z^zshift * (normal-ordered) product of primitive factors.
struct FlatTerm {
  Rational scalar;
  int zshift = 0;
  std::vector<FlatFactor> factors;
  bool normal_ordered = true;
};

/// Expands sums, scalar and polynomial multipliers, and derivatives (by the
/// product rule) into a list of primitive terms.
std::vector<FlatTerm> flatten(const FieldExpr& expr);

/// Enumeration stress knob: 0 reproduces the exact candidate windows; w > 0
/// widens every derived window (creation boxes are doubled and stretched by
/// w, pinned candidate hulls and half-line bounds stretch by w) and
/// deduplicates tuples, so any contribution dropped at a window edge would
/// change the result.
struct EnumerationOptions {
  int widen = 0;
};

/// Applies the given modes as one product. With normal_ordered, creation
/// modes (is_creation) move left, annihilation-side modes right, each block
/// keeping its written order; the rightmost operator acts first. With
/// normal_ordered = false the factors apply exactly as written, which is
/// only legal when all factors pairwise commute.
FockState normal_order_apply(const std::vector<ModeKey>& modes,
                             const FockState& s,
                             const RealizationParams& params,
                             bool normal_ordered = true);

/// Extracts the mode: sum over all index tuples (n_1..n_k) with
/// sum(n_i + weight_i + deriv_i) = m + 1 + zshift of the normal-ordered
/// factor product applied to s. The candidate indices per factor are finite
/// because annihilation branches are pinned to the variables present in s
/// and creation branches are bounded half-lines resolved against the fixed
/// total.
FockState mode_apply(const FieldExpr& expr, int m, const FockState& s,
                     const RealizationParams& params,
                     const EnumerationOptions& opts = {});

inline FockState mode_apply(const ModeOperator& op, const FockState& s,
                            const RealizationParams& params,
                            const EnumerationOptions& opts = {}) {
  return mode_apply(op.field, op.m, s, params, opts);
}

/// The free-field image of one generator, with P(z) = z^4 - 2 c0 z^2 + 1
/// and chi0 = kappa0 + 4 delta_{r,0}:
///   tau(f)  = -alpha           tau(f1) = -alpha1
///   tau(h)  = 2(:alpha alpha*: + :alpha1 alpha1*:) + beta
///   tau(h1) = 2:alpha1 alpha*: + 2P :alpha alpha1*: + beta1
///   tau(e)  = :alpha alpha* alpha*: + P :alpha alpha1* alpha1*:
///             + 2:alpha1 alpha* alpha1*: + :beta alpha*: + :beta1 alpha1*:
///             + chi0 d(alpha*)
///   tau(e1) = :alpha1 alpha* alpha*: + P :alpha1 alpha1* alpha1*:
///             + 2P :alpha alpha* alpha1*: + :beta1 alpha*: + P :beta alpha1*:
///             + chi0 (P d(alpha1*) + P'/2 alpha1*)
/// The first tau(e1) cubic follows the e1_normal_ordered convention toggle;
/// its factors pairwise commute, so both readings agree (and are checked to).
FieldExpr tau_field(GenId g, const RealizationParams& params);

/// Caches the flattened tau fields for one parameter set.
class Realizer {
 public:
  explicit Realizer(RealizationParams params);

  const RealizationParams& params() const { return params_; }

  FockState apply(GenId g, int m, const FockState& s,
                  const EnumerationOptions& opts = {}) const;

  /// tau of a general element: currents through apply(), the central w:0 by
  /// the scalar chi0, the four w:-k by zero.
  FockState apply_element(const AlgebraElement<Rational>& element,
                          const FockState& s,
                          const EnumerationOptions& opts = {}) const;

 private:
  RealizationParams params_;
  std::array<std::vector<FlatTerm>, 6> flat_;
};

/// tau(x_m) tau(y_n) s - tau(y_n) tau(x_m) s - tau([x_m, y_n]) s; zero
/// exactly when the realization respects this bracket on s.
FockState check_commutator(GenId x, int m, GenId y, int n, const FockState& s,
                           const Realizer& realizer,
                           BracketContext<Rational>& ctx,
                           const EnumerationOptions& opts = {});

struct RealizationCheckConfig {
  int window = 4;
  std::vector<FockState> states;
  std::vector<RealizationParams> params;
  int workers = 1;
  EnumerationOptions enumeration;
};

/// check_commutator over all 21 unordered generator pairs, all mode pairs
/// |m|, |n| <= window, all states, all parameter sets.
Report verify_realization(const RealizationCheckConfig& config);

/// The five standard test states: vacuum x v0, vacuum x v1, x[-1] v0,
/// x1[0] y[-2] v1, and a seed-determined degree-3 monomial.
std::vector<FockState> default_state_suite(uint64_t seed);

/// Deterministic generator stream used for the seeded monomial and the
/// sampled soundness checks.
uint64_t splitmix64(uint64_t& state);

/// Samples (generator, mode, state, params) cases and recomputes each mode
/// application with widened enumeration windows; any difference is a
/// failure.
Report verify_enumeration_soundness(int samples, uint64_t seed, int mode_range,
                                    const std::vector<FockState>& states,
                                    const std::vector<RealizationParams>& params,
                                    int widen = 2);

}  // namespace djkm
