#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "djkm/realization.hpp"

using namespace djkm;

namespace {

RealizationParams base_params(int r = 0) {
  return RealizationParams(Rational(2), r, Rational(3), Rational(5),
                           Rational(1), Rational(2), Rational(3));
}

FockState mono(int v, std::vector<VarId> vars) {
  FockState s = FockState::vacuum(v);
  for (const VarId& var : vars) s = s.multiplied_by(var);
  return s;
}

const VarId x(int n) { return {VarFamily::X, n}; }
const VarId x1(int n) { return {VarFamily::X1, n}; }
const VarId y(int n) { return {VarFamily::Y, n}; }
const VarId y1(int n) { return {VarFamily::Y1, n}; }

}  // namespace

TEST_CASE("generator names round-trip") {
  for (int i = 0; i < 6; ++i) {
    GenId g = static_cast<GenId>(i);
    CHECK(parse_gen(gen_name(g)) == g);
  }
  CHECK_THROWS_AS(parse_gen("z"), ParseError);
  CHECK(basis_key(GenId::E1, -2) == BasisKey::current(Gen::E, 1, -2));
  CHECK(basis_key(GenId::H, 3) == BasisKey::current(Gen::H, 0, 3));
}

TEST_CASE("flatten expands derivative and polynomial nodes") {
  using FE = FieldExpr;
  LaurentPoly<Rational> p;
  p.add(2, Rational(3));
  FE expr = FE::derivative(FE::poly_mul(p, FE::generator(OscGen::AStar)));
  auto terms = flatten(expr);
  // d/dz (3 z^2 a*) = 6 z a* + 3 z^2 d(a*)
  REQUIRE(terms.size() == 2);
  bool saw_shift1 = false, saw_deriv = false;
  for (const auto& t : terms) {
    if (t.zshift == 1) {
      saw_shift1 = t.scalar == Rational(6) && t.factors.size() == 1 &&
                   t.factors[0].deriv == 0;
    }
    if (t.zshift == 2) {
      saw_deriv = t.scalar == Rational(3) && t.factors.size() == 1 &&
                  t.factors[0].deriv == 1;
    }
  }
  CHECK(saw_shift1);
  CHECK(saw_deriv);
}

TEST_CASE("mode extraction contract examples") {
  auto p = base_params();
  FockState v0 = FockState::vacuum(0);
  using FE = FieldExpr;

  // :alpha alpha*: at mode -1 on vacuum: the single tuple (-1, 0).
  FE bil = FE::product({FE::generator(OscGen::A), FE::generator(OscGen::AStar)});
  CHECK(mode_apply(bil, -1, v0, p) == mono(0, {x(-1), x(0)}));
  // Mode 0 annihilates.
  CHECK(mode_apply(bil, 0, v0, p).is_zero());

  // beta at mode 0 is the lambda scalar.
  CHECK(mode_apply(FE::generator(OscGen::B), 0, v0, p) ==
        v0.scaled(p.lambda));

  // tau(f) at mode -1 creates -x[-1].
  CHECK(mode_apply(tau_field(GenId::F, p), -1, v0, p) ==
        mono(0, {x(-1)}).scaled(Rational(-1)));
}

TEST_CASE("tau spot values on the vacuum") {
  auto p = base_params();
  FockState v0 = FockState::vacuum(0);
  Realizer R(p);

  CHECK(R.apply(GenId::H, 0, v0) == v0.scaled(p.lambda));
  CHECK(R.apply(GenId::F, 2, v0).is_zero());

  FockState h_m2 = mono(0, {x(-2), x(0)}).scaled(Rational(2)) +
                   mono(0, {x(-1), x(1)}).scaled(Rational(2)) +
                   mono(0, {x1(-2), x1(0)}).scaled(Rational(2)) +
                   mono(0, {x1(-1), x1(1)}).scaled(Rational(2)) +
                   mono(0, {y(-2)});
  CHECK(R.apply(GenId::H, -2, v0) == h_m2);

  // At mode 0 the creation boxes for the cubics are empty and the zero modes
  // of beta/beta1 pair with a*(0)/a1*(0): only the Borel data survives.
  FockState e_0 = mono(0, {x(0)}).scaled(p.lambda) +
                  mono(0, {x1(0)}).scaled(p.mu) +
                  mono(1, {x1(0)}).scaled(p.nu);
  CHECK(R.apply(GenId::E, 0, v0) == e_0);
}

TEST_CASE("pinned tau(e) at mode -2 exercises every term shape") {
  auto p = base_params();
  const Rational chi = p.chi0();
  Realizer R(p);
  FockState expect =
      mono(0, {x(-2), x(0), x(0)}) +
      mono(0, {x(-1), x(0), x(1)}).scaled(Rational(2)) +
      mono(0, {x(-2), x1(0), x1(0)}) +
      mono(0, {x(-1), x1(0), x1(1)}).scaled(Rational(2)) +
      mono(0, {x1(-2), x(0), x1(0)}).scaled(Rational(2)) +
      mono(0, {x1(-1), x(1), x1(0)}).scaled(Rational(2)) +
      mono(0, {x1(-1), x(0), x1(1)}).scaled(Rational(2)) +
      mono(0, {x(2)}).scaled(p.lambda + chi * Rational(2)) +
      mono(0, {y(-2), x(0)}) + mono(0, {y(-1), x(1)}) +
      mono(0, {x1(2)}).scaled(p.mu) + mono(0, {y1(-1), x1(1)}) +
      mono(0, {y1(-2), x1(0)}) + mono(1, {x1(2)}).scaled(p.nu);
  CHECK(R.apply(GenId::E, -2, FockState::vacuum(0)) == expect);
}

TEST_CASE("natural flavor spot values") {
  auto p = base_params(1);
  FockState v0 = FockState::vacuum(0);
  Realizer R(p);
  // tau(f)_m = -x_m for every m.
  CHECK(R.apply(GenId::F, 2, v0) == mono(0, {x(2)}).scaled(Rational(-1)));
  CHECK(R.apply(GenId::F, 0, v0) == mono(0, {x(0)}).scaled(Rational(-1)));
  // tau(h)_0 on the vacuum is still the beta zero mode.
  CHECK(R.apply(GenId::H, 0, v0) == v0.scaled(p.lambda));
}

TEST_CASE("central action and linearity of apply_element") {
  auto p = base_params();
  Realizer R(p);
  FockState s = mono(0, {x(-1)});
  AlgebraElement<Rational> elem;
  elem.add(BasisKey::central(0), Rational(3));
  elem.add(BasisKey::central(-2), Rational(100));
  CHECK(R.apply_element(elem, s) == s.scaled(Rational(3) * p.chi0()));

  AlgebraElement<Rational> mix;
  mix.add(basis_key(GenId::F, -1), Rational(2));
  mix.add(BasisKey::central(0), Rational(1));
  CHECK(R.apply_element(mix, s) ==
        R.apply(GenId::F, -1, s).scaled(Rational(2)) + s.scaled(p.chi0()));
}

TEST_CASE("commutator with the central correction") {
  auto p = base_params();
  Realizer R(p);
  BracketContext<Rational> ctx(p.c0);
  FockState s = mono(0, {x(-1)});
  // [tau(h)_1, tau(h)_{-1}] = -2 chi0 by the torus cocycle.
  FockState direct = R.apply(GenId::H, 1, R.apply(GenId::H, -1, s)) -
                     R.apply(GenId::H, -1, R.apply(GenId::H, 1, s));
  CHECK(direct == s.scaled(Rational(-2) * p.chi0()));
  CHECK(check_commutator(GenId::H, 1, GenId::H, -1, s, R, ctx).is_zero());
  CHECK(check_commutator(GenId::E, 1, GenId::F, -1, s, R, ctx).is_zero());
  CHECK(check_commutator(GenId::E1, 0, GenId::F1, -2, s, R, ctx).is_zero());
}

TEST_CASE("plain product reading of the first e1 cubic agrees") {
  auto p = base_params();
  auto q = base_params();
  q.conventions.e1_normal_ordered = false;
  Realizer rp(p), rq(q);
  for (const FockState& s :
       {FockState::vacuum(0), mono(0, {x(-1)}), mono(1, {x1(0), y(-2)})}) {
    for (int m = -3; m <= 3; ++m) {
      CHECK(rp.apply(GenId::E1, m, s) == rq.apply(GenId::E1, m, s));
    }
  }
}

TEST_CASE("plain products reject genuinely non-commuting factors") {
  auto p = base_params();
  CHECK_THROWS_AS(normal_order_apply({{OscGen::A, 0}, {OscGen::AStar, 0}},
                                     FockState::vacuum(0), p, false),
                  InvalidParameter);
  CHECK_THROWS_AS(normal_order_apply({{OscGen::B1, -1}, {OscGen::B1, -3}},
                                     FockState::vacuum(0), p, false),
                  InvalidParameter);
  // Commuting families pass through.
  CHECK(normal_order_apply({{OscGen::A1, -1}, {OscGen::AStar, 0}},
                           FockState::vacuum(0), p, false) ==
        mono(0, {x1(-1), x(0)}));
}

TEST_CASE("weight offsets by generator parity") {
  auto p = base_params();
  Realizer R(p);
  FockState s = mono(0, {x(-1), x(2), x1(-2)});
  const int w = 5;
  for (int gi = 0; gi < 6; ++gi) {
    GenId g = static_cast<GenId>(gi);
    bool plain = g == GenId::F || g == GenId::F1 || g == GenId::H;
    for (int m = -2; m <= 2; ++m) {
      FockState out = R.apply(g, m, s);
      for (const auto& [monom, coeff] : out.terms()) {
        int shift = monom.weight() - w;
        if (plain) {
          CHECK(shift == -m);
        } else {
          bool in_range = shift == -m || shift == -m - 2 || shift == -m - 4;
          CHECK(in_range);
        }
      }
    }
  }
}

TEST_CASE("default state suite shape") {
  auto states = default_state_suite(2026);
  REQUIRE(states.size() == 5);
  CHECK(states[0] == FockState::vacuum(0));
  CHECK(states[1] == FockState::vacuum(1));
  CHECK(states[2] == mono(0, {x(-1)}));
  CHECK(states[3] == mono(1, {x1(0), y(-2)}));
  // The seeded state is a single degree-3 monomial.
  CHECK(states[4].terms().size() == 1);
  CHECK(states[4].terms().begin()->first.degree() == 3);
  // Determinism.
  CHECK(default_state_suite(2026) == std::vector<FockState>(states));
  CHECK(default_state_suite(1) != default_state_suite(2));
}

TEST_CASE("small full sweep passes and is worker independent") {
  RealizationCheckConfig cfg;
  cfg.window = 2;
  cfg.states = {FockState::vacuum(0), FockState::vacuum(1), mono(0, {x(-1)})};
  cfg.params = {base_params(0), base_params(1)};
  cfg.workers = 3;
  Report rep = verify_realization(cfg);
  CHECK(rep.ok());
  CHECK(rep.checked == 21 * 25 * 3 * 2);

  cfg.workers = 1;
  cfg.window = 1;
  cfg.states = {mono(0, {x(-1)})};
  cfg.params = {base_params(0)};
  Report r1 = verify_realization(cfg);
  cfg.workers = 4;
  Report r4 = verify_realization(cfg);
  CHECK(r1.checked == r4.checked);
  CHECK(r1.failed == r4.failed);
  CHECK(r1.ok());
}

TEST_CASE("widened enumeration changes nothing") {
  auto p = base_params();
  Realizer R(p);
  for (const FockState& s : {FockState::vacuum(0), mono(0, {x(-1), y1(-2)})}) {
    for (int m = -2; m <= 2; ++m) {
      CHECK(R.apply(GenId::E, m, s) == R.apply(GenId::E, m, s, {3}));
      CHECK(R.apply(GenId::E1, m, s) == R.apply(GenId::E1, m, s, {3}));
    }
  }
  Report rep = verify_enumeration_soundness(40, 99, 3, default_state_suite(7),
                                            {base_params(0), base_params(1)});
  CHECK(rep.ok());
  CHECK(rep.checked == 40);
}
