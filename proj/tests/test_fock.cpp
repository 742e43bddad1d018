#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "djkm/fock.hpp"

using namespace djkm;

namespace {

const VarId x0{VarFamily::X, 0};
const VarId xm1{VarFamily::X, -1};
const VarId x1m2{VarFamily::X1, -2};
const VarId ym2{VarFamily::Y, -2};
const VarId y1m1{VarFamily::Y1, -1};
const VarId y1m3{VarFamily::Y1, -3};

RealizationParams params_r0() {
  return RealizationParams(Rational(2), 0, Rational(3), Rational(5),
                           Rational(1), Rational(2), Rational(3));
}

RealizationParams params_r1() {
  return RealizationParams(Rational(2), 1, Rational(3), Rational(5),
                           Rational(1), Rational(2), Rational(3));
}

std::vector<FockState> small_states() {
  return {FockState::vacuum(0), FockState::vacuum(1),
          FockState::vacuum(0).multiplied_by(xm1).multiplied_by(ym2),
          FockState::vacuum(1)
              .multiplied_by(x1m2)
              .multiplied_by(y1m1)
              .multiplied_by(y1m3),
          FockState::vacuum(0).multiplied_by(x0).multiplied_by(
              {VarFamily::Y1, -2})};
}

FockState commutator(const ModeKey& p, const ModeKey& q, const FockState& s,
                     const RealizationParams& params) {
  return apply_mode(p, apply_mode(q, s, params), params) -
         apply_mode(q, apply_mode(p, s, params), params);
}

}  // namespace

TEST_CASE("state algebra basics") {
  FockState v = FockState::vacuum(0);
  FockState s = v.multiplied_by(xm1).scaled(Rational(3));
  CHECK(s.to_string() == "(3) x[-1] v0");
  CHECK((s - s).is_zero());
  CHECK(s.differentiated_by(xm1) == v.scaled(Rational(3)));
  CHECK(s.differentiated_by(x0).is_zero());
  FockState sq = v.multiplied_by(xm1).multiplied_by(xm1);
  CHECK(sq.differentiated_by(xm1) == v.multiplied_by(xm1).scaled(Rational(2)));

  // v-plane transform: v0 -> m00 v0 + m10 v1, v1 -> m01 v0 + m11 v1.
  FockState w = FockState::vacuum(1).v_transformed(
      Rational(1), Rational(2), Rational(3), Rational(4));
  CHECK(w == FockState::vacuum(0).scaled(Rational(3)) +
                 FockState::vacuum(1).scaled(Rational(4)));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(RealizationParams(Rational(1), 0, Rational(1)),
                  InvalidParameter);
  CHECK_THROWS_AS(RealizationParams(Rational(-1), 0, Rational(1)),
                  InvalidParameter);
  CHECK_THROWS_AS(RealizationParams(Rational(2), 2, Rational(1)),
                  InvalidParameter);
  CHECK(params_r0().chi0() == Rational(7));
  CHECK(params_r1().chi0() == Rational(3));
}

TEST_CASE("oscillator actions, usual flavor") {
  auto p = params_r0();
  FockState v = FockState::vacuum(0);
  // Annihilation on vacuum.
  for (int n = 0; n <= 3; ++n) {
    CHECK(apply_oscillator({OscGen::A, n}, v, p).is_zero());
    CHECK(apply_oscillator({OscGen::A1, n}, v, p).is_zero());
  }
  for (int n = 1; n <= 3; ++n) {
    CHECK(apply_oscillator({OscGen::AStar, n}, v, p).is_zero());
    CHECK(apply_oscillator({OscGen::A1Star, n}, v, p).is_zero());
  }
  // Creation.
  CHECK(apply_oscillator({OscGen::A, -1}, v, p) == v.multiplied_by(xm1));
  CHECK(apply_oscillator({OscGen::AStar, 0}, v, p) == v.multiplied_by(x0));
  CHECK(apply_oscillator({OscGen::AStar, -2}, v, p) ==
        v.multiplied_by({VarFamily::X, 2}));
  // a*_n = -d/dx_{-n} for n > 0.
  FockState s = v.multiplied_by(xm1);
  CHECK(apply_oscillator({OscGen::AStar, 1}, s, p) == -v);
  CHECK_THROWS_AS(apply_oscillator({OscGen::B, 0}, v, p), WrongFamily);
}

TEST_CASE("oscillator actions, natural flavor") {
  auto p = params_r1();
  FockState v = FockState::vacuum(0);
  // a_n always multiplies.
  CHECK(apply_oscillator({OscGen::A, 2}, v, p) ==
        v.multiplied_by({VarFamily::X, 2}));
  CHECK(apply_oscillator({OscGen::A, -2}, v, p) ==
        v.multiplied_by({VarFamily::X, -2}));
  // a*_n always differentiates: zero on vacuum.
  for (int n = -2; n <= 2; ++n) {
    CHECK(apply_oscillator({OscGen::AStar, n}, v, p).is_zero());
  }
  FockState s = v.multiplied_by(xm1);
  CHECK(apply_oscillator({OscGen::AStar, 1}, s, p) == -v);
}

TEST_CASE("canonical commutation relations hold on a state battery") {
  for (const auto& p : {params_r0(), params_r1()}) {
    Report rep = oscillator_ccr_check(4, small_states(), p);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
  }
}

TEST_CASE("normal ordering side classification") {
  // r = 0
  CHECK(is_creation({OscGen::A, -1}, 0));
  CHECK(!is_creation({OscGen::A, 0}, 0));
  CHECK(is_creation({OscGen::AStar, 0}, 0));
  CHECK(!is_creation({OscGen::AStar, 1}, 0));
  // r = 1
  CHECK(is_creation({OscGen::A, 5}, 1));
  CHECK(!is_creation({OscGen::AStar, -5}, 1));
  // b families agree in both flavors
  for (int r : {0, 1}) {
    CHECK(is_creation({OscGen::B, -1}, r));
    CHECK(!is_creation({OscGen::B, 0}, r));
    CHECK(!is_creation({OscGen::B1, 2}, r));
  }
}

TEST_CASE("heisenberg spot actions") {
  auto p = params_r0();
  const Rational k = p.kappa0;
  FockState v0 = FockState::vacuum(0);
  FockState v1 = FockState::vacuum(1);

  CHECK(apply_heisenberg({OscGen::B, 0}, v0, p) == v0.scaled(p.lambda));
  CHECK(apply_heisenberg({OscGen::B, 1}, v0, p).is_zero());
  CHECK(apply_heisenberg({OscGen::B, -2}, v0, p) == v0.multiplied_by(ym2));
  // b_2 on y_{-2}|0> = -4 kappa0 |0>.
  CHECK(apply_heisenberg({OscGen::B, 2}, v0.multiplied_by(ym2), p) ==
        v0.scaled(Rational(-4) * k));

  // b1_0 acts on the v-plane by the Borel matrix plus derivative terms.
  CHECK(apply_heisenberg({OscGen::B1, 0}, v0, p) ==
        v0.scaled(p.mu) + v1.scaled(p.nu));
  CHECK(apply_heisenberg({OscGen::B1, 0}, v1, p) ==
        v0.scaled(p.varkappa) + v1.scaled(p.mu));

  // b1_{-1} = y1_{-1} - kappa0 d/dy1_{-3}.
  FockState s = v0.multiplied_by(y1m3);
  CHECK(apply_heisenberg({OscGen::B1, -1}, s, p) ==
        s.multiplied_by(y1m1) - v0.scaled(k));
  CHECK_THROWS_AS(apply_heisenberg({OscGen::A, 0}, v0, p), WrongFamily);
}

TEST_CASE("heisenberg bracket spot values") {
  auto p = params_r0();
  const Rational k = p.kappa0;
  FockState v0 = FockState::vacuum(0);
  // [b1_{-1}, b1_{-3}] = 2(n+2) kappa0 at m+n = -4 with n = -3: -2 kappa0.
  CHECK(commutator({OscGen::B1, -1}, {OscGen::B1, -3}, v0, p) ==
        v0.scaled(Rational(-2) * k));
  // [b1_2, b1_{-4}] = -4c(n+1) kappa0 at m+n = -2 with n = -4: 12 c kappa0.
  CHECK(commutator({OscGen::B1, 2}, {OscGen::B1, -4}, v0, p) ==
        v0.scaled(Rational(12) * p.c0 * k));
  // [b_m, b_{-m}] = -2m kappa0.
  CHECK(commutator({OscGen::B, 3}, {OscGen::B, -3}, v0, p) ==
        v0.scaled(Rational(-6) * k));
  // b and b1 commute.
  CHECK(commutator({OscGen::B, 2}, {OscGen::B1, -2}, v0, p).is_zero());
}

TEST_CASE("heisenberg relations sweep") {
  auto states = small_states();
  for (const auto& p : {params_r0(), params_r1()}) {
    for (int m = -5; m <= 5; ++m) {
      for (int n = -5; n <= 5; ++n) {
        Report rep = heisenberg_relation_check(m, n, states, p);
        CHECK(rep.ok());
      }
    }
  }
}

TEST_CASE("alternate sign convention fails the pinned relations") {
  auto p = params_r0();
  p.conventions.heisenberg_standard_signs = false;
  FockState v0 = FockState::vacuum(0);
  // The corrected relation demands -2 kappa0; the uncorrected signs give +2.
  CHECK(commutator({OscGen::B1, -1}, {OscGen::B1, -3}, v0, p) ==
        v0.scaled(Rational(2) * p.kappa0));
  bool some_failed = false;
  for (int m = -4; m <= 4 && !some_failed; ++m) {
    for (int n = -4; n <= 4 && !some_failed; ++n) {
      Report rep = heisenberg_relation_check(m, n, {v0}, p);
      some_failed = !rep.ok();
    }
  }
  CHECK(some_failed);
}

TEST_CASE("oscillator modes are weight homogeneous") {
  auto p = params_r0();
  FockState s = FockState::vacuum(0)
                    .multiplied_by(xm1)
                    .multiplied_by({VarFamily::X, 2})
                    .multiplied_by(x1m2);
  for (int n = -3; n <= 3; ++n) {
    for (OscGen g : {OscGen::A, OscGen::AStar, OscGen::A1, OscGen::A1Star}) {
      FockState out = apply_mode({g, n}, s, p);
      for (const auto& [mono, coeff] : out.terms()) {
        CHECK(mono.weight() == 3 + 2 - n);
      }
    }
  }
}
