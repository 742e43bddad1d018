#include "djkm/fock.hpp"

#include <algorithm>

namespace djkm {

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [var, e] : vars) {
    if (!s.empty()) s += " ";
    s += var.to_string();
    if (e > 1) s += "^" + std::to_string(e);
  }
  if (!s.empty()) s += " ";
  s += "v" + std::to_string(v);
  return s;
}

std::string FockState::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, coeff] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + coeff.to_string() + ") " + m.to_string();
  }
  return s;
}

FockState FockState::multiplied_by(const VarId& var) const {
  FockState r;
  for (const auto& [m, coeff] : t_) {
    Monomial out = m;
    auto it = std::lower_bound(
        out.vars.begin(), out.vars.end(), var,
        [](const auto& entry, const VarId& v) { return entry.first < v; });
    if (it != out.vars.end() && it->first == var) {
      ++it->second;
    } else {
      out.vars.insert(it, {var, 1});
    }
    r.add(std::move(out), coeff);
  }
  return r;
}

FockState FockState::differentiated_by(const VarId& var) const {
  FockState r;
  for (const auto& [m, coeff] : t_) {
    auto it = std::lower_bound(
        m.vars.begin(), m.vars.end(), var,
        [](const auto& entry, const VarId& v) { return entry.first < v; });
    if (it == m.vars.end() || it->first != var) continue;
    Monomial out = m;
    size_t pos = static_cast<size_t>(it - m.vars.begin());
    int e = out.vars[pos].second;
    if (e == 1) {
      out.vars.erase(out.vars.begin() + static_cast<long>(pos));
    } else {
      out.vars[pos].second = e - 1;
    }
    r.add(std::move(out), coeff * Rational(e));
  }
  return r;
}

FockState FockState::v_transformed(const Rational& m00, const Rational& m10,
                                   const Rational& m01,
                                   const Rational& m11) const {
  FockState r;
  for (const auto& [m, coeff] : t_) {
    Monomial to0 = m, to1 = m;
    to0.v = 0;
    to1.v = 1;
    if (m.v == 0) {
      r.add(std::move(to0), coeff * m00);
      r.add(std::move(to1), coeff * m10);
    } else {
      r.add(std::move(to0), coeff * m01);
      r.add(std::move(to1), coeff * m11);
    }
  }
  return r;
}

namespace {

FockState mult(const FockState& s, VarFamily fam, int index) {
  return s.multiplied_by({fam, index});
}

FockState deriv(const FockState& s, VarFamily fam, int index,
                const Rational& scale) {
  if (scale.is_zero()) return FockState();
  return s.differentiated_by({fam, index}).scaled(scale);
}

}  // namespace

FockState apply_oscillator(const ModeKey& mode, const FockState& s,
                           const RealizationParams& params) {
  const int n = mode.n;
  VarFamily fam;
  bool starred;
  switch (mode.gen) {
    case OscGen::A: fam = VarFamily::X; starred = false; break;
    case OscGen::AStar: fam = VarFamily::X; starred = true; break;
    case OscGen::A1: fam = VarFamily::X1; starred = false; break;
    case OscGen::A1Star: fam = VarFamily::X1; starred = true; break;
    default:
      throw WrongFamily("apply_oscillator needs an a-family mode, got " +
                        mode.to_string());
  }
  if (!starred) {
    if (params.r == 1 || n < 0) return mult(s, fam, n);
    return deriv(s, fam, n, Rational(1));
  }
  if (params.r == 0 && n <= 0) return mult(s, fam, -n);
  return deriv(s, fam, -n, Rational(-1));
}

FockState apply_heisenberg(const ModeKey& mode, const FockState& s,
                           const RealizationParams& params) {
  const int n = mode.n;
  const Rational& kappa = params.kappa0;
  const bool standard = params.conventions.heisenberg_standard_signs;
  if (mode.gen == OscGen::B) {
    if (n < 0) return mult(s, VarFamily::Y, n);
    if (n == 0) return s.scaled(params.lambda);
    return deriv(s, VarFamily::Y, -n, Rational(-2 * n) * kappa);
  }
  if (mode.gen != OscGen::B1) {
    throw WrongFamily("apply_heisenberg needs a b-family mode, got " +
                      mode.to_string());
  }
  const Rational sign = standard ? Rational(1) : Rational(-1);
  if (n < 0) {
    FockState out = mult(s, VarFamily::Y1, n);
    if (n == -1) out += deriv(s, VarFamily::Y1, -3, -sign * kappa);
    if (n == -3) out += deriv(s, VarFamily::Y1, -1, sign * kappa);
    return out;
  }
  if (n == 0) {
    FockState out = deriv(s, VarFamily::Y1, -4, sign * Rational(-4) * kappa);
    out += deriv(s, VarFamily::Y1, -2,
                 standard ? Rational(4) * params.c0 * kappa
                          : Rational(-2) * params.c0 * kappa);
    out += s.v_transformed(params.mu, params.nu, params.varkappa, params.mu);
    return out;
  }
  FockState out =
      deriv(s, VarFamily::Y1, -n - 4, sign * Rational(-2 * (n + 2)) * kappa);
  out += deriv(s, VarFamily::Y1, -n - 2,
               sign * Rational(4 * (n + 1)) * params.c0 * kappa);
  out += deriv(s, VarFamily::Y1, -n, sign * Rational(-2 * n) * kappa);
  return out;
}

FockState apply_mode(const ModeKey& mode, const FockState& s,
                     const RealizationParams& params) {
  if (mode.gen == OscGen::B || mode.gen == OscGen::B1) {
    return apply_heisenberg(mode, s, params);
  }
  return apply_oscillator(mode, s, params);
}

bool is_creation(const ModeKey& mode, int r) {
  switch (mode.gen) {
    case OscGen::A:
    case OscGen::A1:
      return r == 1 || mode.n < 0;
    case OscGen::AStar:
    case OscGen::A1Star:
      return r == 0 && mode.n <= 0;
    case OscGen::B:
    case OscGen::B1:
      return mode.n < 0;
  }
  return false;
}

namespace {

FockState commutator(const ModeKey& p, const ModeKey& q, const FockState& s,
                     const RealizationParams& params) {
  return apply_mode(p, apply_mode(q, s, params), params) -
         apply_mode(q, apply_mode(p, s, params), params);
}

void check_one(const ModeKey& p, const ModeKey& q, const FockState& s,
               const FockState& expected, const RealizationParams& params,
               Report& report) {
  ++report.checked;
  FockState residual = commutator(p, q, s, params) - expected;
  if (!residual.is_zero()) {
    report.note_failure("[" + p.to_string() + ", " + q.to_string() +
                        "] on " + s.to_string() + " residual " +
                        residual.to_string());
  }
}

}  // namespace

Report oscillator_ccr_check(int window, const std::vector<FockState>& states,
                            const RealizationParams& params) {
  Report report;
  static constexpr OscGen kFams[4] = {OscGen::A, OscGen::AStar, OscGen::A1,
                                      OscGen::A1Star};
  auto is_star = [](OscGen g) {
    return g == OscGen::AStar || g == OscGen::A1Star;
  };
  auto is_one = [](OscGen g) { return g == OscGen::A1 || g == OscGen::A1Star; };
  for (const FockState& s : states) {
    for (OscGen ga : kFams) {
      for (OscGen gb : kFams) {
        for (int m = -window; m <= window; ++m) {
          for (int n = -window; n <= window; ++n) {
            Rational scalar(0);
            if (is_one(ga) == is_one(gb) && is_star(ga) != is_star(gb) &&
                m + n == 0) {
              scalar = is_star(gb) ? Rational(1) : Rational(-1);
            }
            check_one({ga, m}, {gb, n}, s, s.scaled(scalar), params, report);
          }
        }
      }
    }
  }
  return report;
}

Report heisenberg_relation_check(int m, int n,
                                 const std::vector<FockState>& states,
                                 const RealizationParams& params) {
  Report report;
  const Rational& kappa = params.kappa0;
  Rational bb =
      m + n == 0 ? Rational(-2 * m) * kappa : Rational(0);
  Rational b1b1(0);
  if (m + n == -4) {
    b1b1 = Rational(2 * (n + 2)) * kappa;
  } else if (m + n == -2) {
    b1b1 = Rational(-4 * (n + 1)) * params.c0 * kappa;
  } else if (m + n == 0) {
    b1b1 = Rational(2 * n) * kappa;
  }
  for (const FockState& s : states) {
    check_one({OscGen::B, m}, {OscGen::B, n}, s, s.scaled(bb), params, report);
    check_one({OscGen::B1, m}, {OscGen::B1, n}, s, s.scaled(b1b1), params,
              report);
    check_one({OscGen::B, m}, {OscGen::B1, n}, s, FockState(), params, report);
    check_one({OscGen::B1, m}, {OscGen::B, n}, s, FockState(), params, report);
  }
  return report;
}

}  // namespace djkm
