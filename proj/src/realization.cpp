#include "djkm/realization.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>

namespace djkm {

const char* gen_name(GenId g) {
  static const char* names[6] = {"e", "f", "h", "e1", "f1", "h1"};
  return names[static_cast<int>(g)];
}

GenId parse_gen(const std::string& name) {
  for (int i = 0; i < 6; ++i) {
    if (name == gen_name(static_cast<GenId>(i))) return static_cast<GenId>(i);
  }
  throw ParseError("unknown generator '" + name + "'");
}

namespace {

int mode_weight(OscGen g) {
  switch (g) {
    case OscGen::AStar:
    case OscGen::A1Star:
      return 0;
    default:
      return 1;
  }
}

std::vector<FlatTerm> flatten_node(const FieldExpr& e) {
  std::vector<FlatTerm> out;
  switch (e.node) {
    case FieldExpr::Node::Gen: {
      FlatTerm t;
      t.scalar = Rational(1);
      t.factors.push_back({e.gen, 0});
      out.push_back(std::move(t));
      break;
    }
    case FieldExpr::Node::Sum: {
      for (const auto& kid : e.kids) {
        auto sub = flatten_node(kid);
        out.insert(out.end(), std::make_move_iterator(sub.begin()),
                   std::make_move_iterator(sub.end()));
      }
      break;
    }
    case FieldExpr::Node::ScalarMul: {
      out = flatten_node(e.kids.at(0));
      for (auto& t : out) t.scalar *= e.scalar;
      break;
    }
    case FieldExpr::Node::PolyMul: {
      auto sub = flatten_node(e.kids.at(0));
      for (const auto& [exp, coeff] : e.poly.terms()) {
        for (const auto& t : sub) {
          FlatTerm shifted = t;
          shifted.scalar *= coeff;
          shifted.zshift += exp;
          out.push_back(std::move(shifted));
        }
      }
      break;
    }
    case FieldExpr::Node::NormProd: {
      std::vector<FlatTerm> acc(1);
      acc[0].scalar = Rational(1);
      for (const auto& kid : e.kids) {
        auto sub = flatten_node(kid);
        std::vector<FlatTerm> next;
        next.reserve(acc.size() * sub.size());
        for (const auto& a : acc) {
          for (const auto& b : sub) {
            FlatTerm t;
            t.scalar = a.scalar * b.scalar;
            t.zshift = a.zshift + b.zshift;
            t.factors = a.factors;
            t.factors.insert(t.factors.end(), b.factors.begin(),
                             b.factors.end());
            next.push_back(std::move(t));
          }
        }
        acc = std::move(next);
      }
      for (auto& t : acc) t.normal_ordered = e.normal_ordered;
      out = std::move(acc);
      break;
    }
    case FieldExpr::Node::Deriv: {
      auto sub = flatten_node(e.kids.at(0));
      for (const auto& t : sub) {
        if (t.zshift != 0) {
          FlatTerm a = t;
          a.scalar *= Rational(t.zshift);
          a.zshift -= 1;
          out.push_back(std::move(a));
        }
        for (size_t i = 0; i < t.factors.size(); ++i) {
          FlatTerm b = t;
          b.factors[i].deriv += 1;
          out.push_back(std::move(b));
        }
      }
      break;
    }
  }
  return out;
}

// Candidate mode indices for one factor against one monomial: explicit
// finite indices (annihilation and zero-mode branches, pinned to the
// variables present), an optional creation half-line n <= halfline_max, and
// the r = 1 unstarred case ranging over all of Z.
struct Candidates {
  std::vector<int> finite;
  bool halfline = false;
  int halfline_max = 0;
  bool all_z = false;
};

Candidates factor_candidates(OscGen g, const Monomial& mono, int r,
                             int widen) {
  Candidates c;
  auto push_family = [&](VarFamily fam, auto&& index_to_modes) {
    for (const auto& [var, e] : mono.vars) {
      if (var.family == fam) index_to_modes(var.index);
    }
  };
  switch (g) {
    case OscGen::A:
    case OscGen::A1: {
      VarFamily fam = g == OscGen::A ? VarFamily::X : VarFamily::X1;
      if (r == 1) {
        c.all_z = true;
        return c;
      }
      push_family(fam, [&](int idx) {
        if (idx >= 0) c.finite.push_back(idx);
      });
      c.halfline = true;
      c.halfline_max = -1;
      break;
    }
    case OscGen::AStar:
    case OscGen::A1Star: {
      VarFamily fam = g == OscGen::AStar ? VarFamily::X : VarFamily::X1;
      if (r == 0) {
        push_family(fam, [&](int idx) {
          if (idx < 0) c.finite.push_back(-idx);
        });
        c.halfline = true;
        c.halfline_max = 0;
      } else {
        push_family(fam, [&](int idx) { c.finite.push_back(-idx); });
      }
      break;
    }
    case OscGen::B: {
      c.finite.push_back(0);
      push_family(VarFamily::Y, [&](int idx) { c.finite.push_back(-idx); });
      c.halfline = true;
      c.halfline_max = -1;
      break;
    }
    case OscGen::B1: {
      c.finite.push_back(0);
      push_family(VarFamily::Y1, [&](int idx) {
        for (int n : {-idx - 4, -idx - 2, -idx}) {
          if (n >= 1) c.finite.push_back(n);
        }
      });
      c.halfline = true;
      c.halfline_max = -1;
      break;
    }
  }
  std::sort(c.finite.begin(), c.finite.end());
  c.finite.erase(std::unique(c.finite.begin(), c.finite.end()),
                 c.finite.end());
  if (widen > 0) {
    if (!c.finite.empty()) {
      int lo = c.finite.front() - widen;
      int hi = c.finite.back() + widen;
      c.finite.clear();
      for (int n = lo; n <= hi; ++n) c.finite.push_back(n);
    }
    if (c.halfline) c.halfline_max += widen;
  }
  return c;
}

// All index tuples that can contribute to the given target sum. With
// widen = 0 the branch split partitions tuple space, so no duplicates
// arise; widened runs deduplicate.
std::vector<std::vector<int>> enumerate_tuples(
    const std::vector<Candidates>& cand, int target, int widen) {
  const size_t k = cand.size();
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  std::vector<int> chosen(k, 0);
  std::vector<size_t> deferred;

  auto emit = [&]() {
    if (widen > 0) {
      if (!seen.insert(chosen).second) return;
    }
    out.push_back(chosen);
  };

  std::function<void(size_t, int)> box = [&](size_t di, int rem) {
    size_t pos = deferred[di];
    if (di + 1 == deferred.size()) {
      if (rem <= cand[pos].halfline_max) {
        chosen[pos] = rem;
        emit();
      }
      return;
    }
    int other_max = 0;
    for (size_t dj = di + 1; dj < deferred.size(); ++dj) {
      other_max += cand[deferred[dj]].halfline_max;
    }
    int hi = cand[pos].halfline_max;
    int lo = rem - other_max;
    if (widen > 0) lo -= std::max(hi - lo + 1, 0) + widen;
    for (int n = lo; n <= hi; ++n) {
      chosen[pos] = n;
      box(di + 1, rem - n);
    }
  };

  auto resolve = [&](int rem) {
    if (deferred.empty()) {
      if (rem == 0) emit();
      return;
    }
    if (deferred.size() == 1) {
      size_t pos = deferred[0];
      if (cand[pos].all_z || rem <= cand[pos].halfline_max) {
        chosen[pos] = rem;
        emit();
      }
      return;
    }
    for (size_t pos : deferred) {
      if (cand[pos].all_z) {
        throw Error(
            "mode enumeration: an all-of-Z factor cannot combine with other "
            "open factors");
      }
    }
    box(0, rem);
  };

  std::function<void(size_t, int)> rec = [&](size_t idx, int rem) {
    if (idx == k) {
      resolve(rem);
      return;
    }
    for (int n : cand[idx].finite) {
      chosen[idx] = n;
      rec(idx + 1, rem - n);
    }
    if (cand[idx].halfline || cand[idx].all_z) {
      deferred.push_back(idx);
      rec(idx + 1, rem);
      deferred.pop_back();
    }
  };

  rec(0, target);
  return out;
}

bool contraction_clash(OscGen a, OscGen b) {
  auto pairs = [](OscGen x, OscGen y, OscGen g1, OscGen g2) {
    return (x == g1 && y == g2) || (x == g2 && y == g1);
  };
  return pairs(a, b, OscGen::A, OscGen::AStar) ||
         pairs(a, b, OscGen::A1, OscGen::A1Star) ||
         (a == OscGen::B && b == OscGen::B) ||
         (a == OscGen::B1 && b == OscGen::B1);
}

FockState apply_flat(const std::vector<FlatTerm>& terms, int m,
                     const FockState& s, const RealizationParams& params,
                     const EnumerationOptions& opts) {
  FockState out;
  for (const FlatTerm& term : terms) {
    if (term.scalar.is_zero()) continue;
    int fixed = 0;
    for (const auto& f : term.factors) fixed += mode_weight(f.gen) + f.deriv;
    const int target = m + 1 + term.zshift - fixed;
    for (const auto& [mono, mono_coeff] : s.terms()) {
      std::vector<Candidates> cand;
      cand.reserve(term.factors.size());
      for (const auto& f : term.factors) {
        cand.push_back(
            factor_candidates(f.gen, mono, params.r, opts.widen));
      }
      FockState mono_state = FockState::single(mono);
      for (const auto& tuple : enumerate_tuples(cand, target, opts.widen)) {
        Rational mult = term.scalar * mono_coeff;
        std::vector<ModeKey> modes;
        modes.reserve(term.factors.size());
        for (size_t i = 0; i < term.factors.size(); ++i) {
          const FlatFactor& f = term.factors[i];
          int w = mode_weight(f.gen);
          for (int l = 0; l < f.deriv; ++l) {
            mult *= Rational(-tuple[i] - w - l);
          }
          modes.push_back({f.gen, tuple[i]});
        }
        if (mult.is_zero()) continue;
        out += normal_order_apply(modes, mono_state, params,
                                  term.normal_ordered)
                   .scaled(mult);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<FlatTerm> flatten(const FieldExpr& expr) {
  auto terms = flatten_node(expr);
  std::erase_if(terms, [](const FlatTerm& t) { return t.scalar.is_zero(); });
  return terms;
}

FockState normal_order_apply(const std::vector<ModeKey>& modes,
                             const FockState& s,
                             const RealizationParams& params,
                             bool normal_ordered) {
  std::vector<ModeKey> order;
  order.reserve(modes.size());
  if (normal_ordered) {
    for (const auto& mode : modes) {
      if (is_creation(mode, params.r)) order.push_back(mode);
    }
    for (const auto& mode : modes) {
      if (!is_creation(mode, params.r)) order.push_back(mode);
    }
  } else {
    for (size_t i = 0; i < modes.size(); ++i) {
      for (size_t j = i + 1; j < modes.size(); ++j) {
        if (contraction_clash(modes[i].gen, modes[j].gen)) {
          throw InvalidParameter(
              "plain product of non-commuting factors " +
              modes[i].to_string() + ", " + modes[j].to_string());
        }
      }
    }
    order = modes;
  }
  FockState out = s;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    out = apply_mode(*it, out, params);
    if (out.is_zero()) return out;
  }
  return out;
}

FockState mode_apply(const FieldExpr& expr, int m, const FockState& s,
                     const RealizationParams& params,
                     const EnumerationOptions& opts) {
  return apply_flat(flatten(expr), m, s, params, opts);
}

FieldExpr tau_field(GenId g, const RealizationParams& params) {
  using FE = FieldExpr;
  const Rational c0 = params.c0;
  const Rational chi0 = params.chi0();
  LaurentPoly<Rational> p;
  p.add(4, Rational(1));
  p.add(2, Rational(-2) * c0);
  p.add(0, Rational(1));
  LaurentPoly<Rational> dp;
  dp.add(3, Rational(4));
  dp.add(1, Rational(-4) * c0);

  auto gen = [](OscGen o) { return FE::generator(o); };
  auto np = [](std::vector<FieldExpr> kids) {
    return FE::product(std::move(kids));
  };

  switch (g) {
    case GenId::F:
      return FE::scaled(Rational(-1), gen(OscGen::A));
    case GenId::F1:
      return FE::scaled(Rational(-1), gen(OscGen::A1));
    case GenId::H:
      return FE::sum({
          FE::scaled(Rational(2), np({gen(OscGen::A), gen(OscGen::AStar)})),
          FE::scaled(Rational(2),
                     np({gen(OscGen::A1), gen(OscGen::A1Star)})),
          gen(OscGen::B),
      });
    case GenId::H1:
      return FE::sum({
          FE::scaled(Rational(2), np({gen(OscGen::A1), gen(OscGen::AStar)})),
          FE::scaled(Rational(2),
                     FE::poly_mul(p, np({gen(OscGen::A), gen(OscGen::A1Star)}))),
          gen(OscGen::B1),
      });
    case GenId::E:
      return FE::sum({
          np({gen(OscGen::A), gen(OscGen::AStar), gen(OscGen::AStar)}),
          FE::poly_mul(p, np({gen(OscGen::A), gen(OscGen::A1Star),
                              gen(OscGen::A1Star)})),
          FE::scaled(Rational(2), np({gen(OscGen::A1), gen(OscGen::AStar),
                                      gen(OscGen::A1Star)})),
          np({gen(OscGen::B), gen(OscGen::AStar)}),
          np({gen(OscGen::B1), gen(OscGen::A1Star)}),
          FE::scaled(chi0, FE::derivative(gen(OscGen::AStar))),
      });
    case GenId::E1:
      return FE::sum({
          FE::product({gen(OscGen::A1), gen(OscGen::AStar),
                       gen(OscGen::AStar)},
                      params.conventions.e1_normal_ordered),
          FE::poly_mul(p, np({gen(OscGen::A1), gen(OscGen::A1Star),
                              gen(OscGen::A1Star)})),
          FE::scaled(Rational(2),
                     FE::poly_mul(p, np({gen(OscGen::A), gen(OscGen::AStar),
                                         gen(OscGen::A1Star)}))),
          np({gen(OscGen::B1), gen(OscGen::AStar)}),
          FE::poly_mul(p, np({gen(OscGen::B), gen(OscGen::A1Star)})),
          FE::scaled(chi0,
                     FE::poly_mul(p, FE::derivative(gen(OscGen::A1Star)))),
          FE::scaled(chi0 * Rational(1, 2),
                     FE::poly_mul(dp, gen(OscGen::A1Star))),
      });
  }
  throw Error("unreachable generator");
}

Realizer::Realizer(RealizationParams params) : params_(std::move(params)) {
  for (int i = 0; i < 6; ++i) {
    flat_[static_cast<size_t>(i)] =
        flatten(tau_field(static_cast<GenId>(i), params_));
  }
}

FockState Realizer::apply(GenId g, int m, const FockState& s,
                          const EnumerationOptions& opts) const {
  return apply_flat(flat_[static_cast<size_t>(static_cast<int>(g))], m, s,
                    params_, opts);
}

FockState Realizer::apply_element(const AlgebraElement<Rational>& element,
                                  const FockState& s,
                                  const EnumerationOptions& opts) const {
  FockState out;
  for (const auto& [key, coeff] : element.terms()) {
    if (key.kind == BasisKey::Kind::Central) {
      if (key.n == 0) out += s.scaled(coeff * params_.chi0());
      continue;
    }
    GenId g = static_cast<GenId>(static_cast<int>(key.gen) +
                                 (key.parity == 1 ? 3 : 0));
    out += apply(g, key.n, s, opts).scaled(coeff);
  }
  return out;
}

FockState check_commutator(GenId x, int m, GenId y, int n, const FockState& s,
                           const Realizer& realizer,
                           BracketContext<Rational>& ctx,
                           const EnumerationOptions& opts) {
  FockState lhs =
      realizer.apply(x, m, realizer.apply(y, n, s, opts), opts) -
      realizer.apply(y, n, realizer.apply(x, m, s, opts), opts);
  AlgebraElement<Rational> bracket = bracket_closed(
      ctx, AlgebraElement<Rational>::single(basis_key(x, m)),
      AlgebraElement<Rational>::single(basis_key(y, n)));
  return lhs - realizer.apply_element(bracket, s, opts);
}

uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<FockState> default_state_suite(uint64_t seed) {
  std::vector<FockState> states;
  states.push_back(FockState::vacuum(0));
  states.push_back(FockState::vacuum(1));
  states.push_back(
      FockState::vacuum(0).multiplied_by({VarFamily::X, -1}));
  states.push_back(FockState::vacuum(1)
                       .multiplied_by({VarFamily::X1, 0})
                       .multiplied_by({VarFamily::Y, -2}));
  std::vector<VarId> pool;
  for (int i = -2; i <= 2; ++i) pool.push_back({VarFamily::X, i});
  for (int i = -2; i <= 2; ++i) pool.push_back({VarFamily::X1, i});
  for (int i = -4; i <= -1; ++i) pool.push_back({VarFamily::Y, i});
  for (int i = -4; i <= -1; ++i) pool.push_back({VarFamily::Y1, i});
  uint64_t state = seed;
  FockState monomial =
      FockState::vacuum(static_cast<int>(splitmix64(state) % 2));
  for (int pick = 0; pick < 3; ++pick) {
    monomial = monomial.multiplied_by(
        pool[static_cast<size_t>(splitmix64(state) % pool.size())]);
  }
  states.push_back(monomial);
  return states;
}

Report verify_realization(const RealizationCheckConfig& config) {
  std::vector<std::pair<GenId, GenId>> pairs;
  for (int i = 0; i < 6; ++i) {
    for (int j = i; j < 6; ++j) {
      pairs.emplace_back(static_cast<GenId>(i), static_cast<GenId>(j));
    }
  }
  const int w = config.window;
  const uint64_t span = static_cast<uint64_t>(2 * w + 1);
  std::vector<Realizer> realizers;
  std::vector<BracketContext<Rational>> contexts;
  realizers.reserve(config.params.size());
  contexts.reserve(config.params.size());
  for (const auto& p : config.params) {
    realizers.emplace_back(p);
    contexts.emplace_back(p.c0, p.conventions.psi_standard_index);
    contexts.back().prewarm_psi(-(2 * w + 2), 2 * w + 2);
  }
  const uint64_t total = pairs.size() * span * span * config.states.size() *
                         config.params.size();
  return run_chunked(
      total, config.workers, [&](uint64_t begin, uint64_t end, Report& local) {
        for (uint64_t idx = begin; idx < end; ++idx) {
          uint64_t rest = idx;
          const size_t param_i = rest % config.params.size();
          rest /= config.params.size();
          const size_t state_i = rest % config.states.size();
          rest /= config.states.size();
          const int n = -w + static_cast<int>(rest % span);
          rest /= span;
          const int m = -w + static_cast<int>(rest % span);
          rest /= span;
          const auto [x, y] = pairs[rest];
          FockState residual = check_commutator(
              x, m, y, n, config.states[state_i], realizers[param_i],
              contexts[param_i], config.enumeration);
          ++local.checked;
          if (!residual.is_zero()) {
            const auto& p = config.params[param_i];
            local.note_failure(
                std::string("commutator [") + gen_name(x) + ":" +
                std::to_string(m) + ", " + gen_name(y) + ":" +
                std::to_string(n) + "] state#" + std::to_string(state_i) +
                " c0=" + p.c0.to_string() + " r=" + std::to_string(p.r) +
                " kappa0=" + p.kappa0.to_string() + " residual " +
                residual.to_string());
          }
        }
      });
}

Report verify_enumeration_soundness(
    int samples, uint64_t seed, int mode_range,
    const std::vector<FockState>& states,
    const std::vector<RealizationParams>& params, int widen) {
  std::vector<Realizer> realizers;
  realizers.reserve(params.size());
  for (const auto& p : params) realizers.emplace_back(p);
  Report report;
  uint64_t state = seed;
  for (int i = 0; i < samples; ++i) {
    const GenId g = static_cast<GenId>(splitmix64(state) % 6);
    const int m = -mode_range +
                  static_cast<int>(splitmix64(state) %
                                   static_cast<uint64_t>(2 * mode_range + 1));
    const size_t state_i = splitmix64(state) % states.size();
    const size_t param_i = splitmix64(state) % params.size();
    FockState tight = realizers[param_i].apply(g, m, states[state_i]);
    FockState wide =
        realizers[param_i].apply(g, m, states[state_i], {widen});
    ++report.checked;
    if (!(tight == wide)) {
      report.note_failure(std::string("enumeration widened result differs: ") +
                          gen_name(g) + ":" + std::to_string(m) + " state#" +
                          std::to_string(state_i) + " params#" +
                          std::to_string(param_i));
    }
  }
  return report;
}

}  // namespace djkm
