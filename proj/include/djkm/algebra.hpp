#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "djkm/report.hpp"
#include "djkm/ring.hpp"

namespace djkm {

/// sl(2) generator label.
enum class Gen : int { E = 0, F = 1, H = 2 };

/// Structure constants and invariant form of the simple factor, kept as a
/// pluggable record so the construction reads generically; only sl(2) with
/// the trace form of the defining representation ((e,f) = 1, (h,h) = 2) is
/// instantiated.
struct SimpleLieData {
  struct BracketTerm {
    long coefficient = 0;
    Gen target = Gen::E;
  };

  /// [a, b] as coefficient * target (coefficient 0 means zero bracket).
  BracketTerm bracket(Gen a, Gen b) const {
    static constexpr int kE = 0, kF = 1, kH = 2;
    static constexpr long coeff[3][3] = {
        {0, 1, -2},
        {-1, 0, 2},
        {2, -2, 0},
    };
    static constexpr int target[3][3] = {
        {kE, kH, kE},
        {kH, kF, kF},
        {kE, kF, kE},
    };
    int i = static_cast<int>(a), j = static_cast<int>(b);
    return {coeff[i][j], static_cast<Gen>(target[i][j])};
  }

  /// Symmetric invariant bilinear form.
  long form(Gen a, Gen b) const {
    static constexpr long k[3][3] = {
        {0, 1, 0},
        {1, 0, 0},
        {0, 0, 2},
    };
    return k[static_cast<int>(a)][static_cast<int>(b)];
  }
};

/// Basis label of the extended loop algebra: currents x otimes t^n (parity 0)
/// or x otimes t^n u (parity 1), plus the five central classes
/// (w:0 and w:-1..w:-4). Canonical strings: "e:1", "f1:-1", "h:0", "w:-4".
struct BasisKey {
  enum class Kind : int { Current = 0, Central = 1 };

  Kind kind = Kind::Current;
  Gen gen = Gen::E;  // Current only
  int parity = 0;    // Current only: 0 for t^n, 1 for t^n u
  int n = 0;         // Current: loop degree; Central: 0 or -1..-4

  static BasisKey current(Gen g, int parity, int n) {
    return {Kind::Current, g, parity, n};
  }
  static BasisKey central(int j) {
    if (j > 0 || j < -4) throw WrongFamily("central index outside {0,-1..-4}");
    return {Kind::Central, Gen::E, 0, j};
  }

  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;

  std::string to_string() const {
    if (kind == Kind::Central) return "w:" + std::to_string(n);
    static const char* names[3] = {"e", "f", "h"};
    std::string s = names[static_cast<int>(gen)];
    if (parity == 1) s += "1";
    return s + ":" + std::to_string(n);
  }

  static BasisKey parse(const std::string& text);
};

/// Finite K-linear combination of basis keys.
template <class K>
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement single(const BasisKey& k, K v = K(1)) {
    AlgebraElement e;
    e.add(k, std::move(v));
    return e;
  }

  void add(const BasisKey& k, const K& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  void add_central(const CentralElement<K>& ce) {
    add(BasisKey::central(0), ce.w0());
    for (int j = -4; j <= -1; ++j) add(BasisKey::central(j), ce.w(j));
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<BasisKey, K>& terms() const { return t_; }

  K coefficient(const BasisKey& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? K() : it->second;
  }

  AlgebraElement operator-() const {
    AlgebraElement r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, -v);
    return r;
  }
  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [k, v] : o.t_) add(k, v);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (const auto& [k, v] : o.t_) add(k, -v);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.t_ == b.t_;
  }

  template <class S>
  AlgebraElement scaled(const S& s) const {
    AlgebraElement r;
    for (const auto& [k, v] : t_) r.add(k, v * s);
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + v.to_string() + ")*" + k.to_string();
    }
    return s;
  }

 private:
  std::map<BasisKey, K> t_;
};

/// Shared state for bracket evaluation: the parameter value, the simple
/// factor data, and a cache of Psi values. The cache is filled lazily;
/// prewarm_psi() must cover the needed range before concurrent sweeps.
template <class K>
class BracketContext {
 public:
  explicit BracketContext(K c, bool psi_standard_index = true)
      : c_(std::move(c)), psi_standard_(psi_standard_index) {}

  const K& c() const { return c_; }
  const SimpleLieData& sl2() const { return sl2_; }

  const CentralElement<K>& psi(int k) {
    auto it = cache_.find(k);
    if (it == cache_.end()) {
      it = cache_.emplace(k, psi_table(k, psi_standard_).mapped(c_)).first;
    }
    return it->second;
  }

  void prewarm_psi(int kmin, int kmax) {
    for (int k = kmin; k <= kmax; ++k) psi(k);
  }

 private:
  K c_;
  bool psi_standard_;
  SimpleLieData sl2_;
  std::map<int, CentralElement<K>> cache_;
};

/// Bracket from the closed structure constants:
///   [x t^m, y t^n]     = [x,y] t^(m+n) + n delta_{m+n,0} (x,y) w0
///   [x t^m u, y t^n u] = [x,y] t^(m+n) p(t)
///                        + ((n+2) d_{m+n,-4} - 2c(n+1) d_{m+n,-2}
///                           + n d_{m+n,0}) (x,y) w0
///   [x t^m u, y t^n]   = [x,y] t^(m+n) u + n (x,y) Psi(m+n-1)
///   [x t^m,  y t^n u]  = [x,y] t^(m+n) u - m (x,y) Psi(m+n-1)
/// with centrals bracketing to zero.
template <class K>
AlgebraElement<K> bracket_closed(BracketContext<K>& ctx,
                                 const AlgebraElement<K>& a,
                                 const AlgebraElement<K>& b) {
  AlgebraElement<K> out;
  for (const auto& [ka, va] : a.terms()) {
    if (ka.kind == BasisKey::Kind::Central) continue;
    for (const auto& [kb, vb] : b.terms()) {
      if (kb.kind == BasisKey::Kind::Central) continue;
      K s = va * vb;
      auto lie = ctx.sl2().bracket(ka.gen, kb.gen);
      long form = ctx.sl2().form(ka.gen, kb.gen);
      int m = ka.n, n = kb.n;
      if (ka.parity == 0 && kb.parity == 0) {
        if (lie.coefficient != 0) {
          out.add(BasisKey::current(lie.target, 0, m + n),
                  s * Rational(lie.coefficient));
        }
        if (form != 0 && m + n == 0) {
          out.add(BasisKey::central(0), s * Rational(n * form));
        }
      } else if (ka.parity == 1 && kb.parity == 1) {
        if (lie.coefficient != 0) {
          K sc = s * Rational(lie.coefficient);
          out.add(BasisKey::current(lie.target, 0, m + n + 4), sc);
          out.add(BasisKey::current(lie.target, 0, m + n + 2),
                  sc * ctx.c() * Rational(-2));
          out.add(BasisKey::current(lie.target, 0, m + n), sc);
        }
        if (form != 0) {
          if (m + n == -4) {
            out.add(BasisKey::central(0), s * Rational((n + 2) * form));
          } else if (m + n == -2) {
            out.add(BasisKey::central(0),
                    s * ctx.c() * Rational(-2 * (n + 1) * form));
          } else if (m + n == 0) {
            out.add(BasisKey::central(0), s * Rational(n * form));
          }
        }
      } else {
        if (lie.coefficient != 0) {
          out.add(BasisKey::current(lie.target, 1, m + n),
                  s * Rational(lie.coefficient));
        }
        if (form != 0) {
          long weight = ka.parity == 1 ? static_cast<long>(n) * form
                                       : static_cast<long>(-m) * form;
          if (weight != 0) {
            out.add_central(
                ctx.psi(m + n - 1).scaled(s * Rational(weight)));
          }
        }
      }
    }
  }
  return out;
}

/// The same bracket evaluated through the ring: multiply the loop factors in
/// R and take the Kassel cocycle class of f dg for the central part.
template <class K>
AlgebraElement<K> bracket_kassel(BracketContext<K>& ctx,
                                 const AlgebraElement<K>& a,
                                 const AlgebraElement<K>& b) {
  AlgebraElement<K> out;
  for (const auto& [ka, va] : a.terms()) {
    if (ka.kind == BasisKey::Kind::Central) continue;
    for (const auto& [kb, vb] : b.terms()) {
      if (kb.kind == BasisKey::Kind::Central) continue;
      K s = va * vb;
      RingElement<K> f = ka.parity == 1 ? RingElement<K>::t_power_u(ka.n)
                                        : RingElement<K>::t_power(ka.n);
      RingElement<K> g = kb.parity == 1 ? RingElement<K>::t_power_u(kb.n)
                                        : RingElement<K>::t_power(kb.n);
      auto lie = ctx.sl2().bracket(ka.gen, kb.gen);
      if (lie.coefficient != 0) {
        RingElement<K> prod = ring_mul(f, g, ctx.c());
        K sc = s * Rational(lie.coefficient);
        for (const auto& [e, v] : prod.even.terms()) {
          out.add(BasisKey::current(lie.target, 0, e), v * sc);
        }
        for (const auto& [e, v] : prod.odd.terms()) {
          out.add(BasisKey::current(lie.target, 1, e), v * sc);
        }
      }
      long form = ctx.sl2().form(ka.gen, kb.gen);
      if (form != 0) {
        out.add_central(
            kassel_cocycle(f, g, ctx.c()).scaled(s * Rational(form)));
      }
    }
  }
  return out;
}

/// All current basis keys with |n| <= window, in deterministic order.
std::vector<BasisKey> basis_window(int window);

/// [a,b] + [b,a] = 0 over every unordered pair from basis_window, plus
/// [a, w] = 0 for every central w.
Report verify_antisymmetry(BracketContext<PolyC>& ctx, int window,
                           int workers = 1);

/// Jacobi identity over every multiset {a,b,c} from basis_window.
Report verify_jacobi(BracketContext<PolyC>& ctx, int window, int workers = 1);

/// bracket_closed == bracket_kassel over every ordered pair from
/// basis_window.
Report verify_backend_agreement(BracketContext<PolyC>& ctx, int window,
                                int workers = 1);

}  // namespace djkm
