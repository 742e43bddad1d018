#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "djkm/errors.hpp"
#include "djkm/rational.hpp"

namespace djkm {

/// Truncation order marking a series as exact (a Laurent polynomial).
inline constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;

/// Truncated Laurent series over K. Coefficients are trusted strictly below
/// the truncation order; reading at or beyond it throws TruncationUnderflow.
/// Arithmetic propagates the trusted bound explicitly, so a dropped tail can
/// never be mistaken for zeros.
template <class K>
class LaurentSeries {
 public:
  LaurentSeries() = default;  // exact zero

  static LaurentSeries zero(int order) {
    LaurentSeries s;
    s.order_ = order;
    return s;
  }

  static LaurentSeries monomial(int exponent, K value, int order = kExactOrder) {
    LaurentSeries s;
    s.order_ = order;
    s.set(exponent, std::move(value));
    return s;
  }

  static LaurentSeries from_terms(std::vector<std::pair<int, K>> terms,
                                  int order = kExactOrder) {
    LaurentSeries s;
    s.order_ = order;
    for (auto& [e, v] : terms) s.add(e, std::move(v));
    return s;
  }

  /// Exponents >= order() are untrusted.
  int order() const { return order_; }
  bool is_exact() const { return order_ == kExactOrder; }

  /// True when every trusted coefficient is zero.
  bool is_zero_to_order() const { return c_.empty(); }

  /// Lowest stored exponent; requires a nonzero trusted part.
  int min_exponent() const {
    if (c_.empty()) throw ZeroElement("min_exponent of a zero series");
    return min_exp_;
  }

  bool has_terms() const { return !c_.empty(); }

  const K& coefficient(int exponent) const {
    if (exponent >= order_) {
      throw TruncationUnderflow("coefficient at exponent " +
                                std::to_string(exponent) +
                                " beyond trusted order " +
                                std::to_string(order_));
    }
    static const K kZero{};
    int i = exponent - min_exp_;
    if (c_.empty() || i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = -std::move(x);
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a,
                                 const LaurentSeries& b) {
    LaurentSeries r;
    r.order_ = std::min(a.order_, b.order_);
    for (const auto& [e, v] : a.terms()) {
      if (e < r.order_) r.add(e, v);
    }
    for (const auto& [e, v] : b.terms()) {
      if (e < r.order_) r.add(e, v);
    }
    return r;
  }

  friend LaurentSeries operator-(const LaurentSeries& a,
                                 const LaurentSeries& b) {
    return a + (-b);
  }

  friend LaurentSeries operator*(const LaurentSeries& a,
                                 const LaurentSeries& b) {
    LaurentSeries r;
    r.order_ = std::min(saturating_add(a.order_, b.lower_bound()),
                        saturating_add(b.order_, a.lower_bound()));
    for (const auto& [ea, va] : a.terms()) {
      if (va.is_zero()) continue;
      for (const auto& [eb, vb] : b.terms()) {
        int e = ea + eb;
        if (e < r.order_) r.add(e, va * vb);
      }
    }
    return r;
  }

  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  template <class S>
  LaurentSeries scaled(const S& s) const {
    LaurentSeries r;
    r.order_ = order_;
    for (const auto& [e, v] : terms()) r.add(e, v * s);
    return r;
  }

  /// Termwise d/dz. Trust shrinks by one exponent.
  LaurentSeries derivative() const {
    LaurentSeries r;
    r.order_ = is_exact() ? kExactOrder : order_ - 1;
    for (const auto& [e, v] : terms()) {
      if (e != 0 && e - 1 < r.order_) r.add(e - 1, v * Rational(e));
    }
    return r;
  }

  /// Termwise antiderivative with integration constant zero. Throws
  /// ExponentMinusOne when the z^-1 coefficient is nonzero, or when the
  /// truncation hides it.
  LaurentSeries antiderivative() const {
    if (order_ <= -1) {
      throw ExponentMinusOne("truncation order hides the z^-1 coefficient");
    }
    if (!coefficient(-1).is_zero()) {
      throw ExponentMinusOne("series has a nonzero z^-1 term");
    }
    LaurentSeries r;
    r.order_ = is_exact() ? kExactOrder : order_ + 1;
    for (const auto& [e, v] : terms()) {
      if (e != -1) r.add(e + 1, v * Rational(1, e + 1));
    }
    return r;
  }

  /// A copy trusted only below new_order (which may not exceed order()).
  LaurentSeries truncated(int new_order) const {
    LaurentSeries r;
    r.order_ = std::min(order_, new_order);
    for (const auto& [e, v] : terms()) {
      if (e < r.order_) r.add(e, v);
    }
    return r;
  }

  /// Stored (exponent, coefficient) pairs, ascending, zeros skipped.
  std::vector<std::pair<int, K>> terms() const {
    std::vector<std::pair<int, K>> out;
    out.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) out.emplace_back(min_exp_ + static_cast<int>(i), c_[i]);
    }
    return out;
  }

  /// Equal as far as both sides are trusted, through exponent bound-1 at most.
  friend bool agree_to_order(const LaurentSeries& a, const LaurentSeries& b,
                             int bound) {
    int upto = std::min({bound, a.order_, b.order_});
    int lo = std::min(a.lower_bound(), b.lower_bound());
    for (int e = lo; e < upto; ++e) {
      if (!(a.coefficient(e) == b.coefficient(e))) return false;
    }
    return true;
  }

 private:
  static int saturating_add(int a, int b) {
    if (a >= kExactOrder && b >= kExactOrder) return kExactOrder;
    long s = static_cast<long>(a) + static_cast<long>(b);
    if (s >= kExactOrder) return kExactOrder;
    return static_cast<int>(s);
  }

  // Lowest exponent that can carry a nonzero coefficient: the first stored
  // term, or the trust bound for a series with empty trusted part.
  int lower_bound() const { return c_.empty() ? order_ : min_exp_; }

  void set(int exponent, K value) { add(exponent, std::move(value)); }

  void add(int exponent, const K& value) {
    if (value.is_zero() || exponent >= order_) return;
    if (c_.empty()) {
      min_exp_ = exponent;
      c_.push_back(value);
      return;
    }
    if (exponent < min_exp_) {
      c_.insert(c_.begin(), static_cast<size_t>(min_exp_ - exponent), K{});
      min_exp_ = exponent;
    } else if (exponent >= min_exp_ + static_cast<int>(c_.size())) {
      c_.resize(static_cast<size_t>(exponent - min_exp_) + 1);
    }
    c_[static_cast<size_t>(exponent - min_exp_)] += value;
    trim();
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      min_exp_ += static_cast<int>(lead);
    }
    if (c_.empty()) min_exp_ = 0;
  }

  int min_exp_ = 0;
  int order_ = kExactOrder;
  std::vector<K> c_;
};

/// Multiplicative inverse of a power series with nonzero constant term,
/// trusted to the same order (or to `order` for exact input).
template <class K>
LaurentSeries<K> power_series_inverse(const LaurentSeries<K>& s, int order) {
  int n = s.is_exact() ? order : std::min(order, s.order());
  if (!s.has_terms() || s.min_exponent() != 0) {
    throw ZeroElement("inverse needs a unit constant term");
  }
  const K c0 = s.coefficient(0);
  if (c0.is_zero()) throw ZeroElement("inverse needs a unit constant term");
  // K must support exact division by its own units via inverse_of().
  std::vector<K> inv(static_cast<size_t>(std::max(n, 1)));
  inv[0] = inverse_of(c0);
  for (int k = 1; k < n; ++k) {
    K acc{};
    for (int i = 1; i <= k; ++i) {
      acc += s.coefficient(i) * inv[static_cast<size_t>(k - i)];
    }
    inv[static_cast<size_t>(k)] = -(acc * inv[0]);
  }
  std::vector<std::pair<int, K>> terms;
  for (int k = 0; k < n; ++k) terms.emplace_back(k, inv[static_cast<size_t>(k)]);
  return LaurentSeries<K>::from_terms(std::move(terms), n);
}

inline Rational inverse_of(const Rational& r) { return Rational(1) / r; }

}  // namespace djkm
