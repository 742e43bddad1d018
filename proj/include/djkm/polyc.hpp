#pragma once

#include <string>
#include <vector>

#include "djkm/errors.hpp"
#include "djkm/rational.hpp"

namespace djkm {

/// Dense polynomial in the ring parameter c with Rational coefficients,
/// stored lowest degree first with no trailing zero coefficients.
class PolyC {
 public:
  PolyC() = default;
  PolyC(long k) { set_constant(Rational(k)); }  // NOLINT: implicit by design
  PolyC(const Rational& r) { set_constant(r); }  // NOLINT: implicit by design

  /// The polynomial "c" itself.
  static PolyC variable() {
    PolyC p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
  }

  /// Builds from coefficients, lowest degree first.
  static PolyC from_coefficients(std::vector<Rational> coefficients) {
    PolyC p;
    p.c_ = std::move(coefficients);
    p.normalize();
    return p;
  }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of c^k (zero beyond the degree).
  const Rational& coefficient(int k) const {
    static const Rational kZero;
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
  }

  const std::vector<Rational>& coefficients() const { return c_; }

  PolyC operator-() const {
    PolyC r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(-x);
    return r;
  }

  PolyC& operator+=(const PolyC& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  PolyC& operator-=(const PolyC& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  PolyC& operator*=(const PolyC& o) { return *this = *this * o; }
  PolyC& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend PolyC operator+(PolyC a, const PolyC& b) { return a += b; }
  friend PolyC operator-(PolyC a, const PolyC& b) { return a -= b; }
  friend PolyC operator*(const PolyC& a, const PolyC& b) {
    if (a.is_zero() || b.is_zero()) return PolyC();
    PolyC r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.normalize();
    return r;
  }
  friend PolyC operator*(PolyC a, const Rational& s) { return a *= s; }
  friend PolyC operator*(const Rational& s, PolyC a) { return a *= s; }

  friend bool operator==(const PolyC& a, const PolyC& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const PolyC& a, const PolyC& b) {
    return !(a == b);
  }

  /// Exact quotient a/b; throws NotDivisible when the remainder is nonzero
  /// and ZeroDenominator when b is zero.
  static PolyC exact_div(PolyC a, const PolyC& b) {
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    if (a.is_zero()) return PolyC();
    if (a.degree() < b.degree()) {
      throw NotDivisible("degree of dividend below divisor");
    }
    std::vector<Rational> q(
        static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lead = b.c_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      Rational f = a.coefficient(k + b.degree()) / lead;
      q[static_cast<size_t>(k)] = f;
      if (f.is_zero()) continue;
      for (int j = 0; j <= b.degree(); ++j) {
        a.c_[static_cast<size_t>(k + j)] -= f * b.c_[static_cast<size_t>(j)];
      }
    }
    a.normalize();
    if (!a.is_zero()) throw NotDivisible("nonzero polynomial remainder");
    return from_coefficients(std::move(q));
  }

  /// Horner evaluation at x, over any coefficient type constructible from
  /// Rational and closed under + and *.
  template <class K>
  K evaluate_at(const K& x) const {
    K acc{};
    for (size_t i = c_.size(); i-- > 0;) {
      acc = acc * x + K(c_[i]);
    }
    return acc;
  }

  /// Human-readable form, ascending degree: "-1 + c^2", "4c/5", "0".
  std::string to_string() const;

  friend PolyC inverse_of(const PolyC& p) {
    if (p.degree() != 0) {
      throw NotDivisible("only constant polynomials are invertible");
    }
    return PolyC(Rational(1) / p.coefficient(0));
  }

 private:
  void set_constant(const Rational& r) {
    if (!r.is_zero()) c_ = {r};
  }
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace djkm
