#pragma once

#include <map>
#include <utility>

#include "djkm/errors.hpp"
#include "djkm/rational.hpp"

namespace djkm {

/// Sparse Laurent polynomial over K: finitely many terms v * t^e, e in Z.
template <class K>
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(int exponent, K value) {
    LaurentPoly p;
    p.add(exponent, std::move(value));
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }

  int min_exponent() const {
    if (t_.empty()) throw ZeroElement("min_exponent of zero");
    return t_.begin()->first;
  }
  int max_exponent() const {
    if (t_.empty()) throw ZeroElement("max_exponent of zero");
    return t_.rbegin()->first;
  }

  K coefficient(int exponent) const {
    auto it = t_.find(exponent);
    return it == t_.end() ? K{} : it->second;
  }

  void add(int exponent, const K& value) {
    if (value.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(exponent, value);
    if (!fresh) {
      it->second += value;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  const std::map<int, K>& terms() const { return t_; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, v] : t_) r.t_.emplace(e, -v);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.t_) add(e, v);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.t_) add(e, -v);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, va] : a.t_) {
      for (const auto& [eb, vb] : b.t_) r.add(ea + eb, va * vb);
    }
    return r;
  }

  template <class S>
  LaurentPoly scaled(const S& s) const {
    LaurentPoly r;
    for (const auto& [e, v] : t_) r.add(e, v * s);
    return r;
  }

  /// d/dt termwise.
  LaurentPoly derivative() const {
    LaurentPoly r;
    for (const auto& [e, v] : t_) {
      if (e != 0) r.add(e - 1, v * Rational(e));
    }
    return r;
  }

  /// t^k -> t^(-k) termwise.
  LaurentPoly inverted_variable() const {
    LaurentPoly r;
    for (const auto& [e, v] : t_) r.t_.emplace(-e, v);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.t_ == b.t_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

 private:
  std::map<int, K> t_;
};

}  // namespace djkm
