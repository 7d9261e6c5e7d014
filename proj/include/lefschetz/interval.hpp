#pragma once

#include <algorithm>
#include <string>

#include "lefschetz/rational.hpp"

namespace lefschetz {

// Closed interval [lo, hi] with exact rational endpoints.
struct RationalInterval {
  Rational lo, hi;

  RationalInterval() = default;
  RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    check_internal(lo <= hi, "interval endpoints out of order");
  }
  static RationalInterval point(const Rational& r) { return {r, r}; }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool overlaps(const RationalInterval& o) const {
    return lo <= o.hi && o.lo <= hi;
  }
  // Sign of every point in the interval, 0 if the sign is not yet decided.
  int definite_sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }

  RationalInterval operator-() const { return {-hi, -lo}; }
  friend RationalInterval operator+(const RationalInterval& a,
                                    const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RationalInterval operator-(const RationalInterval& a,
                                    const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend RationalInterval operator*(const RationalInterval& a,
                                    const RationalInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
             p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
  }
  // Requires 0 not in the divisor.
  friend RationalInterval operator/(const RationalInterval& a,
                                    const RationalInterval& b) {
    check_internal(!b.contains_zero(), "interval division through zero");
    RationalInterval inv{Rational(1) / b.hi, Rational(1) / b.lo};
    return a * inv;
  }

  RationalInterval square() const {
    Rational l2 = lo * lo, h2 = hi * hi;
    if (contains_zero()) return {Rational(0), std::max(l2, h2)};
    return {std::min(l2, h2), std::max(l2, h2)};
  }
  RationalInterval abs() const {
    if (lo.sign() >= 0) return *this;
    if (hi.sign() <= 0) return -*this;
    return {Rational(0), std::max(-lo, hi)};
  }

  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

}  // namespace lefschetz
