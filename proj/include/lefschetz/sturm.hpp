#pragma once

#include <vector>

#include "lefschetz/interval.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

// Signed remainder sequence p0, p1, -rem(p0,p1), ... (a generalized Sturm
// chain). Remainders are scaled by positive rationals to primitive integer
// form; positive scaling preserves all sign information.
std::vector<Polynomial> signed_remainder_chain(const Polynomial& p0,
                                               const Polynomial& p1);

inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  return signed_remainder_chain(p, p.derivative());
}

int sign_variations_at(const std::vector<Polynomial>& chain, const Rational& x);
int sign_variations_at_pos_inf(const std::vector<Polynomial>& chain);
int sign_variations_at_neg_inf(const std::vector<Polynomial>& chain);

// Number of distinct real roots of squarefree p in the open interval (a, b).
// Requires p(a) != 0 and p(b) != 0.
int count_real_roots(const Polynomial& p, const Rational& a, const Rational& b);
int count_real_roots(const Polynomial& p);  // whole real line

// Cauchy index of q/p over [a, b]: the number of -inf -> +inf jumps minus the
// number of +inf -> -inf jumps of q/p on (a, b). Requires p(a) != 0, p(b) != 0.
int cauchy_index(const Polynomial& p, const Polynomial& q, const Rational& a,
                 const Rational& b);

// Isolating intervals for the real roots of squarefree p, ascending. Interval
// endpoints are non-roots except for degenerate point intervals (rational
// roots found exactly).
std::vector<RationalInterval> isolate_real_roots(const Polynomial& p);

// Halve an isolating interval of squarefree p (roots at rational midpoints
// collapse to point intervals).
RationalInterval refine_root_interval(const Polynomial& p,
                                      const RationalInterval& iv);

// Refine until width <= target.
RationalInterval refine_to_width(const Polynomial& p, RationalInterval iv,
                                 const Rational& width);

}  // namespace lefschetz
