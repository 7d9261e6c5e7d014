#pragma once

#include <vector>

#include "lefschetz/group.hpp"

namespace lefschetz {

// Solution of gamma * x = f(x) with blockwise representatives in [0,1).
struct FixedPoint {
  std::vector<Rational> coords;
  std::vector<Integer> gamma;
};

// All fixed points of the induced map on the nilmanifold Z^n \ G, solved
// layer by layer through Smith normal form congruences, outermost block
// first. Every point is re-verified by substitution into gamma * x = f(x),
// and the count is asserted to equal |det(1 - f_*)|.
std::vector<FixedPoint> fixed_points(const PolynomialGroup& g,
                                     const GroupEndomorphism& f);

}  // namespace lefschetz
