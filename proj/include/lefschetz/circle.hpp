#pragma once

#include <vector>

#include "lefschetz/enclosure.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

struct CircleClassification {
  int inside = 0, on = 0, outside = 0;  // with multiplicity
  std::vector<RootEnclosure> enclosures;
};

// Root counts of p relative to the unit circle, with multiplicity.
// ON-roots are detected algebraically: g = gcd(p, reverse p) is reduced by
// its roots at +-1, the remaining palindromic part is rewritten through
// y = x + 1/x, and the real roots of the transform in (-2, 2) are counted by
// Sturm chains. INSIDE/OUTSIDE follow from enclosure refinement of the
// leftover roots.
CircleClassification classify_unit_circle(const Polynomial& p);

// h(x) = x^m T(x + 1/x) for palindromic h of degree 2m; throws otherwise.
Polynomial reciprocal_transform(const Polynomial& h);

}  // namespace lefschetz
