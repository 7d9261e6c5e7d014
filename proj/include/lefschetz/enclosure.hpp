#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/interval.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

enum class CircleClass { Unknown, Inside, On, Outside };

std::string to_string(CircleClass c);

// Certified enclosure of one root (up to multiplicity) of a polynomial.
// Real roots live in a rational interval on the axis; non-real roots in an
// axis-aligned rational rectangle that avoids the real axis once refined.
// Refinement mutates the region; an enclosure is single-owner while refined.
class RootEnclosure {
 public:
  static RootEnclosure real_root(Polynomial squarefree, RationalInterval iv,
                                 int multiplicity);
  static RootEnclosure complex_root(Polynomial squarefree, RationalInterval re,
                                    RationalInterval im, int multiplicity);

  bool is_real() const { return real_; }
  const RationalInterval& re() const { return re_; }
  // Zero interval for real roots; im().lo > 0 for upper complex boxes.
  const RationalInterval& im() const { return im_; }
  int multiplicity() const { return mult_; }
  const Polynomial& factor() const { return factor_; }

  CircleClass circle_class() const { return class_; }
  void set_circle_class(CircleClass c) { class_ = c; }

  // Exact rational root when the enclosure has collapsed to a point.
  std::optional<Rational> exact_rational() const;

  Rational width() const;
  // Halve the region while keeping the root enclosed.
  void refine();
  void refine_to_width(const Rational& target);

  // Mirror image across the real axis (for the conjugate root).
  RootEnclosure conjugate() const;

  // Closed-region overlap test between enclosures.
  bool overlaps(const RootEnclosure& other) const;

  // Certified position of the region relative to the unit circle; Unknown if
  // the region still straddles it.
  CircleClass region_vs_unit_circle() const;

  std::string str() const;

 private:
  RootEnclosure() = default;
  bool real_ = true;
  RationalInterval re_, im_;
  int mult_ = 1;
  CircleClass class_ = CircleClass::Unknown;
  Polynomial factor_;
};

// Number of roots of p strictly inside the open rectangle, by the exact
// argument-principle count (Cauchy indices of Sturm chains along the edges).
// Returns nullopt if the boundary is unusable: a root on the closed boundary
// or a corner value with vanishing real part.
std::optional<int> winding_count(const Polynomial& p, const Rational& xlo,
                                 const Rational& xhi, const Rational& ylo,
                                 const Rational& yhi);

// Disjoint enclosures for all complex roots of p; multiplicities from the
// squarefree decomposition sum to deg p. Every enclosure is refined to width
// <= precision. Non-real roots are reported as conjugate pairs of boxes.
std::vector<RootEnclosure> isolate_roots(const Polynomial& p,
                                         const Rational& precision);

}  // namespace lefschetz
