#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/interval.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

// Real algebraic number field Q(alpha): alpha is the unique root of the monic
// integer minimal polynomial inside the isolating interval. Immutable and
// shareable; sign computations refine local interval copies.
class RealAlgebraicField {
 public:
  // Irreducibility is established automatically for degree <= 3 (rational
  // root tests); higher degrees must be asserted by the caller.
  RealAlgebraicField(Polynomial min_poly, RationalInterval isolating,
                     bool irreducibility_asserted = false);

  const Polynomial& min_poly() const { return min_poly_; }
  const RationalInterval& isolating_interval() const { return interval_; }
  int degree() const { return min_poly_.degree(); }
  bool irreducibility_validated() const { return validated_; }

  // Interval around alpha of width <= target.
  RationalInterval refine(const Rational& width) const;

  bool same_field(const RealAlgebraicField& o) const;

 private:
  Polynomial min_poly_;
  RationalInterval interval_;
  bool validated_;
};

using FieldPtr = std::shared_ptr<const RealAlgebraicField>;

// Q(sqrt(d)) for a non-square positive integer d, with alpha = +sqrt(d).
FieldPtr make_quadratic_field(const Integer& d);
// Q(sqrt(d1) + sqrt(d2)) for distinct non-square d1, d2 with d1*d2 non-square.
FieldPtr make_biquadratic_field(const Integer& d1, const Integer& d2);

// Element of Q(alpha) in the power basis 1, alpha, ..., alpha^{d-1}; a null
// field means the element is plain rational. Mixed arithmetic promotes
// rationals into the other operand's field; combining two distinct proper
// fields raises FieldMismatch.
class FieldElement {
 public:
  FieldElement() : coords_(1, Rational(0)) {}
  FieldElement(long n) : coords_(1, Rational(n)) {}  // NOLINT
  FieldElement(const Rational& r) : coords_(1, r) {}  // NOLINT
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_rational() const { return field_ == nullptr; }
  // Value as a rational if it happens to lie in Q (all higher coords zero).
  std::optional<Rational> rational_value() const;

  bool is_zero() const;
  int sign() const;
  FieldElement abs() const { return sign() >= 0 ? *this : -*this; }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

  // Enclosing interval of width <= width.
  RationalInterval to_interval(const Rational& width) const;

  std::string str() const;  // human-readable, e.g. "1/2 + 3*a"

 private:
  FieldPtr field_;  // null = rational
  std::vector<Rational> coords_;
  void reduce();
};

// Promotions between rational and field-element linear algebra.
Matrix<FieldElement> to_field_matrix(const Matrix<Rational>& m);
std::vector<FieldElement> to_field_vector(const std::vector<Rational>& v);

// p evaluated at a field element (Horner).
FieldElement eval_poly(const Polynomial& p, const FieldElement& x);

}  // namespace lefschetz
