#include "doctest.h"
#include "lefschetz/field.hpp"
#include "lefschetz/matrix.hpp"

using namespace lefschetz;

namespace {

FieldPtr sqrt2_field() { return make_quadratic_field(Integer(2)); }

FieldElement sqrt2(const FieldPtr& f) { return FieldElement::generator(f); }

}  // namespace

TEST_CASE("field construction validates") {
  auto f = sqrt2_field();
  CHECK(f->degree() == 2);
  CHECK(f->irreducibility_validated());
  // x^2 - 4 is reducible
  CHECK_THROWS_AS(RealAlgebraicField(
                      Polynomial({Rational(-4), Rational(0), Rational(1)}),
                      RationalInterval(Rational(0), Rational(3))),
                  InternalError);
}

TEST_CASE("quadratic field arithmetic") {
  auto f = sqrt2_field();
  FieldElement a = sqrt2(f);
  CHECK((a * a) == FieldElement(Rational(2)));
  // (1+sqrt2) + (1-sqrt2) = 2
  FieldElement one(1);
  CHECK((one + a) + (one - a) == FieldElement(2));
  // (1+sqrt2)(1-sqrt2) = -1
  CHECK((one + a) * (one - a) == FieldElement(-1));
  // division: (a*b)/b = a
  FieldElement x = FieldElement(Rational(3, 7)) + FieldElement(Rational(2)) * a;
  FieldElement y = one - a;
  CHECK((x * y) / y == x);
  CHECK_THROWS_AS(x / FieldElement(0), DivisionByZero);
  // rational fast path stays rational
  CHECK((FieldElement(Rational(1, 2)) * FieldElement(4)).is_rational());
}

TEST_CASE("sign determination") {
  auto f = sqrt2_field();
  FieldElement a = sqrt2(f);
  CHECK((FieldElement(1) - (FieldElement(1) + a)).sign() == -1);  // -sqrt2
  CHECK(FieldElement(0).sign() == 0);
  CHECK((FieldElement(2) - a).sign() == 1);  // 2 - sqrt2 > 0
  CHECK((a - FieldElement(Rational(141421356, 100000000))).sign() == 1);
  CHECK((a - FieldElement(Rational(141421357, 100000000))).sign() == -1);
  CHECK((a * a - FieldElement(2)).sign() == 0);
  // sign(x*x) is never negative
  FieldElement x = FieldElement(Rational(-3, 5)) + a;
  CHECK((x * x).sign() == 1);
}

TEST_CASE("to_interval") {
  auto f = sqrt2_field();
  FieldElement a = sqrt2(f);
  RationalInterval iv = a.to_interval(Rational(1, 1000));
  CHECK(iv.width() <= Rational(1, 1000));
  CHECK(iv.lo <= Rational(14143, 10000));
  CHECK(iv.hi >= Rational(14142, 10000));

  RationalInterval pt = FieldElement(Rational(3, 2)).to_interval(Rational(1, 1000000));
  CHECK(pt.lo == Rational(3, 2));
  CHECK(pt.hi == Rational(3, 2));

  RationalInterval neg = (-a).to_interval(Rational(1, 1000000));
  CHECK(neg.lo <= Rational(-14142135, 10000000));
  CHECK(neg.hi >= Rational(-14142136, 10000000));
}

TEST_CASE("field mismatch") {
  auto f2 = make_quadratic_field(Integer(2));
  auto f5 = make_quadratic_field(Integer(5));
  CHECK_THROWS_AS(sqrt2(f2) + sqrt2(f5), FieldMismatch);
  // structurally identical fields are compatible
  auto f2b = make_quadratic_field(Integer(2));
  CHECK(sqrt2(f2) + sqrt2(f2b) == FieldElement(Rational(2)) * sqrt2(f2));
}

TEST_CASE("biquadratic compositum") {
  auto f = make_biquadratic_field(Integer(2), Integer(5));
  FieldElement alpha = FieldElement::generator(f);  // sqrt2 + sqrt5
  CHECK(f->degree() == 4);
  // sqrt2 = (alpha^3 - (3*2+5) alpha) / (2*(5-2)) = (alpha^3 - 11 alpha)/6
  FieldElement a3 = alpha * alpha * alpha;
  FieldElement s2 = (a3 - FieldElement(11) * alpha) / FieldElement(6);
  CHECK(s2 * s2 == FieldElement(2));
  CHECK(s2.sign() == 1);
  FieldElement s5 = alpha - s2;
  CHECK(s5 * s5 == FieldElement(5));
  // and the interval brackets sqrt2 + sqrt5 = 3.65028...
  RationalInterval iv = alpha.to_interval(Rational(1, 10000));
  CHECK(iv.lo <= Rational(36503, 10000));
  CHECK(iv.hi >= Rational(36502, 10000));
}

TEST_CASE("field elements in generic linear algebra") {
  auto f = sqrt2_field();
  FieldElement a = sqrt2(f);
  // kernel of [[1, a]] is spanned by (-a, 1) ~ (1, -1/a) = (1, -a/2)
  Matrix<FieldElement> m(1, 2);
  m.at(0, 0) = FieldElement(1);
  m.at(0, 1) = a;
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK((ker[0][0] + a * ker[0][1]).is_zero());

  // determinant over the field: det [[1, a],[a, 1]] = 1 - 2 = -1
  Matrix<FieldElement> d(2, 2);
  d.at(0, 0) = FieldElement(1);
  d.at(0, 1) = a;
  d.at(1, 0) = a;
  d.at(1, 1) = FieldElement(1);
  CHECK(determinant_generic(d) == FieldElement(-1));
}

TEST_CASE("eval_poly") {
  auto f = sqrt2_field();
  FieldElement a = sqrt2(f);
  // 1+sqrt2 is a root of x^2-2x-1
  Polynomial p({Rational(-1), Rational(-2), Rational(1)});
  CHECK(eval_poly(p, FieldElement(1) + a).is_zero());
  CHECK_FALSE(eval_poly(p, a).is_zero());
}
