#include "lefschetz/field.hpp"

#include <sstream>

#include "lefschetz/matrix.hpp"
#include "lefschetz/sturm.hpp"

namespace lefschetz {

namespace {

bool has_integer_coefficients(const Polynomial& p) {
  for (const auto& c : p.coefficients())
    if (!c.is_integer()) return false;
  return true;
}

}  // namespace

RealAlgebraicField::RealAlgebraicField(Polynomial min_poly,
                                       RationalInterval isolating,
                                       bool irreducibility_asserted)
    : min_poly_(std::move(min_poly)), interval_(std::move(isolating)) {
  check_internal(min_poly_.degree() >= 2, "field needs degree >= 2");
  check_internal(min_poly_.is_monic(), "minimal polynomial must be monic");
  check_internal(has_integer_coefficients(min_poly_),
                 "minimal polynomial must have integer coefficients");
  if (min_poly_.degree() <= 3) {
    // Degree 2 or 3 is reducible over Q iff it has a rational root.
    check_internal(rational_roots(min_poly_).empty(),
                   "minimal polynomial is reducible (rational root)");
    validated_ = true;
  } else {
    check_internal(irreducibility_asserted,
                   "irreducibility must be asserted for degree > 3");
    validated_ = false;
  }
  check_internal(
      !min_poly_(interval_.lo).is_zero() && !min_poly_(interval_.hi).is_zero(),
      "isolating interval endpoints must not be roots");
  check_internal(count_real_roots(min_poly_, interval_.lo, interval_.hi) == 1,
                 "interval does not isolate exactly one root");
}

RationalInterval RealAlgebraicField::refine(const Rational& width) const {
  return refine_to_width(min_poly_, interval_, width);
}

bool RealAlgebraicField::same_field(const RealAlgebraicField& o) const {
  if (!(min_poly_ == o.min_poly_)) return false;
  Rational lo = std::max(interval_.lo, o.interval_.lo);
  Rational hi = std::min(interval_.hi, o.interval_.hi);
  if (lo >= hi) return false;
  if (min_poly_(lo).is_zero() || min_poly_(hi).is_zero())
    return true;  // rational root impossible for validated fields
  return count_real_roots(min_poly_, lo, hi) == 1;
}

FieldPtr make_quadratic_field(const Integer& d) {
  check_internal(sgn(d) > 0, "quadratic field needs positive radicand");
  check_internal(mpz_perfect_square_p(d.get_mpz_t()) == 0,
                 "radicand is a perfect square");
  Polynomial p({Rational(Integer(-d)), Rational(0), Rational(1)});
  Rational hi = Rational(d) > Rational(1) ? Rational(d) : Rational(2);
  return std::make_shared<RealAlgebraicField>(
      p, RationalInterval(Rational(0), hi));
}

FieldPtr make_biquadratic_field(const Integer& d1, const Integer& d2) {
  check_internal(d1 != d2, "biquadratic field needs distinct radicands");
  check_internal(mpz_perfect_square_p(d1.get_mpz_t()) == 0 &&
                     mpz_perfect_square_p(d2.get_mpz_t()) == 0,
                 "radicand is a perfect square");
  Integer prod = d1 * d2;
  check_internal(mpz_perfect_square_p(prod.get_mpz_t()) == 0,
                 "radicands lie in the same quadratic field");
  // alpha = sqrt(d1) + sqrt(d2): x^4 - 2(d1+d2)x^2 + (d1-d2)^2, irreducible
  // exactly because d1, d2, d1*d2 are non-squares.
  Integer s = d1 + d2, q = (d1 - d2) * (d1 - d2);
  Polynomial p({Rational(q), Rational(0), Rational(Integer(-2 * s)),
                Rational(0), Rational(1)});
  Integer l1, l2;
  mpz_sqrt(l1.get_mpz_t(), d1.get_mpz_t());
  mpz_sqrt(l2.get_mpz_t(), d2.get_mpz_t());
  Rational lo{Integer(l1 + l2)};
  Rational hi = lo + Rational(2);
  return std::make_shared<RealAlgebraicField>(p, RationalInterval(lo, hi),
                                              /*irreducibility_asserted=*/true);
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) {
    check_internal(coords_.size() == 1, "rational element needs one coord");
    return;
  }
  reduce();
}

void FieldElement::reduce() {
  std::size_t deg = static_cast<std::size_t>(field_->degree());
  if (coords_.size() > deg) {
    Polynomial rem = divmod(Polynomial(coords_), field_->min_poly()).second;
    coords_ = rem.coefficients();
  }
  coords_.resize(deg, Rational(0));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  std::vector<Rational> c(static_cast<std::size_t>(field->degree()),
                          Rational(0));
  c[1] = Rational(1);
  return FieldElement(field, std::move(c));
}

std::optional<Rational> FieldElement::rational_value() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return std::nullopt;
  return coords_[0];
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

// Bring two elements into a common field.
void unify(const FieldElement& a, const FieldElement& b, FieldPtr* field,
           std::vector<Rational>* ca, std::vector<Rational>* cb) {
  *ca = a.coords();
  *cb = b.coords();
  if (a.field() && b.field()) {
    if (a.field() != b.field() && !a.field()->same_field(*b.field()))
      throw FieldMismatch("elements of different algebraic fields");
    *field = a.field();
    return;
  }
  *field = a.field() ? a.field() : b.field();
  if (*field) {
    std::size_t deg = static_cast<std::size_t>((*field)->degree());
    ca->resize(deg, Rational(0));
    cb->resize(deg, Rational(0));
  }
}

// Extended Euclid over Q[x]: g = u*a + v*b with g monic (or zero).
void poly_ext_gcd(const Polynomial& a, const Polynomial& b, Polynomial* g,
                  Polynomial* u, Polynomial* v) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(Rational(1)), s1;
  Polynomial t0, t1 = Polynomial::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    Polynomial t = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s);
    t0 = std::move(t1); t1 = std::move(t);
  }
  if (!r0.is_zero()) {
    Rational inv = Rational(1) / r0.leading();
    r0 = inv * r0;
    s0 = inv * s0;
    t0 = inv * t0;
  }
  *g = r0;
  *u = s0;
  *v = t0;
}

}  // namespace

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldPtr f;
  std::vector<Rational> ca, cb;
  unify(a, b, &f, &ca, &cb);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  return FieldElement(f, std::move(ca));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a + (-b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldPtr f;
  std::vector<Rational> ca, cb;
  unify(a, b, &f, &ca, &cb);
  if (!f) return FieldElement(ca[0] * cb[0]);
  Polynomial prod = Polynomial(ca) * Polynomial(cb);
  return FieldElement(f, prod.coefficients());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) throw DivisionByZero("field element division by zero");
  FieldPtr f;
  std::vector<Rational> ca, cb;
  unify(a, b, &f, &ca, &cb);
  if (!f) return FieldElement(ca[0] / cb[0]);
  Polynomial g, u, v;
  poly_ext_gcd(Polynomial(cb), f->min_poly(), &g, &u, &v);
  check_internal(g.degree() == 0,
                 "divisor not invertible; minimal polynomial reducible?");
  Polynomial inv = (Rational(1) / g.coeff(0)) * u;
  Polynomial prod = Polynomial(ca) * inv;
  return FieldElement(f, prod.coefficients());
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  FieldPtr f;
  std::vector<Rational> ca, cb;
  unify(a, b, &f, &ca, &cb);
  return ca == cb;
}

namespace {

RationalInterval eval_on_interval(const std::vector<Rational>& coords,
                                  const RationalInterval& x) {
  RationalInterval acc = RationalInterval::point(Rational(0));
  for (std::size_t i = coords.size(); i-- > 0;)
    acc = acc * x + RationalInterval::point(coords[i]);
  return acc;
}

}  // namespace

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (!field_) return coords_[0].sign();
  RationalInterval iv = field_->isolating_interval();
  const Polynomial& mp = field_->min_poly();
  for (int guard = 0; guard < 100000; ++guard) {
    RationalInterval val = eval_on_interval(coords_, iv);
    int s = val.definite_sign();
    if (s != 0) return s;
    iv = refine_root_interval(mp, iv);
  }
  throw InternalError("sign determination did not converge");
}

RationalInterval FieldElement::to_interval(const Rational& width) const {
  check_internal(width.sign() > 0, "interval width must be positive");
  if (!field_) return RationalInterval::point(coords_[0]);
  RationalInterval iv = field_->isolating_interval();
  const Polynomial& mp = field_->min_poly();
  for (int guard = 0; guard < 100000; ++guard) {
    RationalInterval val = eval_on_interval(coords_, iv);
    if (val.width() <= width) return val;
    iv = refine_root_interval(mp, iv);
  }
  throw InternalError("interval evaluation did not converge");
}

std::string FieldElement::str() const {
  if (auto r = rational_value()) return r->str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    Rational c = coords_[i];
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational mag = c.abs();
    if (i == 0 || mag != Rational(1)) os << mag.str();
    if (i > 0) {
      if (mag != Rational(1)) os << "*";
      os << "a";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Matrix<FieldElement> to_field_matrix(const Matrix<Rational>& m) {
  Matrix<FieldElement> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = FieldElement(m.at(i, j));
  return r;
}

std::vector<FieldElement> to_field_vector(const std::vector<Rational>& v) {
  std::vector<FieldElement> r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

FieldElement eval_poly(const Polynomial& p, const FieldElement& x) {
  FieldElement acc(0);
  for (int k = p.degree(); k >= 0; --k)
    acc = acc * x + FieldElement(p.coeff(static_cast<std::size_t>(k)));
  return acc;
}

}  // namespace lefschetz
