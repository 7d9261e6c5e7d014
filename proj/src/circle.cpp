#include "lefschetz/circle.hpp"

#include "lefschetz/sturm.hpp"

namespace lefschetz {

Polynomial reciprocal_transform(const Polynomial& h) {
  Polynomial f = h.monic();
  int n = f.degree();
  check_internal(n >= 0 && n % 2 == 0, "reciprocal transform needs even degree");
  int m = n / 2;
  for (int k = 0; k <= n; ++k)
    check_internal(f.coeff(static_cast<std::size_t>(k)) ==
                       f.coeff(static_cast<std::size_t>(n - k)),
                   "reciprocal transform of a non-palindromic polynomial");
  // x^j + x^-j in terms of y = x + 1/x: V_0 = 2, V_1 = y, V_{j+1} = yV_j - V_{j-1}
  Polynomial y = Polynomial::x();
  Polynomial vjm1 = Polynomial::constant(Rational(2));
  Polynomial vj = y;
  Polynomial t = Polynomial::constant(f.coeff(static_cast<std::size_t>(m)));
  for (int j = 1; j <= m; ++j) {
    t = t + f.coeff(static_cast<std::size_t>(m + j)) * vj;
    Polynomial next = y * vj - vjm1;
    vjm1 = vj;
    vj = next;
  }
  return t;
}

namespace {

// Roots of p on the unit circle, counted with multiplicity, found without
// any numeric shrinking.
int on_circle_count(const Polynomial& p) {
  // Strip roots at the origin; they are strictly inside.
  Polynomial q = p;
  while (q.degree() >= 1 && q.coeff(0).is_zero())
    q = divmod(q, Polynomial::x()).first;
  if (q.degree() < 1) return 0;

  int on = root_multiplicity(q, Rational(1)) +
           root_multiplicity(q, Rational(-1));

  Polynomial g = poly_gcd(q, q.reverse());
  for (const Rational& r : {Rational(1), Rational(-1)})
    while (g.degree() >= 1 && g(r).is_zero())
      g = divmod(g, Polynomial::linear_root(r)).first;
  if (g.degree() < 1) return on;

  Polynomial t = reciprocal_transform(g);
  for (const auto& [factor, mult] : squarefree_decomposition(t)) {
    check_internal(!factor(Rational(2)).is_zero() &&
                       !factor(Rational(-2)).is_zero(),
                   "transform root at +-2 after deflating +-1");
    on += 2 * mult * count_real_roots(factor, Rational(-2), Rational(2));
  }
  return on;
}

}  // namespace

CircleClassification classify_unit_circle(const Polynomial& p) {
  check_internal(!p.is_zero(), "classifying the zero polynomial");
  CircleClassification out;
  if (p.degree() < 1) return out;

  out.on = on_circle_count(p);
  out.enclosures = isolate_roots(p, Rational(1, 4));

  int deg = p.degree();
  for (int guard = 0;; ++guard) {
    check_internal(guard < 100000, "circle certification did not converge");
    out.inside = out.outside = 0;
    for (auto& e : out.enclosures) {
      CircleClass c = e.region_vs_unit_circle();
      e.set_circle_class(c);
      if (c == CircleClass::Inside) out.inside += e.multiplicity();
      else if (c == CircleClass::Outside) out.outside += e.multiplicity();
    }
    if (out.inside + out.outside == deg - out.on) break;
    for (auto& e : out.enclosures)
      if (e.circle_class() == CircleClass::Unknown) e.refine();
  }
  // Whatever never certifies inside/outside is exactly the ON set.
  int residual = 0;
  for (auto& e : out.enclosures)
    if (e.circle_class() == CircleClass::Unknown ||
        e.circle_class() == CircleClass::On) {
      e.set_circle_class(CircleClass::On);
      residual += e.multiplicity();
    }
  check_internal(residual == out.on, "ON-root bookkeeping mismatch");
  check_internal(out.inside + out.on + out.outside == deg,
                 "circle classification does not cover all roots");
  return out;
}

}  // namespace lefschetz
