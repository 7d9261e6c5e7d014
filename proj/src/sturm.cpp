#include "lefschetz/sturm.hpp"

#include <algorithm>

namespace lefschetz {

namespace {

// Scale by a positive rational so coefficients are coprime integers.
Polynomial primitive_scale(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = lcm_denominators(p.coefficients());
  Integer content(0);
  for (const auto& c : p.coefficients()) {
    Rational s = c * Rational(den);
    Integer n = abs(s.numerator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  if (sgn(content) == 0) content = 1;
  return Rational(den, content) * p;
}

int sign_at(const Polynomial& p, const Rational& x) { return p(x).sign(); }

}  // namespace

std::vector<Polynomial> signed_remainder_chain(const Polynomial& p0,
                                               const Polynomial& p1) {
  std::vector<Polynomial> chain;
  if (p0.is_zero()) return chain;
  chain.push_back(primitive_scale(p0));
  if (p1.is_zero()) return chain;
  chain.push_back(primitive_scale(p1));
  for (;;) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain[chain.size() - 1];
    Polynomial r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(primitive_scale(-r));
  }
  return chain;
}

int sign_variations_at(const std::vector<Polynomial>& chain,
                       const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int sign_variations_at_pos_inf(const std::vector<Polynomial>& chain) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int s = p.leading().sign();
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int sign_variations_at_neg_inf(const std::vector<Polynomial>& chain) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int s = p.leading().sign();
    if (p.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int count_real_roots(const Polynomial& p, const Rational& a,
                     const Rational& b) {
  check_internal(!p(a).is_zero() && !p(b).is_zero(),
                 "Sturm count with root at endpoint");
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p);
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int count_real_roots(const Polynomial& p) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p);
  return sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
}

int cauchy_index(const Polynomial& p, const Polynomial& q, const Rational& a,
                 const Rational& b) {
  check_internal(!p(a).is_zero() && !p(b).is_zero(),
                 "Cauchy index with pole at endpoint");
  auto chain = signed_remainder_chain(p, q);
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

namespace {

// Split [a, b] (endpoints non-roots) containing `count` roots of p into
// isolating intervals, appending to out.
void isolate_rec(const Polynomial& p, const std::vector<Polynomial>& chain,
                 const Rational& a, const Rational& b, int count,
                 std::vector<RationalInterval>* out) {
  if (count == 0) return;
  if (count == 1) {
    out->push_back(RationalInterval(a, b));
    return;
  }
  Rational mid = (a + b) / Rational(2);
  if (p(mid).is_zero()) {
    // Rational root hit exactly: emit it as a point, recurse on both sides.
    Rational eps = (b - a) / Rational(4);
    while (p(mid - eps).is_zero() || p(mid + eps).is_zero() ||
           sign_variations_at(chain, mid - eps) -
                   sign_variations_at(chain, mid + eps) !=
               1)
      eps /= Rational(2);
    out->push_back(RationalInterval::point(mid));
    int left =
        sign_variations_at(chain, a) - sign_variations_at(chain, mid - eps);
    int right =
        sign_variations_at(chain, mid + eps) - sign_variations_at(chain, b);
    isolate_rec(p, chain, a, mid - eps, left, out);
    isolate_rec(p, chain, mid + eps, b, right, out);
    return;
  }
  int left = sign_variations_at(chain, a) - sign_variations_at(chain, mid);
  isolate_rec(p, chain, a, mid, left, out);
  isolate_rec(p, chain, mid, b, count - left, out);
}

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const Polynomial& p) {
  std::vector<RationalInterval> out;
  if (p.degree() < 1) return out;
  Rational bound = cauchy_root_bound(p);
  // Endpoints +-bound are strict bounds, never roots.
  auto chain = sturm_chain(p);
  int total = sign_variations_at(chain, -bound) -
              sign_variations_at(chain, bound);
  isolate_rec(p, chain, -bound, bound, total, &out);
  std::sort(out.begin(), out.end(),
            [](const RationalInterval& x, const RationalInterval& y) {
              return x.lo < y.lo;
            });
  return out;
}

RationalInterval refine_root_interval(const Polynomial& p,
                                      const RationalInterval& iv) {
  if (iv.width().is_zero()) return iv;
  Rational mid = iv.mid();
  if (p(mid).is_zero()) return RationalInterval::point(mid);
  if (count_real_roots(p, iv.lo, mid) == 1) return RationalInterval(iv.lo, mid);
  return RationalInterval(mid, iv.hi);
}

RationalInterval refine_to_width(const Polynomial& p, RationalInterval iv,
                                 const Rational& width) {
  while (iv.width() > width) iv = refine_root_interval(p, iv);
  return iv;
}

}  // namespace lefschetz
