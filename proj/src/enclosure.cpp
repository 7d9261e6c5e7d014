#include "lefschetz/enclosure.hpp"

#include <algorithm>
#include <sstream>

#include "lefschetz/sturm.hpp"

namespace lefschetz {

std::string to_string(CircleClass c) {
  switch (c) {
    case CircleClass::Inside: return "inside";
    case CircleClass::On: return "on";
    case CircleClass::Outside: return "outside";
    default: return "unknown";
  }
}

namespace {

// Polynomial with coefficients in Q(i), used along box edges.
struct CPoly {
  Polynomial re, im;

  static CPoly from_complex(const Rational& x, const Rational& y) {
    return {Polynomial::constant(x), Polynomial::constant(y)};
  }
  CPoly operator*(const CPoly& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CPoly operator+(const CPoly& o) const { return {re + o.re, im + o.im}; }
};

// p(z0 + t*dz) as a pair (Re, Im) of rational polynomials in t.
CPoly along_segment(const Polynomial& p, const Rational& x0, const Rational& y0,
                    const Rational& dx, const Rational& dy) {
  CPoly z{Polynomial({x0, dx}), Polynomial({y0, dy})};
  CPoly acc{Polynomial(), Polynomial()};
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * z;
    acc.re = acc.re + Polynomial::constant(p.coeff(static_cast<std::size_t>(k)));
  }
  return acc;
}

// Cauchy index of im/re over [0,1], or nullopt when the edge is unusable:
// vanishing real part at an endpoint or a root of p on the segment.
std::optional<int> edge_index(const Polynomial& p, const Rational& x0,
                              const Rational& y0, const Rational& x1,
                              const Rational& y1) {
  CPoly e = along_segment(p, x0, y0, x1 - x0, y1 - y0);
  const Rational zero(0), one(1);
  if (e.re(zero).is_zero() || e.re(one).is_zero()) return std::nullopt;
  // A root of p on the edge makes Re and Im vanish simultaneously.
  Polynomial g = poly_gcd(e.re, e.im);
  if (g.degree() > 0) {
    if (g(zero).is_zero() || g(one).is_zero()) return std::nullopt;
    if (count_real_roots(g, zero, one) > 0) return std::nullopt;
  }
  return cauchy_index(e.re, e.im, zero, one);
}

}  // namespace

std::optional<int> winding_count(const Polynomial& p, const Rational& xlo,
                                 const Rational& xhi, const Rational& ylo,
                                 const Rational& yhi) {
  check_internal(p.degree() >= 0, "winding of zero polynomial");
  int total = 0;
  const std::pair<std::pair<Rational, Rational>, std::pair<Rational, Rational>>
      edges[4] = {
          {{xlo, ylo}, {xhi, ylo}},  // bottom
          {{xhi, ylo}, {xhi, yhi}},  // right
          {{xhi, yhi}, {xlo, yhi}},  // top
          {{xlo, yhi}, {xlo, ylo}},  // left
      };
  for (const auto& e : edges) {
    auto ind = edge_index(p, e.first.first, e.first.second, e.second.first,
                          e.second.second);
    if (!ind) return std::nullopt;
    total += *ind;
  }
  check_internal(total % 2 == 0, "odd total Cauchy index around a loop");
  return -total / 2;
}

namespace {

struct Box {
  Rational xlo, xhi, ylo, yhi;
  int count = 0;
  Rational xspan() const { return xhi - xlo; }
  Rational yspan() const { return yhi - ylo; }
};

// Roots of squarefree q with Im > 0 in (xlo,xhi) x (ylo,yhi); boxes with
// ylo == 0 are counted through the axis-symmetric rectangle.
std::optional<int> count_upper(const Polynomial& q, const Box& b) {
  if (b.ylo.sign() > 0) return winding_count(q, b.xlo, b.xhi, b.ylo, b.yhi);
  auto sym = winding_count(q, b.xlo, b.xhi, -b.yhi, b.yhi);
  if (!sym) return std::nullopt;
  if (q(b.xlo).is_zero() || q(b.xhi).is_zero()) return std::nullopt;
  int reals = count_real_roots(q, b.xlo, b.xhi);
  check_internal((*sym - reals) % 2 == 0, "asymmetric conjugate root count");
  return (*sym - reals) / 2;
}

std::vector<Rational> split_candidates(const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  Rational mid = (lo + hi) / Rational(2);
  Rational span = hi - lo;
  out.push_back(mid);
  Rational step = span / Rational(8);
  for (int k = 0; k < 40; ++k) {
    out.push_back(mid + step);
    out.push_back(mid - step);
    step /= Rational(2);
  }
  return out;
}

// Subdivide until each box holds exactly one root and sits strictly above the
// real axis.
std::vector<Box> isolate_upper_roots(const Polynomial& q, int target) {
  std::vector<Box> done;
  if (target == 0) return done;
  Rational bound = cauchy_root_bound(q);

  Box root_box;
  bool have_initial = false;
  for (long j = 0; j < 64 && !have_initial; ++j) {
    Rational pad = Rational(j + 1) + Rational(1, 2 * j + 3);
    Box b{-bound - pad, bound + pad, Rational(0), bound + pad};
    auto c = count_upper(q, b);
    if (c) {
      check_internal(*c == target, "initial box misses upper roots");
      b.count = *c;
      root_box = b;
      have_initial = true;
    }
  }
  check_internal(have_initial, "no clean initial box found");

  std::vector<Box> stack{root_box};
  int guard = 0;
  while (!stack.empty()) {
    check_internal(++guard < 100000, "subdivision did not terminate");
    Box b = stack.back();
    stack.pop_back();
    if (b.count == 0) continue;
    if (b.count == 1 && b.ylo.sign() > 0) {
      done.push_back(b);
      continue;
    }
    bool split_x = b.xspan() >= b.yspan();
    bool placed = false;
    for (int attempt = 0; attempt < 2 && !placed; ++attempt) {
      auto cands = split_x ? split_candidates(b.xlo, b.xhi)
                           : split_candidates(b.ylo, b.yhi);
      for (const Rational& s : cands) {
        Box lo = b, hi = b;
        if (split_x) {
          lo.xhi = s;
          hi.xlo = s;
        } else {
          lo.yhi = s;
          hi.ylo = s;
        }
        auto cl = count_upper(q, lo);
        if (!cl) continue;
        auto ch = count_upper(q, hi);
        if (!ch) continue;
        check_internal(*cl + *ch == b.count, "subdivision lost a root");
        lo.count = *cl;
        hi.count = *ch;
        stack.push_back(lo);
        stack.push_back(hi);
        placed = true;
        break;
      }
      split_x = !split_x;  // all candidates dirty: try the other axis
    }
    check_internal(placed, "no usable split line found");
  }
  check_internal(static_cast<int>(done.size()) == target,
                 "upper-root isolation incomplete");
  return done;
}

}  // namespace

RootEnclosure RootEnclosure::real_root(Polynomial squarefree,
                                       RationalInterval iv, int multiplicity) {
  RootEnclosure e;
  e.real_ = true;
  e.re_ = std::move(iv);
  e.im_ = RationalInterval::point(Rational(0));
  e.mult_ = multiplicity;
  e.factor_ = std::move(squarefree);
  return e;
}

RootEnclosure RootEnclosure::complex_root(Polynomial squarefree,
                                          RationalInterval re,
                                          RationalInterval im,
                                          int multiplicity) {
  RootEnclosure e;
  e.real_ = false;
  e.re_ = std::move(re);
  e.im_ = std::move(im);
  e.mult_ = multiplicity;
  e.factor_ = std::move(squarefree);
  return e;
}

std::optional<Rational> RootEnclosure::exact_rational() const {
  if (real_ && re_.width().is_zero()) return re_.lo;
  return std::nullopt;
}

Rational RootEnclosure::width() const {
  return std::max(re_.width(), im_.width());
}

void RootEnclosure::refine() {
  if (real_) {
    re_ = refine_root_interval(factor_, re_);
    return;
  }
  if (im_.hi.sign() < 0) {  // lower mirror: refine through the conjugate
    RootEnclosure up = conjugate();
    up.refine();
    *this = up.conjugate();
    return;
  }
  Box b{re_.lo, re_.hi, im_.lo, im_.hi};
  b.count = 1;
  bool split_x = b.xspan() >= b.yspan();
  for (int attempt = 0; attempt < 2; ++attempt) {
    auto cands = split_x ? split_candidates(b.xlo, b.xhi)
                         : split_candidates(b.ylo, b.yhi);
    for (const Rational& s : cands) {
      Box lo = b, hi = b;
      if (split_x) {
        lo.xhi = s;
        hi.xlo = s;
      } else {
        lo.yhi = s;
        hi.ylo = s;
      }
      auto cl = count_upper(factor_, lo);
      if (!cl) continue;
      auto ch = count_upper(factor_, hi);
      if (!ch) continue;
      check_internal(*cl + *ch == 1, "refinement lost the root");
      const Box& keep = (*cl == 1) ? lo : hi;
      re_ = RationalInterval(keep.xlo, keep.xhi);
      im_ = RationalInterval(keep.ylo, keep.yhi);
      return;
    }
    split_x = !split_x;
  }
  throw InternalError("no usable refinement split found");
}

void RootEnclosure::refine_to_width(const Rational& target) {
  int guard = 0;
  while (width() > target) {
    refine();
    check_internal(++guard < 100000, "refinement did not converge");
  }
}

RootEnclosure RootEnclosure::conjugate() const {
  RootEnclosure e = *this;
  e.im_ = -im_;
  return e;
}

bool RootEnclosure::overlaps(const RootEnclosure& other) const {
  return re_.overlaps(other.re_) && im_.overlaps(other.im_);
}

CircleClass RootEnclosure::region_vs_unit_circle() const {
  if (real_) {
    if (auto r = exact_rational()) {
      Rational a = r->abs();
      if (a == Rational(1)) return CircleClass::On;
      return a < Rational(1) ? CircleClass::Inside : CircleClass::Outside;
    }
    Rational lo = re_.lo, hi = re_.hi;
    if (lo > Rational(-1) && hi < Rational(1)) return CircleClass::Inside;
    if (hi < Rational(-1) || lo > Rational(1)) return CircleClass::Outside;
    return CircleClass::Unknown;
  }
  RationalInterval norm2 = re_.square() + im_.square();
  if (norm2.hi < Rational(1)) return CircleClass::Inside;
  if (norm2.lo > Rational(1)) return CircleClass::Outside;
  return CircleClass::Unknown;
}

std::string RootEnclosure::str() const {
  std::ostringstream os;
  if (real_)
    os << "real " << re_.str();
  else
    os << "box " << re_.str() << " x i" << im_.str();
  os << " mult " << mult_;
  return os.str();
}

std::vector<RootEnclosure> isolate_roots(const Polynomial& p,
                                         const Rational& precision) {
  check_internal(!p.is_zero(), "isolating roots of the zero polynomial");
  std::vector<RootEnclosure> out;
  for (const auto& [q, mult] : squarefree_decomposition(p)) {
    auto real_ivs = isolate_real_roots(q);
    for (const auto& iv : real_ivs)
      out.push_back(RootEnclosure::real_root(q, iv, mult));
    int upper = (q.degree() - static_cast<int>(real_ivs.size())) / 2;
    for (const Box& b : isolate_upper_roots(q, upper)) {
      auto e = RootEnclosure::complex_root(q, RationalInterval(b.xlo, b.xhi),
                                           RationalInterval(b.ylo, b.yhi), mult);
      out.push_back(e.conjugate());
      out.push_back(std::move(e));
    }
  }
  // Separate enclosures of distinct roots until regions are disjoint.
  for (int guard = 0;; ++guard) {
    check_internal(guard < 100000, "enclosure separation did not terminate");
    bool clean = true;
    for (std::size_t i = 0; i < out.size() && clean; ++i)
      for (std::size_t j = i + 1; j < out.size() && clean; ++j)
        if (out[i].overlaps(out[j])) {
          out[i].refine();
          out[j].refine();
          clean = false;
        }
    if (clean) break;
  }
  for (auto& e : out) e.refine_to_width(precision);
  std::sort(out.begin(), out.end(),
            [](const RootEnclosure& a, const RootEnclosure& b) {
              if (a.re().lo != b.re().lo) return a.re().lo < b.re().lo;
              return a.im().lo < b.im().lo;
            });
  return out;
}

}  // namespace lefschetz
