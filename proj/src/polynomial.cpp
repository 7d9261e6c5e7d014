#include "lefschetz/polynomial.hpp"

#include <sstream>

namespace lefschetz {

Polynomial Polynomial::monomial(std::size_t k, const Rational& coeff) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = coeff;
  return Polynomial(std::move(c));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c(p.c_.size());
  for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

Polynomial Polynomial::reverse() const {
  std::vector<Rational> c(c_.rbegin(), c_.rend());
  return Polynomial(std::move(c));
}


Polynomial Polynomial::scale_arg(const Rational& s) const {
  std::vector<Rational> c = c_;
  Rational pw(1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    pw *= s;
    c[i] *= pw;
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i];
    if (!first) os << (a.sign() < 0 ? " - " : " + ");
    else if (a.sign() < 0) os << "-";
    first = false;
    Rational mag = a.abs();
    if (i == 0 || mag != Rational(1)) os << mag.str();
    if (i > 0) {
      if (mag != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients());
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Polynomial(), a};
  std::vector<Rational> q(static_cast<std::size_t>(dq) + 1, Rational(0));
  Rational lead_inv = Rational(1) / b.leading();
  for (int k = dq; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -=
          f * b.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(
    const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm on the monic normalization.
  Polynomial f = p.monic();
  Polynomial fp = f.derivative();
  Polynomial a = poly_gcd(f, fp);
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(fp, a).first;
  Polynomial d = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    Polynomial g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, mult);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

int root_multiplicity(const Polynomial& p, const Rational& r) {
  int m = 0;
  Polynomial q = p;
  while (!q.is_zero() && q(r).is_zero()) {
    q = divmod(q, Polynomial::linear_root(r)).first;
    ++m;
  }
  return m;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  check_internal(r.is_zero(), "polynomial division not exact");
  return q;
}

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p) {
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() < 1) return out;
  // Clear denominators to an integer polynomial, then candidate roots are
  // (divisor of constant)/(divisor of leading).
  Integer den = lcm_denominators(p.coefficients());
  std::vector<Integer> ic;
  ic.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Rational s = c * Rational(den);
    ic.push_back(s.numerator());
  }
  std::size_t low = 0;
  while (low < ic.size() && sgn(ic[low]) == 0) ++low;
  if (low > 0) out.emplace_back(Rational(0), static_cast<int>(low));
  if (low + 1 >= ic.size()) return out;
  Integer a0 = abs(ic[low]);
  Integer an = abs(ic.back());

  auto divisors = [](const Integer& n) {
    std::vector<Integer> ds;
    Integer i(1);
    for (; i * i <= n; ++i) {
      if (mpz_divisible_p(n.get_mpz_t(), i.get_mpz_t())) {
        ds.push_back(i);
        Integer j = n / i;
        if (j != i) ds.push_back(j);
      }
    }
    return ds;
  };

  for (const Integer& num : divisors(a0)) {
    for (const Integer& dnm : divisors(an)) {
      for (int s : {1, -1}) {
        Rational cand(s > 0 ? num : Integer(-num), dnm);
        if (!p(cand).is_zero()) continue;
        bool seen = false;
        for (auto& [r, m] : out) seen = seen || r == cand;
        if (!seen) out.emplace_back(cand, root_multiplicity(p, cand));
      }
    }
  }
  return out;
}

Rational cauchy_root_bound(const Polynomial& p) {
  check_internal(!p.is_zero(), "root bound of zero polynomial");
  Rational m(0);
  Rational lead = p.leading().abs();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = p.coeff(static_cast<std::size_t>(k)).abs() / lead;
    if (r > m) m = r;
  }
  return Rational(1) + m;
}

Polynomial char_poly(const RationalMatrix& m) {
  if (!m.is_square()) throw NonSquare("char_poly of non-square matrix");
  std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M M_{k-1} ...)/k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  RationalMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational ck = -(trace(mk) / Rational(static_cast<long>(k)));
    c[n - k] = ck;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    mk = m * mk;
  }
  return Polynomial(std::move(c));
}

}  // namespace lefschetz
