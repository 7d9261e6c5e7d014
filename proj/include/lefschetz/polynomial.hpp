#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

// Univariate polynomial over the rationals, coefficients ascending by degree.
// Normal form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  static Polynomial constant(const Rational& r) {
    return Polynomial(std::vector<Rational>{r});
  }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  // x - r
  static Polynomial linear_root(const Rational& r) {
    return Polynomial({-r, Rational(1)});
  }
  static Polynomial monomial(std::size_t k, const Rational& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  Polynomial derivative() const;
  Polynomial monic() const;
  // x^deg * p(1/x)
  Polynomial reverse() const;
  // p(s * x)
  Polynomial scale_arg(const Rational& s) const;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Quotient and remainder with deg r < deg b; b nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);
// Monic gcd (1 for coprime, 0 only if both zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);
// Yun's algorithm: list of (squarefree factor, multiplicity) with
// p = lc * prod f_i^{m_i}; factors monic, pairwise coprime, nonconstant.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(
    const Polynomial& p);

// All rational roots with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p);
// Multiplicity of r as a root (0 if not a root).
int root_multiplicity(const Polynomial& p, const Rational& r);
// Exact division; throws if not divisible.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

// Cauchy bound: all complex roots have |z| < bound.
Rational cauchy_root_bound(const Polynomial& p);

// Characteristic polynomial det(xI - M), monic, via Faddeev-LeVerrier.
Polynomial char_poly(const RationalMatrix& m);

// p evaluated at a square matrix over any field containing the rationals.
template <class K>
Matrix<K> eval_at_matrix(const Polynomial& p, const Matrix<K>& m) {
  check_internal(m.is_square(), "polynomial of non-square matrix");
  Matrix<K> acc(m.rows(), m.rows());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    K c = K(p.coeff(static_cast<std::size_t>(k)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      acc.at(i, i) = acc.at(i, i) + c;
  }
  return acc;
}

}  // namespace lefschetz
