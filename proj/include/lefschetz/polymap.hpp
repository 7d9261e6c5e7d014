#pragma once

#include <map>
#include <string>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

// Sparse multivariate polynomial over Q with a fixed variable count.
// Terms map exponent vectors to nonzero coefficients.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<unsigned>, Rational>& terms() const {
    return terms_;
  }
  int total_degree() const;

  void add_term(const std::vector<unsigned>& exps, const Rational& c);
  Rational coeff(const std::vector<unsigned>& exps) const;
  Rational constant_term() const;
  // Coefficient of the degree-one monomial in variable i.
  Rational linear_coeff(std::size_t i) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational eval(const std::vector<Rational>& x) const;
  // Substitute args[i] for variable i; all args share a variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& args) const;
  // Same polynomial over a larger variable set, variable i -> i + offset.
  MultiPoly embed(std::size_t new_nvars, std::size_t offset) const;

  // True when every monomial only uses variables allowed[i] == true.
  bool depends_only_on(const std::vector<bool>& allowed) const;

  std::string str() const;

 private:
  std::size_t nvars_;
  std::map<std::vector<unsigned>, Rational> terms_;
};

// True iff p takes integer values on the integer lattice: all coefficients
// in the binomial basis (iterated finite differences at 0) are integers.
bool integer_valued_on_lattice(const MultiPoly& p);
bool has_integer_coefficients(const MultiPoly& p);

// Finitely many polynomial outputs over a common input tuple.
struct PolynomialMap {
  std::size_t in_vars = 0;
  std::vector<MultiPoly> outputs;

  std::size_t out_vars() const { return outputs.size(); }
  std::vector<Rational> eval(const std::vector<Rational>& x) const;
  // this after g: outputs substituted with g's outputs.
  PolynomialMap after(const PolynomialMap& g) const;
  // Jacobian at the origin (degree-one coefficients).
  RationalMatrix linear_part() const;
  bool fixes_origin() const;
};

PolynomialMap linear_map(const RationalMatrix& m);
PolynomialMap identity_map(std::size_t n);

}  // namespace lefschetz
