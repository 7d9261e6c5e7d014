#include "lefschetz/rational.hpp"

#include <ostream>

namespace lefschetz {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) {
  if (sgn(d) == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal literal: shift the point away
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("bad rational literal '" + s + "'");
    try {
      Integer num(digits);
      Integer den(1);
      for (size_t i = 0; i < frac_len; ++i) den *= 10;
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational literal '" + s + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw ParseError("bad rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

bool rational_square_root(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  Integer num = r.numerator(), den = r.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (root) *root = Rational(rn, rd);
  return true;
}

Integer lcm_denominators(const std::vector<Rational>& v) {
  Integer l(1);
  for (const auto& r : v) {
    Integer d = r.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace lefschetz
