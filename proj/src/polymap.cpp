#include "lefschetz/polymap.hpp"

#include <sstream>

namespace lefschetz {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(std::vector<unsigned>(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  check_internal(i < nvars, "variable index out of range");
  MultiPoly p(nvars);
  std::vector<unsigned> e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (unsigned x : e) t += static_cast<int>(x);
    d = std::max(d, t);
  }
  return d;
}

void MultiPoly::add_term(const std::vector<unsigned>& exps, const Rational& c) {
  check_internal(exps.size() == nvars_, "exponent arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational MultiPoly::coeff(const std::vector<unsigned>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const {
  return coeff(std::vector<unsigned>(nvars_, 0));
}

Rational MultiPoly::linear_coeff(std::size_t i) const {
  std::vector<unsigned> e(nvars_, 0);
  e[i] = 1;
  return coeff(e);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_internal(a.nvars_ == b.nvars_, "polynomial arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_internal(a.nvars_ == b.nvars_, "polynomial arity mismatch");
  MultiPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<unsigned> e(a.nvars_);
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
  MultiPoly r(p.nvars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
  check_internal(x.size() == nvars_, "evaluation arity mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& args) const {
  check_internal(args.size() == nvars_, "substitution arity mismatch");
  std::size_t out_vars = nvars_ == 0 ? 0 : args[0].nvars();
  for (const auto& a : args)
    check_internal(a.nvars() == out_vars, "substitution arity mismatch");
  MultiPoly acc(out_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(out_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t = t * args[i];
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::embed(std::size_t new_nvars, std::size_t offset) const {
  check_internal(nvars_ + offset <= new_nvars, "embedding does not fit");
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    std::vector<unsigned> ne(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) ne[i + offset] = e[i];
    r.terms_.emplace(ne, c);
  }
  return r;
}

bool MultiPoly::depends_only_on(const std::vector<bool>& allowed) const {
  check_internal(allowed.size() == nvars_, "mask arity mismatch");
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0 && !allowed[i]) return false;
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational mag = c.abs();
    bool has_var = false;
    for (unsigned x : e) has_var = has_var || x > 0;
    if (!has_var || mag != Rational(1)) os << mag.str();
    bool star = !has_var || mag != Rational(1);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

bool has_integer_coefficients(const MultiPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.is_integer()) return false;
  return true;
}

namespace {

// f with x_i replaced by x_i + 1.
MultiPoly shift_var(const MultiPoly& f, std::size_t i) {
  std::vector<MultiPoly> args;
  for (std::size_t v = 0; v < f.nvars(); ++v)
    args.push_back(MultiPoly::variable(f.nvars(), v));
  args[i] = args[i] + MultiPoly::constant(f.nvars(), Rational(1));
  return f.substitute(args);
}

bool binomial_coords_integer(const MultiPoly& f, std::size_t var) {
  if (f.is_zero()) return true;
  if (var == f.nvars()) return f.constant_term().is_integer();
  MultiPoly g = f;
  for (int guard = 0;; ++guard) {
    check_internal(guard <= 64, "finite differencing runaway");
    if (!binomial_coords_integer(g, var + 1)) return false;
    MultiPoly next = shift_var(g, var) - g;  // forward difference
    if (next.is_zero()) return true;
    g = std::move(next);
  }
}

}  // namespace

bool integer_valued_on_lattice(const MultiPoly& p) {
  return binomial_coords_integer(p, 0);
}

std::vector<Rational> PolynomialMap::eval(const std::vector<Rational>& x) const {
  std::vector<Rational> out;
  out.reserve(outputs.size());
  for (const auto& f : outputs) out.push_back(f.eval(x));
  return out;
}

PolynomialMap PolynomialMap::after(const PolynomialMap& g) const {
  check_internal(g.outputs.size() == in_vars, "composition arity mismatch");
  PolynomialMap r;
  r.in_vars = g.in_vars;
  for (const auto& f : outputs) r.outputs.push_back(f.substitute(g.outputs));
  return r;
}

RationalMatrix PolynomialMap::linear_part() const {
  RationalMatrix m(outputs.size(), in_vars);
  for (std::size_t i = 0; i < outputs.size(); ++i)
    for (std::size_t j = 0; j < in_vars; ++j)
      m.at(i, j) = outputs[i].linear_coeff(j);
  return m;
}

bool PolynomialMap::fixes_origin() const {
  for (const auto& f : outputs)
    if (!f.constant_term().is_zero()) return false;
  return true;
}

PolynomialMap linear_map(const RationalMatrix& m) {
  PolynomialMap f;
  f.in_vars = m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    MultiPoly p(m.cols());
    std::vector<unsigned> e(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      e[j] = 1;
      p.add_term(e, m.at(i, j));
      e[j] = 0;
    }
    f.outputs.push_back(std::move(p));
  }
  return f;
}

PolynomialMap identity_map(std::size_t n) {
  return linear_map(RationalMatrix::identity(n));
}

}  // namespace lefschetz
