#include "lefschetz/group.hpp"

#include <algorithm>
#include <functional>

namespace lefschetz {

std::vector<Rational> PolynomialGroup::multiply(
    const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  std::vector<Rational> xy = a;
  xy.insert(xy.end(), b.begin(), b.end());
  return multiplication.eval(xy);
}

namespace {

std::string first_term(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  const auto& [e, c] = *p.terms().begin();
  MultiPoly one(p.nvars());
  one.add_term(e, c);
  return one.str();
}

// x- and y-side embeddings of the identity coordinates.
std::vector<MultiPoly> coordinate_vars(std::size_t total, std::size_t offset,
                                       std::size_t n) {
  std::vector<MultiPoly> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(MultiPoly::variable(total, offset + i));
  return v;
}

std::vector<MultiPoly> zero_args(std::size_t total, std::size_t n) {
  std::vector<MultiPoly> v(n, MultiPoly(total));
  return v;
}

}  // namespace

GroupValidation validate_group(const PolynomialGroup& g) {
  GroupValidation v;
  std::size_t n = g.dim;
  if (g.multiplication.in_vars != 2 * n || g.multiplication.out_vars() != n ||
      g.inverse.in_vars != n || g.inverse.out_vars() != n) {
    v.shapes = false;
    v.detail = "multiplication/inverse arities do not match dim";
    return v;
  }

  std::vector<int> seen(n, 0);
  for (const auto& block : g.layer_blocks)
    for (std::size_t i : block) {
      if (i >= n) { v.blocks_partition = false; break; }
      seen[i]++;
    }
  for (int s : seen) v.blocks_partition = v.blocks_partition && s == 1;
  if (!v.blocks_partition) {
    v.detail = "layer_blocks is not a partition of the coordinates";
    return v;
  }

  // m(x, 0) = x and m(0, x) = x.
  auto xvars = coordinate_vars(n, 0, n);
  {
    std::vector<MultiPoly> args = xvars;
    auto zeros = zero_args(n, n);
    args.insert(args.end(), zeros.begin(), zeros.end());
    for (std::size_t i = 0; i < n && v.left_identity; ++i) {
      MultiPoly diff = g.multiplication.outputs[i].substitute(args) - xvars[i];
      if (!diff.is_zero()) {
        v.left_identity = false;
        v.detail = "m(x,0) != x at coordinate " + std::to_string(i) +
                   ", witness " + first_term(diff);
      }
    }
    std::vector<MultiPoly> args2 = zero_args(n, n);
    args2.insert(args2.end(), xvars.begin(), xvars.end());
    for (std::size_t i = 0; i < n && v.right_identity; ++i) {
      MultiPoly diff = g.multiplication.outputs[i].substitute(args2) - xvars[i];
      if (!diff.is_zero()) {
        v.right_identity = false;
        v.detail = "m(0,x) != x at coordinate " + std::to_string(i) +
                   ", witness " + first_term(diff);
      }
    }
  }

  // m(x, inverse(x)) = 0.
  {
    std::vector<MultiPoly> args = xvars;
    for (const auto& inv : g.inverse.outputs) args.push_back(inv);
    for (std::size_t i = 0; i < n && v.inverse_identity; ++i) {
      MultiPoly diff = g.multiplication.outputs[i].substitute(args);
      if (!diff.is_zero()) {
        v.inverse_identity = false;
        v.detail = "m(x, inv(x)) != 0 at coordinate " + std::to_string(i) +
                   ", witness " + first_term(diff);
      }
    }
  }

  // Associativity over 3n variables.
  {
    std::size_t total = 3 * n;
    auto x3 = coordinate_vars(total, 0, n);
    auto y3 = coordinate_vars(total, n, n);
    auto z3 = coordinate_vars(total, 2 * n, n);

    std::vector<MultiPoly> xy_args = x3;
    xy_args.insert(xy_args.end(), y3.begin(), y3.end());
    std::vector<MultiPoly> xy;
    for (const auto& m : g.multiplication.outputs)
      xy.push_back(m.substitute(xy_args));

    std::vector<MultiPoly> yz_args = y3;
    yz_args.insert(yz_args.end(), z3.begin(), z3.end());
    std::vector<MultiPoly> yz;
    for (const auto& m : g.multiplication.outputs)
      yz.push_back(m.substitute(yz_args));

    std::vector<MultiPoly> left_args = xy;
    left_args.insert(left_args.end(), z3.begin(), z3.end());
    std::vector<MultiPoly> right_args = x3;
    right_args.insert(right_args.end(), yz.begin(), yz.end());
    for (std::size_t i = 0; i < n && v.associative; ++i) {
      MultiPoly diff = g.multiplication.outputs[i].substitute(left_args) -
                       g.multiplication.outputs[i].substitute(right_args);
      if (!diff.is_zero()) {
        v.associative = false;
        v.detail = "associativity fails at coordinate " + std::to_string(i) +
                   ", witness " + first_term(diff);
      }
    }
  }

  // Triangularity: block-j coordinate of m is x_j + y_j + poly(outer blocks).
  {
    std::vector<bool> outer_mask(2 * n, false);
    for (const auto& block : g.layer_blocks) {
      for (std::size_t i : block) {
        MultiPoly corr = g.multiplication.outputs[i] -
                         MultiPoly::variable(2 * n, i) -
                         MultiPoly::variable(2 * n, n + i);
        if (!corr.depends_only_on(outer_mask)) {
          v.triangular = false;
          v.detail = "coordinate " + std::to_string(i) +
                     " correction uses non-outer variables";
          break;
        }
      }
      if (!v.triangular) break;
      for (std::size_t i : block) {
        outer_mask[i] = true;
        outer_mask[n + i] = true;
      }
    }
  }

  for (const auto& p : g.multiplication.outputs)
    v.integer_coefficients = v.integer_coefficients && has_integer_coefficients(p);
  for (const auto& p : g.inverse.outputs)
    v.integer_coefficients = v.integer_coefficients && has_integer_coefficients(p);
  if (!v.integer_coefficients && v.detail.empty())
    v.detail = "group law has non-integer coefficients; Z^n is not a subgroup";
  return v;
}

std::vector<std::vector<std::size_t>> adapted_layer_blocks(
    const LieAlgebra<Rational>& L) {
  auto chain = lower_central_series(L);
  std::size_t n = L.dim();
  std::vector<int> depth(n, -1);
  for (std::size_t j = 0; j < chain.size(); ++j) {
    std::size_t aligned = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> ei(n, Rational(0));
      ei[i] = Rational(1);
      if (chain[j].cols() > 0 && in_column_span(chain[j], ei)) {
        ++aligned;
        depth[i] = static_cast<int>(j);
      }
    }
    if (aligned != chain[j].cols())
      throw NonIntegerLattice(
          "defining basis is not adapted to the lower central series");
  }
  std::vector<std::vector<std::size_t>> blocks(chain.size() - 1);
  for (std::size_t i = 0; i < n; ++i)
    blocks[static_cast<std::size_t>(depth[i])].push_back(i);
  while (!blocks.empty() && blocks.back().empty()) blocks.pop_back();
  for (const auto& b : blocks)
    check_internal(!b.empty(), "empty central-series layer block");
  return blocks;
}

namespace {

// Nested bracket [w_0, [w_1, [... w_m]]] of coordinate-vector words.
std::vector<MultiPoly> nested_bracket(
    const LieAlgebra<Rational>& L,
    const std::vector<const std::vector<MultiPoly>*>& word) {
  std::vector<MultiPoly> acc = *word.back();
  std::size_t n = L.dim();
  for (std::size_t w = word.size() - 1; w-- > 0;) {
    const std::vector<MultiPoly>& u = *word[w];
    std::size_t total = acc[0].nvars();
    std::vector<MultiPoly> next(n, MultiPoly(total));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::vector<Rational>& c = L.basis_bracket(i, j);
        MultiPoly uv = u[i] * acc[j];
        if (uv.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (!c[k].is_zero()) next[k] = next[k] + c[k] * uv;
      }
    acc = std::move(next);
  }
  return acc;
}

void enumerate_compositions(
    int budget, std::vector<std::pair<int, int>>* cur,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  if (!cur->empty()) emit(*cur);
  for (int r = 0; r <= budget; ++r)
    for (int s = 0; s + r <= budget; ++s) {
      if (r + s == 0) continue;
      cur->emplace_back(r, s);
      enumerate_compositions(budget - r - s, cur, emit);
      cur->pop_back();
    }
}

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= Rational(i);
  return f;
}

}  // namespace

PolynomialGroup bch_group_from_algebra(const LieAlgebra<Rational>& L,
                                       bool* integer_warning) {
  auto validation = validate_algebra(L);
  check_internal(validation.ok(), "BCH needs a valid nilpotent algebra");
  int cls = validation.nilpotency_class;
  if (cls > 6) throw ClassTooHigh("nilpotency class > 6 not supported");

  std::size_t n = L.dim();
  std::size_t total = 2 * n;
  std::vector<MultiPoly> X = coordinate_vars(total, 0, n);
  std::vector<MultiPoly> Y = coordinate_vars(total, n, n);
  std::vector<MultiPoly> Z(n, MultiPoly(total));

  std::vector<std::pair<int, int>> cur;
  enumerate_compositions(
      cls, &cur, [&](const std::vector<std::pair<int, int>>& comp) {
        int letters = 0;
        for (const auto& [r, s] : comp) letters += r + s;
        // Dynkin term: zero unless the word ends in a single repeated letter.
        const auto& [rl, sl] = comp.back();
        if (sl > 1 || (sl == 0 && rl > 1)) return;
        std::vector<const std::vector<MultiPoly>*> word;
        Rational denom(static_cast<long>(letters));
        for (const auto& [r, s] : comp) {
          for (int i = 0; i < r; ++i) word.push_back(&X);
          for (int i = 0; i < s; ++i) word.push_back(&Y);
          denom *= factorial(r) * factorial(s);
        }
        int m = static_cast<int>(comp.size());
        Rational coeff = Rational(m % 2 == 1 ? 1 : -1) / Rational(m) / denom;
        std::vector<MultiPoly> term = nested_bracket(L, word);
        for (std::size_t i = 0; i < n; ++i)
          if (!term[i].is_zero()) Z[i] = Z[i] + coeff * term[i];
      });

  PolynomialGroup g;
  g.dim = n;
  g.layer_blocks = adapted_layer_blocks(L);
  g.multiplication.in_vars = total;
  g.multiplication.outputs = std::move(Z);
  g.inverse = linear_map(Rational(-1) * RationalMatrix::identity(n));

  bool integral = true;
  for (const auto& p : g.multiplication.outputs)
    integral = integral && has_integer_coefficients(p);
  if (integer_warning) *integer_warning = !integral;
  return g;
}

GroupEndomorphism validate_endomorphism_map(const PolynomialGroup& g,
                                            const PolynomialMap& f) {
  std::size_t n = g.dim;
  check_internal(f.in_vars == n && f.out_vars() == n,
                 "endomorphism arity mismatch");
  if (!f.fixes_origin())
    throw NotHomomorphism("endomorphism does not fix the identity");

  // f(m(x,y)) = m(f(x), f(y)) over 2n variables.
  PolynomialMap lhs = f.after(g.multiplication);
  std::vector<MultiPoly> fx, fy;
  for (const auto& out : f.outputs) {
    fx.push_back(out.embed(2 * n, 0));
    fy.push_back(out.embed(2 * n, n));
  }
  std::vector<MultiPoly> args = fx;
  args.insert(args.end(), fy.begin(), fy.end());
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly diff =
        lhs.outputs[i] - g.multiplication.outputs[i].substitute(args);
    if (!diff.is_zero())
      throw NotHomomorphism("homomorphism identity fails at coordinate " +
                            std::to_string(i) + ", witness " +
                            first_term(diff));
  }

  for (std::size_t i = 0; i < n; ++i)
    if (!integer_valued_on_lattice(f.outputs[i]))
      throw NonIntegerCoefficients(
          "coordinate " + std::to_string(i) +
          " is not integer-valued on the lattice");

  GroupEndomorphism e;
  e.map = f;
  e.linear_part = f.linear_part();
  if (determinant(RationalMatrix::identity(n) - e.linear_part).is_zero())
    throw EigenvalueOne("linear part has eigenvalue 1");
  return e;
}

bool group_matches_algebra(const PolynomialGroup& g,
                           const LieAlgebra<Rational>& L) {
  std::size_t n = g.dim;
  if (L.dim() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // [e_i, e_j]_k = coeff of x_i y_j in m_k minus coeff of x_j y_i.
      std::vector<unsigned> eij(2 * n, 0), eji(2 * n, 0);
      eij[i] += 1; eij[n + j] += 1;
      eji[j] += 1; eji[n + i] += 1;
      for (std::size_t k = 0; k < n; ++k) {
        Rational c = g.multiplication.outputs[k].coeff(eij) -
                     g.multiplication.outputs[k].coeff(eji);
        if (c != L.basis_bracket(i, j)[k]) return false;
      }
    }
  return true;
}

}  // namespace lefschetz
