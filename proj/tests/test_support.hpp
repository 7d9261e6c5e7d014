#pragma once

// Shared fixture algebras and deterministic random generators used by the
// unit suites and the acceptance runner.

#include <algorithm>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "lefschetz/group.hpp"
#include "lefschetz/lie.hpp"
#include "lefschetz/matrix.hpp"

namespace lefschetz::testsupport {

// Heisenberg group in the matrix-model coordinates: multiplication
// [x,y,z][x',y',z'] = [x+x', y+y', z+z'+x*y'], inverse [-x,-y,xy-z].
inline PolynomialGroup heisenberg_group() {
  PolynomialGroup g;
  g.dim = 3;
  g.layer_blocks = {{0, 1}, {2}};
  g.multiplication.in_vars = 6;
  for (std::size_t i = 0; i < 3; ++i) {
    MultiPoly p = MultiPoly::variable(6, i) + MultiPoly::variable(6, 3 + i);
    g.multiplication.outputs.push_back(p);
  }
  g.multiplication.outputs[2] =
      g.multiplication.outputs[2] +
      MultiPoly::variable(6, 0) * MultiPoly::variable(6, 4);
  g.inverse.in_vars = 3;
  for (std::size_t i = 0; i < 3; ++i)
    g.inverse.outputs.push_back(-MultiPoly::variable(3, i));
  g.inverse.outputs[2] =
      g.inverse.outputs[2] + MultiPoly::variable(3, 0) * MultiPoly::variable(3, 1);
  return g;
}

// f[x,y,z] = [x+y, 2x+y, -z + (x+y)^2 - y(y-1)/2]
inline PolynomialMap heisenberg_endomorphism() {
  PolynomialMap f;
  f.in_vars = 3;
  MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1),
            z = MultiPoly::variable(3, 2);
  f.outputs.push_back(x + y);
  f.outputs.push_back(x + x + y);
  MultiPoly s = x + y;
  f.outputs.push_back(-z + s * s - Rational(1, 2) * (y * y - y));
  return f;
}

inline PolynomialGroup abelian_group(std::size_t n) {
  PolynomialGroup g;
  g.dim = n;
  g.layer_blocks = {{}};
  for (std::size_t i = 0; i < n; ++i) g.layer_blocks[0].push_back(i);
  g.multiplication.in_vars = 2 * n;
  for (std::size_t i = 0; i < n; ++i)
    g.multiplication.outputs.push_back(MultiPoly::variable(2 * n, i) +
                                       MultiPoly::variable(2 * n, n + i));
  g.inverse.in_vars = n;
  for (std::size_t i = 0; i < n; ++i)
    g.inverse.outputs.push_back(-MultiPoly::variable(n, i));
  return g;
}

inline LieAlgebra<Rational> abelian(std::size_t n) {
  return LieAlgebra<Rational>(n);
}

// [e0,e1] = e2
inline LieAlgebra<Rational> heisenberg3() {
  LieAlgebra<Rational> L(3);
  L.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
  return L;
}

// [e0,e1] = e2, [e0,e2] = e3
inline LieAlgebra<Rational> filiform4() {
  LieAlgebra<Rational> L(4);
  L.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1), Rational(0)});
  L.set_bracket(0, 2, {Rational(0), Rational(0), Rational(0), Rational(1)});
  return L;
}

// [e0,e1] = e2, [e0,e2] = e3, [e0,e3] = e4
inline LieAlgebra<Rational> filiform5() {
  LieAlgebra<Rational> L(5);
  L.set_bracket(0, 1, {0, 0, Rational(1), 0, 0});
  L.set_bracket(0, 2, {0, 0, 0, Rational(1), 0});
  L.set_bracket(0, 3, {0, 0, 0, 0, Rational(1)});
  return L;
}

// [e0,e1] = e4, [e2,e3] = e4 (5-dimensional Heisenberg)
inline LieAlgebra<Rational> heisenberg5() {
  LieAlgebra<Rational> L(5);
  L.set_bracket(0, 1, {0, 0, 0, 0, Rational(1)});
  L.set_bracket(2, 3, {0, 0, 0, 0, Rational(1)});
  return L;
}

// sl2-style brackets: not nilpotent.
inline LieAlgebra<Rational> sl2like() {
  LieAlgebra<Rational> L(3);
  // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
  L.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
  L.set_bracket(2, 0, {Rational(2), Rational(0), Rational(0)});
  L.set_bracket(2, 1, {Rational(0), Rational(-2), Rational(0)});
  return L;
}

// Columns are images of X, Y, Z for the Heisenberg nilmanifold map
// f(a,b,c) = (a+b, 2a+b, b/2 - c).
inline RationalMatrix heisenberg_fstar() {
  RationalMatrix m(3, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 2) = 0;
  m.at(1, 0) = 2; m.at(1, 1) = 1; m.at(1, 2) = 0;
  m.at(2, 0) = 0; m.at(2, 1) = Rational(1, 2); m.at(2, 2) = -1;
  return m;
}

inline RationalMatrix cat_map() {
  RationalMatrix m(2, 2);
  m.at(0, 0) = 2; m.at(0, 1) = 1;
  m.at(1, 0) = 1; m.at(1, 1) = 1;
  return m;
}

// A nilpotent algebra together with a nontrivial integer automorphism,
// conjugated by a random unimodular triangular change of basis. Exercises
// the alternating-trace identity on exact data.
struct AlgebraWithAutomorphism {
  LieAlgebra<Rational> algebra;
  RationalMatrix automorphism;
};

inline RationalMatrix random_unimodular_upper(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::uniform_int_distribution<int> s(0, 1);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = s(rng) ? 1 : -1;
    for (std::size_t j = i + 1; j < n; ++j) m.at(i, j) = d(rng);
  }
  return m;
}

inline RationalMatrix inverse_of_unimodular(const RationalMatrix& m) {
  std::size_t n = m.rows();
  Matrix<Rational> aug = Matrix<Rational>::hconcat(m, RationalMatrix::identity(n));
  rref_in_place(aug);
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// Structure constants of L rewritten in the basis given by the columns of s.
inline LieAlgebra<Rational> change_basis(const LieAlgebra<Rational>& L,
                                         const RationalMatrix& s,
                                         const RationalMatrix& sinv) {
  std::size_t n = L.dim();
  LieAlgebra<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.set_bracket(i, j, sinv.apply(L.bracket(s.column(i), s.column(j))));
  return out;
}

inline AlgebraWithAutomorphism random_algebra_with_automorphism(
    std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<int> nz(1, 3);
  std::uniform_int_distribution<int> anyc(-3, 3);
  std::uniform_int_distribution<int> dimd(1, 5);
  auto nonzero = [&] {
    int v = nz(rng);
    return std::uniform_int_distribution<int>(0, 1)(rng) ? v : -v;
  };

  LieAlgebra<Rational> L(1);
  RationalMatrix f;
  switch (pick(rng)) {
    case 0: {  // abelian with an arbitrary invertible integer matrix
      std::size_t n = static_cast<std::size_t>(dimd(rng));
      L = abelian(n);
      do {
        f = RationalMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) f.at(i, j) = anyc(rng);
      } while (determinant(f).is_zero());
      break;
    }
    case 1: {  // Heisenberg: GL2 on (e0,e1), e2 scaled by the determinant
      L = heisenberg3();
      int a, b, c, d;
      do {
        a = anyc(rng); b = anyc(rng); c = anyc(rng); d = anyc(rng);
      } while (a * d - b * c == 0);
      f = RationalMatrix(3, 3);
      f.at(0, 0) = a; f.at(0, 1) = b;
      f.at(1, 0) = c; f.at(1, 1) = d;
      f.at(2, 0) = anyc(rng); f.at(2, 1) = anyc(rng);
      f.at(2, 2) = a * d - b * c;
      break;
    }
    case 2: {  // filiform4: e0 -> a e0 + b e1 + ..., e1 -> d e1 + ...
      L = filiform4();
      int a = nonzero(), d = nonzero(), b = anyc(rng);
      int x = anyc(rng), y = anyc(rng), z = anyc(rng), w = anyc(rng);
      f = RationalMatrix(4, 4);
      f.at(0, 0) = a; f.at(1, 0) = b; f.at(2, 0) = x; f.at(3, 0) = y;
      f.at(1, 1) = d; f.at(2, 1) = z; f.at(3, 1) = w;
      f.at(2, 2) = a * d; f.at(3, 2) = Rational(a) * Rational(z);
      f.at(3, 3) = Rational(a) * Rational(a) * Rational(d);
      break;
    }
    case 3: {  // heisenberg5: symplectic-style block scaling
      L = heisenberg5();
      int a = nonzero(), d = nonzero();
      f = RationalMatrix(5, 5);
      f.at(0, 0) = a; f.at(1, 1) = d;
      f.at(2, 2) = a; f.at(3, 3) = d;
      f.at(4, 0) = anyc(rng); f.at(4, 2) = anyc(rng);
      f.at(4, 4) = a * d;
      break;
    }
    default: {  // filiform5 graded scaling
      L = filiform5();
      int a = nonzero(), d = nonzero();
      f = RationalMatrix(5, 5);
      f.at(0, 0) = a; f.at(1, 0) = anyc(rng);
      f.at(1, 1) = d;
      f.at(2, 2) = a * d;
      f.at(3, 3) = Rational(a) * Rational(a) * Rational(d);
      f.at(4, 4) = Rational(a) * Rational(a) * Rational(a) * Rational(d);
      break;
    }
  }

  RationalMatrix s = random_unimodular_upper(rng, L.dim());
  RationalMatrix sinv = inverse_of_unimodular(s);
  return AlgebraWithAutomorphism{change_basis(L, s, sinv), sinv * f * s};
}

// Brute-force oracle for fixed points of an integer matrix acting on the
// torus R^n/Z^n: scans x = (A-I)^{-1} m over all integer vectors m in a
// sufficient box and keeps the representatives in [0,1)^n.
inline std::vector<std::vector<Rational>> torus_fixed_points_oracle(
    const RationalMatrix& a) {
  std::size_t n = a.rows();
  RationalMatrix m = a - RationalMatrix::identity(n);
  check_internal(!determinant(m).is_zero(), "oracle needs det(A-I) != 0");
  RationalMatrix aug = RationalMatrix::hconcat(m, RationalMatrix::identity(n));
  rref_in_place(aug);
  RationalMatrix minv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) minv.at(i, j) = aug.at(i, n + j);

  std::vector<long> lo(n, 0), hi(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn(0), mx(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (m.at(i, j).sign() < 0) mn += m.at(i, j);
      else mx += m.at(i, j);
    }
    lo[i] = static_cast<long>(mn.floor().get_si());
    hi[i] = static_cast<long>(mx.floor().get_si()) + 1;
  }
  std::vector<std::vector<Rational>> found;
  std::vector<long> cur(n, 0);
  std::function<void(std::size_t)> scan = [&](std::size_t d) {
    if (d == n) {
      std::vector<Rational> mm(n);
      for (std::size_t i = 0; i < n; ++i) mm[i] = Rational(cur[i]);
      std::vector<Rational> x = minv.apply(mm);
      for (const auto& c : x)
        if (c.sign() < 0 || c >= Rational(1)) return;
      found.push_back(x);
      return;
    }
    for (long v = lo[d]; v <= hi[d]; ++v) {
      cur[d] = v;
      scan(d + 1);
    }
  };
  scan(0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace lefschetz::testsupport
