#include <random>

#include "doctest.h"
#include "lefschetz/circle.hpp"
#include "lefschetz/fixed_points.hpp"
#include "lefschetz/group.hpp"
#include "test_support.hpp"

using namespace lefschetz;
using namespace lefschetz::testsupport;

TEST_CASE("multipoly basics") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  MultiPoly p = x * x + Rational(2) * x * y - MultiPoly::constant(2, Rational(3));
  CHECK(p.eval({Rational(1), Rational(2)}) == Rational(2));
  CHECK(p.linear_coeff(0) == Rational(0));
  CHECK(p.total_degree() == 2);

  // substitution: p(x -> x+y, y -> y) at (1,1): (2)^2 + 2*2*1 - 3 = 5
  MultiPoly q = p.substitute({x + y, y});
  CHECK(q.eval({Rational(1), Rational(1)}) == Rational(5));

  CHECK((p - p).is_zero());
  CHECK(p.depends_only_on({true, true}));
  CHECK_FALSE(p.depends_only_on({true, false}));
}

TEST_CASE("integer valuedness on the lattice") {
  MultiPoly y = MultiPoly::variable(1, 0);
  MultiPoly binom = Rational(1, 2) * (y * y - y);  // y(y-1)/2
  CHECK(integer_valued_on_lattice(binom));
  CHECK_FALSE(has_integer_coefficients(binom));
  CHECK_FALSE(integer_valued_on_lattice(Rational(1, 2) * y));
  CHECK(integer_valued_on_lattice(y * y));

  // multivariate: xy/1 + x(x-1)(x-2)/6
  MultiPoly x2 = MultiPoly::variable(2, 0), y2 = MultiPoly::variable(2, 1);
  MultiPoly c3 = Rational(1, 6) * x2 * (x2 - MultiPoly::constant(2, Rational(1))) *
                 (x2 - MultiPoly::constant(2, Rational(2)));
  CHECK(integer_valued_on_lattice(c3 + x2 * y2));
  CHECK_FALSE(integer_valued_on_lattice(c3 + Rational(1, 3) * y2));
}

TEST_CASE("validate heisenberg group") {
  auto g = heisenberg_group();
  auto v = validate_group(g);
  CHECK(v.ok());
  CHECK(g.layer_blocks.size() == 2);

  // spoiling the correction with 1/2 breaks lattice closure only
  PolynomialGroup bad = g;
  bad.multiplication.outputs[2] =
      MultiPoly::variable(6, 2) + MultiPoly::variable(6, 5) +
      Rational(1, 2) * MultiPoly::variable(6, 0) * MultiPoly::variable(6, 4);
  // fix the inverse so the group axioms still hold
  bad.inverse.outputs[2] = -MultiPoly::variable(3, 2) +
                           Rational(1, 2) * MultiPoly::variable(3, 0) *
                               MultiPoly::variable(3, 1);
  auto vb = validate_group(bad);
  CHECK(vb.structural_ok());
  CHECK_FALSE(vb.integer_coefficients);

  CHECK(validate_group(abelian_group(3)).ok());
  CHECK(group_matches_algebra(g, heisenberg3()));
  CHECK_FALSE(group_matches_algebra(abelian_group(3), heisenberg3()));
}

TEST_CASE("validate_group catches broken associativity") {
  auto g = heisenberg_group();
  g.multiplication.outputs[2] =
      g.multiplication.outputs[2] +
      MultiPoly::variable(6, 0) * MultiPoly::variable(6, 3);  // x*x' term
  auto v = validate_group(g);
  // m(x,0) = x now fails (x*x' vanishes at y=0... x' is the second factor)
  CHECK_FALSE(v.ok());
  CHECK_FALSE(v.detail.empty());
}

TEST_CASE("bch group from algebra") {
  bool warn = false;
  auto g = bch_group_from_algebra(heisenberg3(), &warn);
  CHECK(warn);  // the 1/2 [x,y] coefficient
  auto v = validate_group(g);
  CHECK(v.structural_ok());
  CHECK_FALSE(v.integer_coefficients);
  // z-coordinate: x2 + y2 + (x0 y1 - x1 y0)/2
  std::vector<unsigned> e(6, 0);
  e[0] = 1; e[4] = 1;
  CHECK(g.multiplication.outputs[2].coeff(e) == Rational(1, 2));
  CHECK(group_matches_algebra(g, heisenberg3()));

  bool warn_ab = true;
  auto ga = bch_group_from_algebra(abelian(3), &warn_ab);
  CHECK_FALSE(warn_ab);
  CHECK(validate_group(ga).ok());
  CHECK(ga.multiplication.outputs[0].total_degree() == 1);

  // class-3 filiform: degree-3 Dynkin terms; associativity is the real test
  bool warn_fil = false;
  auto gf = bch_group_from_algebra(filiform4(), &warn_fil);
  CHECK(warn_fil);
  CHECK(validate_group(gf).structural_ok());
  CHECK(group_matches_algebra(gf, filiform4()));

  bool warn_f5 = false;
  auto gf5 = bch_group_from_algebra(filiform5(), &warn_f5);
  CHECK(validate_group(gf5).structural_ok());
}

TEST_CASE("bch through the full supported nilpotency range") {
  // filiform chains [e0, e_i] = e_{i+1} of class 5 and 6: associativity of
  // the truncated series is the strongest check of the Dynkin terms
  for (std::size_t dim : {6u, 7u}) {
    LieAlgebra<Rational> L(dim);
    for (std::size_t i = 1; i + 1 < dim; ++i) {
      std::vector<Rational> v(dim, Rational(0));
      v[i + 1] = Rational(1);
      L.set_bracket(0, i, v);
    }
    auto av = validate_algebra(L);
    REQUIRE(av.ok());
    CHECK(av.nilpotency_class == static_cast<int>(dim) - 1);
    bool warn = false;
    auto g = bch_group_from_algebra(L, &warn);
    CHECK(warn);
    CHECK(validate_group(g).structural_ok());
    CHECK(group_matches_algebra(g, L));
  }

  // class 7 is out of range
  LieAlgebra<Rational> big(8);
  for (std::size_t i = 1; i + 1 < 8; ++i) {
    std::vector<Rational> v(8, Rational(0));
    v[i + 1] = Rational(1);
    big.set_bracket(0, i, v);
  }
  bool warn = false;
  CHECK_THROWS_AS(bch_group_from_algebra(big, &warn), ClassTooHigh);
}

namespace {

// Strictly upper triangular n x n matrices as an abstract Lie algebra, with
// the basis E_{ij} (i < j) ordered lexicographically.
struct UpperTriangular {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  LieAlgebra<Rational> algebra{0};

  explicit UpperTriangular(std::size_t size) : n(size), algebra(0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) basis.emplace_back(i, j);
    algebra = LieAlgebra<Rational>(basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        RationalMatrix c = to_matrix(unit(a)) * to_matrix(unit(b)) -
                           to_matrix(unit(b)) * to_matrix(unit(a));
        algebra.set_bracket(a, b, from_matrix(c));
      }
  }

  std::vector<Rational> unit(std::size_t k) const {
    std::vector<Rational> v(basis.size(), Rational(0));
    v[k] = Rational(1);
    return v;
  }
  RationalMatrix to_matrix(const std::vector<Rational>& coords) const {
    RationalMatrix m(n, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
      m.at(basis[k].first, basis[k].second) = coords[k];
    return m;
  }
  std::vector<Rational> from_matrix(const RationalMatrix& m) const {
    std::vector<Rational> v(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      v[k] = m.at(basis[k].first, basis[k].second);
    return v;
  }

  RationalMatrix exp(const RationalMatrix& a) const {
    RationalMatrix acc = RationalMatrix::identity(n);
    RationalMatrix term = RationalMatrix::identity(n);
    Rational fact(1);
    for (std::size_t k = 1; k < n; ++k) {
      term = term * a;
      fact *= Rational(static_cast<long>(k));
      acc = acc + (Rational(1) / fact) * term;
    }
    return acc;
  }
  RationalMatrix log(const RationalMatrix& u) const {
    RationalMatrix x = u - RationalMatrix::identity(n);
    RationalMatrix acc(n, n);
    RationalMatrix term = RationalMatrix::identity(n);
    for (std::size_t k = 1; k < n; ++k) {
      term = term * x;
      Rational c(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
      acc = acc + c * term;
    }
    return acc;
  }
};

}  // namespace

TEST_CASE("bch series agrees with matrix exp/log in unitriangular groups") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> num(-2, 2);
  for (std::size_t size : {3u, 4u, 5u}) {  // nilpotency classes 2, 3, 4
    UpperTriangular ut(size);
    REQUIRE(validate_algebra(ut.algebra).ok());
    bool warn = false;
    auto g = bch_group_from_algebra(ut.algebra, &warn);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> a(ut.basis.size()), b(ut.basis.size());
      for (auto& v : a) v = Rational(num(rng), 1 + (num(rng) + 3));
      for (auto& v : b) v = Rational(num(rng), 1 + (num(rng) + 3));
      RationalMatrix prod = ut.exp(ut.to_matrix(a)) * ut.exp(ut.to_matrix(b));
      std::vector<Rational> expected = ut.from_matrix(ut.log(prod));
      CHECK(g.multiply(a, b) == expected);
    }
  }
}

TEST_CASE("validate_endomorphism_map on the heisenberg fixture") {
  auto g = heisenberg_group();
  auto e = validate_endomorphism_map(g, heisenberg_endomorphism());
  // columns are images (1,2,0), (1,1,1/2), (0,0,-1)
  CHECK(e.linear_part.at(0, 0) == Rational(1));
  CHECK(e.linear_part.at(1, 0) == Rational(2));
  CHECK(e.linear_part.at(2, 0) == Rational(0));
  CHECK(e.linear_part.at(2, 1) == Rational(1, 2));
  CHECK(e.linear_part.at(2, 2) == Rational(-1));

  // x -> -x on R/Z
  auto c = abelian_group(1);
  auto minus = validate_endomorphism_map(
      c, linear_map(Rational(-1) * RationalMatrix::identity(1)));
  CHECK(minus.linear_part.at(0, 0) == Rational(-1));

  // cat map on T^2
  auto t2 = abelian_group(2);
  CHECK_NOTHROW(validate_endomorphism_map(t2, linear_map(cat_map())));
}

TEST_CASE("validate_endomorphism_map error paths") {
  auto t2 = abelian_group(2);
  // not a homomorphism: x -> x^2 on an abelian group
  PolynomialMap sq;
  sq.in_vars = 2;
  sq.outputs.push_back(MultiPoly::variable(2, 0) * MultiPoly::variable(2, 0));
  sq.outputs.push_back(MultiPoly::variable(2, 1));
  CHECK_THROWS_AS(validate_endomorphism_map(t2, sq), NotHomomorphism);

  // does not preserve the lattice
  RationalMatrix half(2, 2);
  half.at(0, 0) = Rational(1, 2);
  half.at(1, 1) = 2;
  CHECK_THROWS_AS(validate_endomorphism_map(t2, linear_map(half)),
                  NonIntegerCoefficients);

  CHECK_THROWS_AS(
      validate_endomorphism_map(t2, identity_map(2)), EigenvalueOne);

  PolynomialMap off;  // does not fix the origin
  off.in_vars = 2;
  off.outputs.push_back(MultiPoly::variable(2, 0) +
                        MultiPoly::constant(2, Rational(1)));
  off.outputs.push_back(MultiPoly::variable(2, 1));
  CHECK_THROWS_AS(validate_endomorphism_map(t2, off), NotHomomorphism);
}

TEST_CASE("heisenberg endomorphism is invertible with a lattice inverse") {
  // g[x,y,z] = [y-x, 2x-y, x^2 - z - (2x-y)(2x-y-1)/2] inverts f, so the
  // induced nilmanifold map is an automorphism, not just a covering.
  PolynomialMap g;
  g.in_vars = 3;
  MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1),
            z = MultiPoly::variable(3, 2);
  g.outputs.push_back(y - x);
  g.outputs.push_back(x + x - y);
  MultiPoly w = x + x - y;
  g.outputs.push_back(x * x - z -
                      Rational(1, 2) * (w * w - w));
  auto grp = heisenberg_group();
  CHECK_NOTHROW(validate_endomorphism_map(grp, g));

  PolynomialMap f = heisenberg_endomorphism();
  PolynomialMap id = identity_map(3);
  PolynomialMap fg = f.after(g), gf = g.after(f);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(fg.outputs[i] == id.outputs[i]);
    CHECK(gf.outputs[i] == id.outputs[i]);
  }
}

TEST_CASE("heisenberg fixed points") {
  auto g = heisenberg_group();
  auto e = validate_endomorphism_map(g, heisenberg_endomorphism());
  auto pts = fixed_points(g, e);
  REQUIRE(pts.size() == 4);
  using V = std::vector<Rational>;
  CHECK(pts[0].coords == V{Rational(0), Rational(0), Rational(0)});
  CHECK(pts[1].coords == V{Rational(0), Rational(0), Rational(1, 2)});
  CHECK(pts[2].coords == V{Rational(1, 2), Rational(0), Rational(1, 8)});
  CHECK(pts[3].coords == V{Rational(1, 2), Rational(0), Rational(5, 8)});
}

TEST_CASE("torus fixed points") {
  auto t2 = abelian_group(2);
  auto cat = validate_endomorphism_map(t2, linear_map(cat_map()));
  auto pts = fixed_points(t2, cat);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].coords == std::vector<Rational>{Rational(0), Rational(0)});

  auto c = abelian_group(1);
  auto minus = validate_endomorphism_map(
      c, linear_map(Rational(-1) * RationalMatrix::identity(1)));
  auto mp = fixed_points(c, minus);
  REQUIRE(mp.size() == 2);
  CHECK(mp[0].coords[0] == Rational(0));
  CHECK(mp[1].coords[0] == Rational(1, 2));
}

TEST_CASE("fixed points refuse non-integer groups") {
  bool warn = false;
  auto g = bch_group_from_algebra(heisenberg3(), &warn);
  REQUIRE(warn);
  PolynomialMap f = linear_map(Rational(2) * RationalMatrix::identity(3));
  // the doubling map is an endomorphism of the BCH group law
  GroupEndomorphism e{f, f.linear_part()};
  CHECK_THROWS_AS(fixed_points(g, e), NonIntegerLattice);
}

TEST_CASE("fixed point enumeration matches the grid oracle") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dims(1, 3);
  int done = 0;
  while (done < 60) {
    std::size_t n = static_cast<std::size_t>(dims(rng));
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = entry(rng);
    Polynomial cp = char_poly(a);
    if (cp(Rational(1)).is_zero()) continue;
    if (classify_unit_circle(cp).on != 0) continue;  // hyperbolic only
    Rational count = determinant(RationalMatrix::identity(n) - a).abs();
    if (count > Rational(50)) continue;

    auto g = abelian_group(n);
    auto e = validate_endomorphism_map(g, linear_map(a));
    auto pts = fixed_points(g, e);
    auto oracle = torus_fixed_points_oracle(a);
    REQUIRE(pts.size() == oracle.size());
    CHECK(Rational(static_cast<long>(pts.size())) == count);
    for (std::size_t i = 0; i < pts.size(); ++i)
      CHECK(pts[i].coords == oracle[i]);
    ++done;
  }
}
