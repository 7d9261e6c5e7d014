#include "lefschetz/fixed_points.hpp"

#include <algorithm>

namespace lefschetz {

namespace {

struct Branch {
  std::vector<Rational> x;
  std::vector<Rational> gamma;  // integer values kept rational for evaluation
};

}  // namespace

std::vector<FixedPoint> fixed_points(const PolynomialGroup& g,
                                     const GroupEndomorphism& f) {
  std::size_t n = g.dim;
  GroupValidation gv = validate_group(g);
  if (!gv.integer_coefficients)
    throw NonIntegerLattice(
        "group law coefficients are not integers; Z^n is not a lattice");
  check_internal(gv.structural_ok(), "fixed points on an invalid group");

  // Structural shape of f across the layers: block-j coordinates are linear
  // in block j with corrections from outer blocks only, and the layer matrix
  // is an integer matrix without eigenvalue 1.
  std::vector<IntegerMatrix> layer_matrices;
  std::vector<bool> outer_mask(n, false);
  for (const auto& block : g.layer_blocks) {
    std::size_t d = block.size();
    RationalMatrix a(d, d);
    for (std::size_t bi = 0; bi < d; ++bi) {
      MultiPoly corr = f.map.outputs[block[bi]];
      for (std::size_t bj = 0; bj < d; ++bj) {
        a.at(bi, bj) = corr.linear_coeff(block[bj]);
        MultiPoly lin(n);
        std::vector<unsigned> e(n, 0);
        e[block[bj]] = 1;
        lin.add_term(e, a.at(bi, bj));
        corr = corr - lin;
      }
      if (!corr.depends_only_on(outer_mask))
        throw NotHomomorphism(
            "endomorphism is not triangular across the declared layer blocks");
    }
    for (std::size_t i : block) outer_mask[i] = true;
    IntegerMatrix ai;
    try {
      ai = to_integer_matrix(a);
    } catch (const NonIntegerCoefficients&) {
      throw NonIntegerLattice("layer matrix of the linear part is not integral");
    }
    if (determinant(RationalMatrix::identity(d) - a).is_zero())
      throw DegenerateLayer("det(I - A_j) = 0 on a layer block");
    layer_matrices.push_back(std::move(ai));
  }

  std::vector<Branch> branches{Branch{std::vector<Rational>(n, Rational(0)),
                                      std::vector<Rational>(n, Rational(0))}};
  for (std::size_t j = 0; j < g.layer_blocks.size(); ++j) {
    const auto& block = g.layer_blocks[j];
    std::size_t d = block.size();
    IntegerMatrix m(d, d);  // A_j - I
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        m.at(r, c) = layer_matrices[j].at(r, c) - (r == c ? 1 : 0);
    SmithNormalForm snf = smith_normal_form(m);

    std::vector<Branch> next;
    for (const Branch& br : branches) {
      // Corrections with the current and inner blocks zeroed: the remaining
      // value is exactly the outer-block contribution.
      std::vector<Rational> gx = br.gamma;
      gx.insert(gx.end(), br.x.begin(), br.x.end());
      std::vector<Rational> c(d);
      for (std::size_t bi = 0; bi < d; ++bi) {
        Rational p = g.multiplication.outputs[block[bi]].eval(gx);
        Rational q = f.map.outputs[block[bi]].eval(br.x);
        c[bi] = p - q;
      }
      // Solve (A_j - I) x ≡ c (mod Z^d) through z = V^{-1} x.
      std::vector<Rational> uc(d, Rational(0));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k)
          uc[r] += Rational(snf.u.at(r, k)) * c[k];

      std::vector<std::vector<Rational>> zs{{}};
      for (std::size_t r = 0; r < d; ++r) {
        Integer dr = snf.d.at(r, r);
        check_internal(sgn(dr) > 0, "zero invariant factor after layer check");
        Rational base = uc[r].frac();
        std::vector<std::vector<Rational>> grown;
        for (const auto& z : zs)
          for (Integer mr(0); mr < dr; ++mr) {
            auto zz = z;
            zz.push_back((base + Rational(mr)) / Rational(dr));
            grown.push_back(std::move(zz));
          }
        zs = std::move(grown);
      }
      for (const auto& z : zs) {
        Branch nb = br;
        std::vector<Rational> xblk(d, Rational(0));
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t k = 0; k < d; ++k)
            xblk[r] += Rational(snf.v.at(r, k)) * z[k];
        for (auto& v : xblk) v = v.frac();
        // gamma_j = (A_j - I) x + ... recovered from the defining equation.
        for (std::size_t r = 0; r < d; ++r) {
          Rational grow(0);
          for (std::size_t k = 0; k < d; ++k)
            grow += Rational(m.at(r, k)) * xblk[k];
          Rational gamma_r = grow - c[r];
          check_internal(gamma_r.is_integer(),
                         "layer solution gives non-integer lattice element");
          nb.gamma[block[r]] = gamma_r;
          nb.x[block[r]] = xblk[r];
        }
        next.push_back(std::move(nb));
      }
    }
    branches = std::move(next);
  }

  std::vector<FixedPoint> out;
  for (const Branch& br : branches) {
    // Independent verification by direct substitution.
    std::vector<Rational> gx = br.gamma;
    gx.insert(gx.end(), br.x.begin(), br.x.end());
    std::vector<Rational> lhs = g.multiplication.eval(gx);
    std::vector<Rational> rhs = f.map.eval(br.x);
    check_internal(lhs == rhs, "fixed point fails gamma*x = f(x)");
    FixedPoint fp;
    fp.coords = br.x;
    for (const auto& gamma : br.gamma) fp.gamma.push_back(gamma.numerator());
    out.push_back(std::move(fp));
  }
  std::sort(out.begin(), out.end(), [](const FixedPoint& a, const FixedPoint& b) {
    return a.coords < b.coords;
  });
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    check_internal(out[i].coords != out[i + 1].coords,
                   "duplicate fixed-point representatives");

  Rational total = determinant(RationalMatrix::identity(n) - f.linear_part).abs();
  check_internal(Rational(static_cast<long>(out.size())) == total,
                 "fixed point count does not match |det(1 - f_*)|");
  return out;
}

}  // namespace lefschetz
