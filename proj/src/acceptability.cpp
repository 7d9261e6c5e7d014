#include "lefschetz/acceptability.hpp"

namespace lefschetz {

namespace {

// Intersection basis of span(p) with span(c), both column spans over K.
Matrix<FieldElement> intersect_spans(const Matrix<FieldElement>& p,
                                     const Matrix<FieldElement>& c) {
  if (p.cols() == 0 || c.cols() == 0)
    return Matrix<FieldElement>(p.rows(), 0);
  Matrix<FieldElement> stacked = Matrix<FieldElement>::hconcat(p, c);
  auto ker = kernel_basis(stacked);
  std::vector<std::vector<FieldElement>> vecs;
  for (const auto& k : ker) {
    std::vector<FieldElement> x(k.begin(),
                                k.begin() + static_cast<long>(p.cols()));
    vecs.push_back(p.apply(x));
  }
  return Matrix<FieldElement>::from_columns(p.rows(), vecs);
}

std::vector<Integer> primitive_integer_covector(const std::vector<Rational>& v) {
  Integer den = lcm_denominators(v);
  std::vector<Integer> w;
  Integer g(0);
  for (const auto& x : v) {
    Rational s = x * Rational(den);
    w.push_back(s.numerator());
    Integer a = abs(w.back());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (sgn(g) > 0)
    for (auto& x : w) x /= g;
  return w;
}

}  // namespace

AcceptabilityReport is_gamma_acceptable(const LieAlgebra<Rational>& L,
                                        const Matrix<FieldElement>& p_basis) {
  std::size_t n = L.dim();
  check_internal(p_basis.rows() == n, "subalgebra basis shape");
  auto chain = lower_central_series(L);

  AcceptabilityReport report;
  report.acceptable = true;
  // Layers j = 0..k with c_{k+1} = 0.
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    Matrix<FieldElement> cj = to_field_matrix(chain[j]);
    const RationalMatrix& next_q = chain[j + 1];

    // Rational complement of c_{j+1} inside c_j.
    RationalMatrix extended = next_q;
    std::vector<std::vector<Rational>> comp_cols;
    for (std::size_t c = 0; c < chain[j].cols(); ++c) {
      std::vector<Rational> v = chain[j].column(c);
      if (extended.cols() == 0 || !in_column_span(extended, v)) {
        comp_cols.push_back(v);
        extended = RationalMatrix::hconcat(
            extended, RationalMatrix::from_columns(n, {v}));
      }
    }
    std::size_t layer_dim = comp_cols.size();
    check_internal(layer_dim > 0, "central series layer collapsed");
    Matrix<FieldElement> solver = to_field_matrix(
        RationalMatrix::hconcat(next_q, RationalMatrix::from_columns(n, comp_cols)));

    Matrix<FieldElement> pj =
        (j == 0) ? p_basis : intersect_spans(p_basis, cj);

    // Quotient coordinates of each p_j generator, expanded over the power
    // basis of alpha into a rational system.
    std::size_t field_deg = 1;
    for (std::size_t c = 0; c < pj.cols(); ++c)
      for (std::size_t r = 0; r < n; ++r)
        field_deg = std::max(field_deg, pj.at(r, c).coords().size());
    std::vector<std::vector<Rational>> expanded_cols;
    for (std::size_t c = 0; c < pj.cols(); ++c) {
      std::vector<FieldElement> coords;
      bool solved = solve_linear(solver, pj.column(c), &coords);
      check_internal(solved, "p_j does not lie in c_j");
      // quotient part = complement coefficients
      for (std::size_t e = 0; e < field_deg; ++e) {
        std::vector<Rational> col(layer_dim, Rational(0));
        bool nonzero = false;
        for (std::size_t d = 0; d < layer_dim; ++d) {
          const auto& fe = coords[next_q.cols() + d];
          Rational v = e < fe.coords().size() ? fe.coords()[e] : Rational(0);
          col[d] = v;
          nonzero = nonzero || !v.is_zero();
        }
        if (nonzero) expanded_cols.push_back(std::move(col));
      }
    }

    LayerVerdict verdict;
    verdict.layer = static_cast<int>(j);
    RationalMatrix q_expanded =
        RationalMatrix::from_columns(layer_dim, expanded_cols);
    auto ann = kernel_basis(q_expanded.transpose());
    if (ann.empty()) {
      verdict.dense = true;
    } else {
      verdict.dense = false;
      verdict.witness = primitive_integer_covector(ann.front());
    }
    report.acceptable = report.acceptable && verdict.dense;
    report.layers.push_back(std::move(verdict));
  }
  return report;
}

AcceptabilityReport is_gamma_acceptable(const LieAlgebra<Rational>& L,
                                        const Matrix<Rational>& p_basis) {
  return is_gamma_acceptable(L, to_field_matrix(p_basis));
}

}  // namespace lefschetz
