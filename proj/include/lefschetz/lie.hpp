#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

// Subsets of {0..n-1} of size k, each ascending, in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

// Lie algebra given by structure constants over an exact scalar field K.
// brackets are stored as the full antisymmetric table c[i][j] in K^dim.
template <class K>
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim)
      : dim_(dim),
        c_(dim, std::vector<std::vector<K>>(dim, std::vector<K>(dim, K(0)))) {}

  std::size_t dim() const { return dim_; }

  // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const std::vector<K>& v) {
    check_internal(i < dim_ && j < dim_ && v.size() == dim_,
                   "bracket index out of range");
    c_[i][j] = v;
    c_[j][i].resize(dim_, K(0));
    for (std::size_t k = 0; k < dim_; ++k) c_[j][i][k] = K(0) - v[k];
  }
  const std::vector<K>& basis_bracket(std::size_t i, std::size_t j) const {
    return c_[i][j];
  }

  std::vector<K> bracket(const std::vector<K>& x,
                         const std::vector<K>& y) const {
    std::vector<K> r(dim_, K(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == K(0)) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == K(0)) continue;
        K f = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          r[k] = r[k] + f * c_[i][j][k];
      }
    }
    return r;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<std::vector<K>>> c_;
};

struct AlgebraValidation {
  bool antisymmetric = true;
  bool jacobi = true;
  bool nilpotent = true;
  int nilpotency_class = 0;
  std::string detail;
  bool ok() const { return antisymmetric && jacobi && nilpotent; }
};

// Span of the given generating vectors, as a matrix whose columns form a
// reduced basis.
template <class K>
Matrix<K> column_span_basis(const Matrix<K>& gens) {
  if (gens.cols() == 0) return Matrix<K>(gens.rows(), 0);
  Matrix<K> rt = gens.transpose();
  RrefResult rr = rref_in_place(rt);
  Matrix<K> out(gens.rows(), rr.rank);
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < gens.rows(); ++j) out.at(j, i) = rt.at(i, j);
  return out;
}

// Lower central series c_0 = L, c_{j+1} = [L, c_j] as column-basis matrices,
// ending with the zero algebra (empty matrix). Throws NotNilpotent if the
// chain stabilizes above zero.
template <class K>
std::vector<Matrix<K>> lower_central_series(const LieAlgebra<K>& L) {
  std::size_t n = L.dim();
  std::vector<Matrix<K>> chain{Matrix<K>::identity(n)};
  for (;;) {
    const Matrix<K>& prev = chain.back();
    if (prev.cols() == 0) break;
    std::vector<std::vector<K>> gens;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<K> ei(n, K(0));
      ei[i] = K(1);
      for (std::size_t j = 0; j < prev.cols(); ++j) {
        std::vector<K> b = L.bracket(ei, prev.column(j));
        bool zero = true;
        for (const auto& x : b) zero = zero && x == K(0);
        if (!zero) gens.push_back(std::move(b));
      }
    }
    Matrix<K> next = column_span_basis(Matrix<K>::from_columns(n, gens));
    if (next.cols() >= prev.cols())
      throw NotNilpotent("lower central series stabilizes at dimension " +
                         std::to_string(prev.cols()));
    chain.push_back(std::move(next));
  }
  return chain;
}

template <class K>
AlgebraValidation validate_algebra(const LieAlgebra<K>& L) {
  AlgebraValidation v;
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n && v.antisymmetric; ++i)
    for (std::size_t j = 0; j <= i && v.antisymmetric; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(L.basis_bracket(i, j)[k] == K(0) - L.basis_bracket(j, i)[k])) {
          v.antisymmetric = false;
          v.detail = "antisymmetry fails at pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
          break;
        }
  for (std::size_t i = 0; i < n && v.jacobi; ++i)
    for (std::size_t j = i + 1; j < n && v.jacobi; ++j)
      for (std::size_t k = j + 1; k < n && v.jacobi; ++k) {
        std::vector<K> ei(n, K(0)), ej(n, K(0)), ek(n, K(0));
        ei[i] = K(1);
        ej[j] = K(1);
        ek[k] = K(1);
        std::vector<K> s = L.bracket(L.bracket(ei, ej), ek);
        std::vector<K> t = L.bracket(L.bracket(ej, ek), ei);
        std::vector<K> u = L.bracket(L.bracket(ek, ei), ej);
        for (std::size_t m = 0; m < n; ++m)
          if (!(s[m] + t[m] + u[m] == K(0))) {
            v.jacobi = false;
            v.detail = "Jacobi fails on triple (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) + ")";
            break;
          }
      }
  if (v.antisymmetric && v.jacobi) {
    try {
      auto chain = lower_central_series(L);
      v.nilpotency_class = static_cast<int>(chain.size()) - 1;
    } catch (const NotNilpotent& e) {
      v.nilpotent = false;
      v.detail = e.what();
    }
  }
  return v;
}

// Bracket-closed subspace with its induced structure constants.
template <class K>
class Subalgebra {
 public:
  Subalgebra(const LieAlgebra<K>& parent, Matrix<K> basis)
      : parent_(&parent), basis_(std::move(basis)), induced_(basis_.cols()) {
    check_internal(basis_.rows() == parent.dim(), "subalgebra basis shape");
    check_internal(rank(basis_) == basis_.cols(),
                   "subalgebra basis not linearly independent");
    std::size_t r = basis_.cols();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        std::vector<K> b = parent.bracket(basis_.column(i), basis_.column(j));
        std::vector<K> coords;
        if (!solve_linear(basis_, b, &coords))
          throw NotClosedUnderBracket("bracket of basis vectors " +
                                      std::to_string(i) + "," +
                                      std::to_string(j) +
                                      " leaves the subspace");
        induced_.set_bracket(i, j, coords);
      }
  }

  const LieAlgebra<K>& parent() const { return *parent_; }
  const Matrix<K>& basis() const { return basis_; }
  const LieAlgebra<K>& induced() const { return induced_; }
  std::size_t dim() const { return basis_.cols(); }

 private:
  const LieAlgebra<K>* parent_;
  Matrix<K> basis_;
  LieAlgebra<K> induced_;
};

// Chevalley-Eilenberg complex of an algebra with trivial coefficients:
// d[q] maps wedge degree q to degree q+1 in the lexicographic dual wedge
// bases; d.back() is the empty map out of top degree.
template <class K>
struct CEComplex {
  std::size_t dim = 0;
  std::vector<Matrix<K>> d;
};

template <class K>
CEComplex<K> ce_complex(const LieAlgebra<K>& p) {
  int m = static_cast<int>(p.dim());
  CEComplex<K> c;
  c.dim = p.dim();
  for (int q = 0; q <= m; ++q) {
    auto rows_ix = combinations(m, q + 1);
    auto cols_ix = combinations(m, q);
    Matrix<K> d(rows_ix.size(), cols_ix.size());
    // Entry at (T, S): coefficient of e_T in d(e_S), read off by evaluating
    // the CE formula on the basis vectors indexed by T.
    const std::vector<std::vector<int>>& col_lookup = cols_ix;
    for (std::size_t ti = 0; ti < rows_ix.size(); ++ti) {
      const auto& T = rows_ix[ti];
      for (std::size_t a = 0; a < T.size(); ++a)
        for (std::size_t b = a + 1; b < T.size(); ++b) {
          const std::vector<K>& br = p.basis_bracket(
              static_cast<std::size_t>(T[a]), static_cast<std::size_t>(T[b]));
          std::vector<int> rest;
          for (std::size_t t = 0; t < T.size(); ++t)
            if (t != a && t != b) rest.push_back(T[t]);
          for (int k = 0; k < m; ++k) {
            if (br[static_cast<std::size_t>(k)] == K(0)) continue;
            bool dup = false;
            int below = 0;
            for (int rv : rest) {
              if (rv == k) dup = true;
              if (rv < k) ++below;
            }
            if (dup) continue;
            std::vector<int> S = rest;
            S.insert(S.begin() + below, k);
            auto it = std::lower_bound(col_lookup.begin(), col_lookup.end(), S);
            check_internal(it != col_lookup.end() && *it == S,
                           "wedge column lookup");
            std::size_t si = static_cast<std::size_t>(it - col_lookup.begin());
            // (-1)^{a+b} from the CE formula, times the sort sign of moving
            // e_k past the smaller surviving indices.
            int sign = ((a + b) % 2 == 0 ? 1 : -1) * (below % 2 == 0 ? 1 : -1);
            K term = br[static_cast<std::size_t>(k)];
            if (sign < 0) term = K(0) - term;
            d.at(ti, si) = d.at(ti, si) + term;
          }
        }
    }
    c.d.push_back(std::move(d));
  }
  // d o d = 0, exactly.
  for (std::size_t q = 0; q + 1 < c.d.size(); ++q)
    check_internal((c.d[q + 1] * c.d[q]).is_zero(), "CE differential d^2 != 0");
  return c;
}

template <class K>
std::vector<int> betti_numbers(const CEComplex<K>& c) {
  std::vector<int> b;
  std::size_t prev_rank = 0;
  for (std::size_t q = 0; q < c.d.size(); ++q) {
    std::size_t rk = rank(c.d[q]);
    std::size_t kerdim = c.d[q].cols() - rk;
    b.push_back(static_cast<int>(kerdim - prev_rank));
    prev_rank = rk;
  }
  return b;
}

// q-th exterior power of the transpose of f (the action on wedge covectors).
template <class K>
Matrix<K> wedge_dual_power(const Matrix<K>& f, int q) {
  int m = static_cast<int>(f.rows());
  auto ix = combinations(m, q);
  Matrix<K> w(ix.size(), ix.size());
  for (std::size_t t = 0; t < ix.size(); ++t)
    for (std::size_t s = 0; s < ix.size(); ++s) {
      std::vector<std::size_t> rows(ix[s].begin(), ix[s].end());
      std::vector<std::size_t> cols(ix[t].begin(), ix[t].end());
      w.at(t, s) = determinant_generic(f.submatrix(rows, cols));
    }
  return w;
}

// Trace of the induced map on H^q(p) = ker d_q / im d_{q-1}, computed as
// tr(f* on ker d_q) - tr(f* on im d_{q-1}); both must be f*-invariant.
template <class K>
K cohomology_trace(const LieAlgebra<K>& p, const CEComplex<K>& c,
                   const Matrix<K>& f_on_p, int degree) {
  check_internal(degree >= 0 && degree <= static_cast<int>(p.dim()),
                 "cohomology degree out of range");
  Matrix<K> w = wedge_dual_power(f_on_p, degree);
  const Matrix<K>& dq = c.d[static_cast<std::size_t>(degree)];

  Matrix<K> ker = Matrix<K>::from_columns(dq.cols(), kernel_basis(dq));
  K t(0);
  if (ker.cols() > 0) {
    Matrix<K> res;
    if (!restriction_matrix(w, ker, &res))
      throw NotInvariant("ker d_" + std::to_string(degree) +
                         " is not invariant under the induced map");
    t = trace(res);
  }
  if (degree > 0) {
    const Matrix<K>& dprev = c.d[static_cast<std::size_t>(degree - 1)];
    Matrix<K> cp = dprev;
    RrefResult rr = rref_in_place(cp);
    std::vector<std::size_t> all_rows(dprev.rows());
    for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
    Matrix<K> im = dprev.submatrix(all_rows, rr.pivot_columns);
    if (im.cols() > 0) {
      Matrix<K> res;
      if (!restriction_matrix(w, im, &res))
        throw NotInvariant("im d_" + std::to_string(degree - 1) +
                           " is not invariant under the induced map");
      t = t - trace(res);
    }
  }
  return t;
}

template <class K>
K cohomology_trace(const Subalgebra<K>& p, const Matrix<K>& f_on_p,
                   int degree) {
  CEComplex<K> c = ce_complex(p.induced());
  return cohomology_trace(p.induced(), c, f_on_p, degree);
}

// Alternating sum over all degrees; certified against det(1 - f|p).
template <class K>
K alternating_cohomology_trace(const LieAlgebra<K>& p, const Matrix<K>& f_on_p) {
  CEComplex<K> c = ce_complex(p);
  K acc(0);
  for (int q = 0; q <= static_cast<int>(p.dim()); ++q) {
    K t = cohomology_trace(p, c, f_on_p, q);
    acc = (q % 2 == 0) ? acc + t : acc - t;
  }
  Matrix<K> one_minus = Matrix<K>::identity(p.dim()) - f_on_p;
  check_internal(acc == determinant_generic(one_minus),
                 "alternating trace does not match det(1 - f|p)");
  return acc;
}

template <class K>
K alternating_cohomology_trace(const Subalgebra<K>& p, const Matrix<K>& f_on_p) {
  return alternating_cohomology_trace(p.induced(), f_on_p);
}

struct EndomorphismValidation {
  bool homomorphism = true;
  bool preserves_series = true;
  bool eigenvalue_one = false;
  std::string detail;
  bool ok() const { return homomorphism && preserves_series && !eigenvalue_one; }
};

// Checks that f (matrix on the defining basis) is a Lie algebra endomorphism
// without eigenvalue 1 and preserving the lower central series.
template <class K>
EndomorphismValidation validate_endomorphism(const LieAlgebra<K>& L,
                                             const Matrix<K>& f) {
  EndomorphismValidation v;
  std::size_t n = L.dim();
  check_internal(f.is_square() && f.rows() == n, "endomorphism shape");
  for (std::size_t i = 0; i < n && v.homomorphism; ++i)
    for (std::size_t j = i + 1; j < n && v.homomorphism; ++j) {
      std::vector<K> lhs = f.apply(L.basis_bracket(i, j));
      std::vector<K> rhs = L.bracket(f.column(i), f.column(j));
      if (!(lhs == rhs)) {
        v.homomorphism = false;
        v.detail = "bracket not preserved on pair (" + std::to_string(i) +
                   "," + std::to_string(j) + ")";
      }
    }
  if (v.homomorphism) {
    auto chain = lower_central_series(L);
    for (std::size_t c = 1; c < chain.size() && v.preserves_series; ++c)
      for (std::size_t j = 0; j < chain[c].cols(); ++j)
        if (!in_column_span(chain[c], f.apply(chain[c].column(j)))) {
          v.preserves_series = false;
          v.detail = "central series layer " + std::to_string(c) +
                     " is not invariant";
          break;
        }
  }
  Matrix<K> one_minus = Matrix<K>::identity(n) - f;
  v.eigenvalue_one = determinant_generic(one_minus) == K(0);
  if (v.eigenvalue_one && v.detail.empty()) v.detail = "1 is an eigenvalue";
  return v;
}

template <class K>
void require_valid_endomorphism(const LieAlgebra<K>& L, const Matrix<K>& f) {
  EndomorphismValidation v = validate_endomorphism(L, f);
  if (!v.homomorphism || !v.preserves_series) throw NotHomomorphism(v.detail);
  if (v.eigenvalue_one) throw EigenvalueOne(v.detail);
}

}  // namespace lefschetz
