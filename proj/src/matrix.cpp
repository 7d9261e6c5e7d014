#include "lefschetz/matrix.hpp"

namespace lefschetz {

namespace {

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  check_internal(sgn(r) == 0, "fraction-free elimination division not exact");
  return q;
}

// Clear denominators row by row; scale[i] > 0 multiplies row i.
IntegerMatrix scale_rows_to_integer(const RationalMatrix& m,
                                    std::vector<Integer>* scale) {
  IntegerMatrix n(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = lcm_denominators(m.row(i));
    if (scale) scale->push_back(l);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational s = m.at(i, j) * Rational(l);
      check_internal(s.is_integer(), "row scaling failed");
      n.at(i, j) = s.numerator();
    }
  }
  return n;
}

// Fraction-free forward elimination (Bareiss). Returns pivot columns; on exit
// the matrix is upper echelon with exact integer entries. sign_flips counts
// row swaps, last_pivot receives the final pivot value.
std::vector<std::size_t> bareiss_forward(IntegerMatrix& a, int* sign_flips,
                                         Integer* last_pivot) {
  std::vector<std::size_t> pivots;
  Integer prev(1);
  int flips = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(a.at(piv, c)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
      ++flips;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        a.at(i, j) =
            exact_div(a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j), prev);
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    pivots.push_back(c);
    ++r;
  }
  if (sign_flips) *sign_flips = flips;
  if (last_pivot) *last_pivot = prev;
  return pivots;
}

}  // namespace

RrefResult rref(const RationalMatrix& m, RationalMatrix* out) {
  IntegerMatrix a = scale_rows_to_integer(m, nullptr);
  std::vector<std::size_t> pivots = bareiss_forward(a, nullptr, nullptr);

  // Jordan phase over the rationals: normalize pivots, eliminate upwards.
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = Rational(a.at(i, j));
  for (std::size_t p = pivots.size(); p-- > 0;) {
    std::size_t c = pivots[p];
    Rational inv = Rational(1) / r.at(p, c);
    for (std::size_t j = c; j < r.cols(); ++j) r.at(p, j) = inv * r.at(p, j);
    for (std::size_t i = 0; i < p; ++i) {
      Rational f = r.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < r.cols(); ++j)
        r.at(i, j) = r.at(i, j) - f * r.at(p, j);
    }
  }
  if (out) *out = std::move(r);
  RrefResult res;
  res.pivot_columns = std::move(pivots);
  res.rank = res.pivot_columns.size();
  return res;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw NonSquare("determinant of non-square matrix");
  if (m.rows() == 0) return Rational(1);
  std::vector<Integer> scale;
  IntegerMatrix a = scale_rows_to_integer(m, &scale);
  int flips = 0;
  Integer last(1);
  std::vector<std::size_t> pivots = bareiss_forward(a, &flips, &last);
  if (pivots.size() < m.rows()) return Rational(0);
  Integer den(1);
  for (const auto& s : scale) den *= s;
  Rational d(last, den);
  return (flips % 2 == 0) ? d : -d;
}

Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw NonSquare("determinant of non-square matrix");
  if (m.rows() == 0) return Integer(1);
  IntegerMatrix a = m;
  int flips = 0;
  Integer last(1);
  std::vector<std::size_t> pivots = bareiss_forward(a, &flips, &last);
  if (pivots.size() < m.rows()) return Integer(0);
  return (flips % 2 == 0) ? last : Integer(-last);
}

bool is_integer_matrix(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_integer()) return false;
  return true;
}

IntegerMatrix to_integer_matrix(const RationalMatrix& m) {
  IntegerMatrix n(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_integer())
        throw NonIntegerCoefficients("matrix entry " + m.at(i, j).str() +
                                     " is not an integer");
      n.at(i, j) = m.at(i, j).numerator();
    }
  return n;
}

RationalMatrix to_rational_matrix(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rational(m.at(i, j));
  return r;
}

namespace {

struct SnfWork {
  IntegerMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row j
  void row_sub(std::size_t i, std::size_t j, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
  }
  // col i -= q * col j
  void col_sub(std::size_t i, std::size_t j, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }

  // Smallest |entry| != 0 in the trailing block at (t,t); false if block zero.
  bool find_pivot(std::size_t t, std::size_t* pi, std::size_t* pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (sgn(a.at(i, j)) == 0) continue;
        Integer v = abs(a.at(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          *pi = i;
          *pj = j;
        }
      }
    return found;
  }

  void clear_position(std::size_t t) {
    for (;;) {
      std::size_t pi = t, pj = t;
      if (!find_pivot(t, &pi, &pj)) return;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a.at(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
        row_sub(i, t, q);
        if (sgn(a.at(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a.at(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
        col_sub(j, t, q);
        if (sgn(a.at(t, j)) != 0) dirty = true;
      }
      if (!dirty) {
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows() && clean; ++i)
          if (sgn(a.at(i, t)) != 0) clean = false;
        for (std::size_t j = t + 1; j < a.cols() && clean; ++j)
          if (sgn(a.at(t, j)) != 0) clean = false;
        if (clean) return;
      }
    }
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& m) {
  SnfWork w{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) w.clear_position(t);

  for (std::size_t t = 0; t < n; ++t)
    if (sgn(w.a.at(t, t)) < 0) w.negate_row(t);

  // Enforce the divisibility chain d_i | d_{i+1}.
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Integer &di = w.a.at(i, i), &dj = w.a.at(i + 1, i + 1);
      if (sgn(di) == 0 && sgn(dj) != 0) {
        w.swap_rows(i, i + 1);
        w.swap_cols(i, i + 1);
        again = true;
        continue;
      }
      if (sgn(di) == 0 || sgn(dj) == 0) continue;
      if (mpz_divisible_p(dj.get_mpz_t(), di.get_mpz_t())) continue;
      w.col_sub(i, i + 1, Integer(-1));  // col i += col i+1
      w.clear_position(i);
      if (sgn(w.a.at(i, i)) < 0) w.negate_row(i);
      if (sgn(w.a.at(i + 1, i + 1)) < 0) w.negate_row(i + 1);
      again = true;
    }
  }

  check_internal(w.u * m * w.v == w.a, "SNF factor identity failed");
  check_internal(abs(determinant(w.u)) == 1 && abs(determinant(w.v)) == 1,
                 "SNF transforms not unimodular");
  return SmithNormalForm{std::move(w.u), std::move(w.a), std::move(w.v)};
}


}  // namespace lefschetz
