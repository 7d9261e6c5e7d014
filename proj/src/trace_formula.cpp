#include "lefschetz/trace_formula.hpp"

#include <sstream>

namespace lefschetz {

std::string to_string(FoliationKind k) {
  switch (k) {
    case FoliationKind::Unstable: return "unstable";
    case FoliationKind::Stable: return "stable";
    case FoliationKind::Zero: return "zero";
    default: return "custom";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactEqual: return "EXACT_EQUAL";
    case Verdict::IntervalConsistent: return "INTERVAL_CONSISTENT";
    default: return "MISMATCH";
  }
}

std::string ReportScalar::str() const {
  std::ostringstream os;
  if (exact) {
    os << value.str();
    if (!value.rational_value()) {
      RationalInterval iv = value.to_interval(Rational(1, 1 << 30));
      os << "  (~" << iv.mid().to_double() << ")";
    }
  } else {
    os << interval.str() << "  (~" << interval.mid().to_double() << ")";
  }
  return os.str();
}

Rational default_precision() {
  Integer d(1);
  d <<= 64;
  return Rational(Integer(1), d);
}

namespace {

FieldElement summand_one_minus_det(const Matrix<FieldElement>& fk,
                                   const Matrix<FieldElement>& basis) {
  if (basis.cols() == 0) return FieldElement(1);
  Matrix<FieldElement> res;
  check_internal(restriction_matrix(fk, basis, &res),
                 "splitting summand is not invariant");
  return determinant_generic(Matrix<FieldElement>::identity(res.rows()) - res);
}

RationalInterval pow_interval(const RationalInterval& x, int e) {
  RationalInterval acc = RationalInterval::point(Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * x;
  return acc;
}

// Certified interval for the product of (1 - lambda) over the enclosures in
// the given circle class (conjugate pairs folded into one real quadratic
// factor each). Enclosures are refined until the product is tighter than the
// target width and excludes zero.
RationalInterval one_minus_product_interval(std::vector<RootEnclosure>* encs,
                                            CircleClass cls,
                                            const Rational& width) {
  for (int guard = 0;; ++guard) {
    check_internal(guard < 100000, "interval product refinement stalled");
    RationalInterval acc = RationalInterval::point(Rational(1));
    for (const auto& e : *encs) {
      if (e.circle_class() != cls) continue;
      if (!e.is_real() && e.im().hi.sign() < 0) continue;  // mirror of a pair
      RationalInterval one = RationalInterval::point(Rational(1));
      if (e.is_real()) {
        acc = acc * pow_interval(one - e.re(), e.multiplicity());
      } else {
        // (1-z)(1-conj z) = 1 - 2 Re z + |z|^2
        RationalInterval two_re =
            RationalInterval::point(Rational(2)) * e.re();
        RationalInterval norm2 = e.re().square() + e.im().square();
        acc = acc * pow_interval(one - two_re + norm2, e.multiplicity());
      }
    }
    if (!acc.contains_zero() && acc.width() <= width) return acc;
    for (auto& e : *encs)
      if (e.circle_class() == cls) e.refine();
  }
}

}  // namespace

LocalData local_data(const FixedPoint& x, const Splitting& s,
                     const RationalMatrix& fstar) {
  (void)x;  // identical at every fixed point by the linearization diagrams
  Matrix<FieldElement> fk = to_field_matrix(fstar);
  FieldElement det_u = summand_one_minus_det(fk, s.unstable);
  Matrix<FieldElement> se = Matrix<FieldElement>::hconcat(s.stable, s.neutral);
  FieldElement det_se = summand_one_minus_det(fk, se);
  LocalData out;
  out.sign = det_u.sign();
  check_internal(out.sign != 0, "unstable determinant vanishes");
  out.transverse_abs = det_se.abs();
  return out;
}

LefschetzReport verify(const LieAlgebra<Rational>& algebra,
                       const PolynomialGroup& group, const GroupEndomorphism& f,
                       const FoliationChoice& choice,
                       const Rational& precision) {
  check_internal(precision.sign() > 0, "precision must be positive");
  LefschetzReport rep;
  rep.foliation = choice.kind;
  rep.precision = precision;

  const RationalMatrix& fstar = f.linear_part;
  std::size_t n = algebra.dim();
  require_valid_endomorphism(algebra, fstar);
  if (!group_matches_algebra(group, algebra))
    throw NotHomomorphism(
        "group law bilinear part does not match the algebra brackets");

  Polynomial cp = char_poly(fstar);
  rep.anosov = anosov_class(cp);
  rep.global_determinant = cp(Rational(1));  // det(1 - f_* | g)

  rep.fixed_points = fixed_points(group, f);
  rep.fixed_point_count = rep.fixed_points.size();

  // Foliation subspace; unstable/stable go through the spectral splitting.
  std::optional<Splitting> splitting;
  Matrix<FieldElement> p_basis(n, 0);
  bool interval_mode = false;
  if (choice.kind == FoliationKind::Unstable ||
      choice.kind == FoliationKind::Stable) {
    try {
      splitting = split(algebra, fstar);
      rep.have_splitting = true;
      rep.dim_unstable = splitting->dim_unstable();
      rep.dim_stable = splitting->dim_stable();
      rep.dim_neutral = splitting->dim_neutral();
      rep.field = splitting->extension;
      p_basis = choice.kind == FoliationKind::Unstable ? splitting->unstable
                                                       : splitting->stable;
    } catch (const UnsupportedScalarTower&) {
      interval_mode = true;
    }
  } else if (choice.kind == FoliationKind::Custom) {
    check_internal(choice.custom_basis.has_value(),
                   "custom foliation without a basis");
    if (rank(*choice.custom_basis) != choice.custom_basis->cols())
      throw ParseError("custom_basis vectors are linearly dependent");
    p_basis = to_field_matrix(*choice.custom_basis);
  }
  rep.dim_p = p_basis.cols();

  if (!interval_mode) {
    rep.exact_mode = true;
    // Promote the algebra and validate p as an invariant subalgebra.
    LieAlgebra<FieldElement> lk(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        lk.set_bracket(i, j, to_field_vector(algebra.basis_bracket(i, j)));
    Subalgebra<FieldElement> sub(lk, p_basis);
    Matrix<FieldElement> fk = to_field_matrix(fstar);
    Matrix<FieldElement> f_on_p(0, 0);
    if (p_basis.cols() > 0) {
      if (!restriction_matrix(fk, p_basis, &f_on_p))
        throw NotInvariant("foliation subspace is not f_*-invariant");
    }

    // (a) alternating trace on H^*(p), (b) det(1 - f|p), (c) fixed-point sum.
    FieldElement lhs_coh = alternating_cohomology_trace(sub, f_on_p);
    FieldElement lhs_det = summand_one_minus_det(fk, p_basis);

    int eps = lhs_det.sign();
    check_internal(eps != 0, "degenerate foliation determinant");
    FieldElement transverse_abs =
        (FieldElement(rep.global_determinant) / lhs_det).abs();
    if (splitting) {
      // Cross-check: the transverse determinant equals the complementary
      // product computed from the splitting itself.
      Matrix<FieldElement> comp = Matrix<FieldElement>::hconcat(
          choice.kind == FoliationKind::Unstable ? splitting->stable
                                                 : splitting->unstable,
          splitting->neutral);
      FieldElement check = summand_one_minus_det(fk, comp).abs();
      check_internal(check == transverse_abs,
                     "transverse determinant factorization failed");
    }
    FieldElement rhs = FieldElement(static_cast<long>(rep.fixed_point_count)) *
                       FieldElement(eps) / transverse_abs;

    rep.lhs_cohomology = {true, lhs_coh, lhs_coh.to_interval(precision)};
    rep.lhs_determinant = {true, lhs_det, lhs_det.to_interval(precision)};
    rep.rhs_fixed_point_sum = {true, rhs, rhs.to_interval(precision)};
    rep.verdict = (lhs_coh == lhs_det && lhs_det == rhs)
                      ? Verdict::ExactEqual
                      : Verdict::Mismatch;

    rep.acceptability = is_gamma_acceptable(algebra, p_basis);
  } else {
    // Certified-interval fallback: determinants as products of (1 - lambda)
    // over the spectrum enclosures; the cohomology side is skipped.
    rep.exact_mode = false;
    rep.cohomology_skipped = true;
    rep.acceptability_skipped = true;
    auto cls = classify_unit_circle(cp);
    rep.dim_unstable = static_cast<std::size_t>(cls.outside);
    rep.dim_stable = static_cast<std::size_t>(cls.inside);
    rep.dim_neutral = static_cast<std::size_t>(cls.on);
    CircleClass side = choice.kind == FoliationKind::Unstable
                           ? CircleClass::Outside
                           : CircleClass::Inside;
    rep.dim_p = side == CircleClass::Outside ? rep.dim_unstable : rep.dim_stable;
    RationalInterval det_p =
        one_minus_product_interval(&cls.enclosures, side, precision);
    int eps = det_p.definite_sign();
    check_internal(eps != 0, "sign of the foliation determinant undecided");
    Rational g_abs = rep.global_determinant.abs();
    RationalInterval det_abs = det_p.abs();
    Rational count(static_cast<long>(rep.fixed_point_count));
    RationalInterval rhs =
        RationalInterval::point(count * Rational(eps) / g_abs) * det_abs;

    rep.lhs_determinant = {false, FieldElement(0), det_p};
    rep.rhs_fixed_point_sum = {false, FieldElement(0), rhs};
    rep.lhs_cohomology = {false, FieldElement(0), det_p};
    rep.verdict = det_p.overlaps(rhs) ? Verdict::IntervalConsistent
                                      : Verdict::Mismatch;
  }
  return rep;
}

NomizuReport nomizu_check(const LieAlgebra<Rational>& algebra,
                          const std::optional<std::vector<int>>& expected) {
  NomizuReport rep;
  rep.betti = betti_numbers(ce_complex(algebra));
  for (std::size_t p = 0; p < rep.betti.size(); ++p)
    rep.euler += (p % 2 == 0 ? rep.betti[p] : -rep.betti[p]);
  rep.euler_zero = algebra.dim() == 0 || rep.euler == 0;
  if (expected) rep.expected_match = (*expected == rep.betti);
  return rep;
}

std::string LefschetzReport::text() const {
  std::ostringstream os;
  os << "foliation:            " << to_string(foliation) << "\n";
  os << "spectral class:       " << to_string(anosov) << "\n";
  if (have_splitting)
    os << "splitting dims:       u=" << dim_unstable << " s=" << dim_stable
       << " e=" << dim_neutral << "\n";
  os << "mode:                 " << (exact_mode ? "exact" : "certified interval")
     << "\n";
  if (field) {
    os << "scalar field:         Q(a), a root of " << field->min_poly().str()
       << " in " << field->isolating_interval().str() << "\n";
    if (!field->irreducibility_validated())
      os << "warning:              minimal polynomial of degree > 3; "
            "irreducibility asserted by construction, not machine-checked\n";
  }
  os << "det(1 - f_* | g):     " << global_determinant.str() << "\n";
  os << "fixed points:         " << fixed_point_count << "\n";
  if (cohomology_skipped)
    os << "alternating trace:    skipped (unsupported scalar tower)\n";
  else
    os << "alternating trace:    " << lhs_cohomology.str() << "\n";
  os << "det(1 - f_* | p):     " << lhs_determinant.str() << "\n";
  os << "fixed-point sum:      " << rhs_fixed_point_sum.str() << "\n";
  if (acceptability) {
    os << "gamma-acceptable:     " << (acceptability->acceptable ? "yes" : "no");
    for (const auto& l : acceptability->layers) {
      os << " [layer " << l.layer << ": " << (l.dense ? "dense" : "not dense");
      if (l.witness) {
        os << ", witness (";
        for (std::size_t i = 0; i < l.witness->size(); ++i)
          os << (i ? "," : "") << (*l.witness)[i].get_str();
        os << ")";
      }
      os << "]";
    }
    os << "\n";
  } else if (acceptability_skipped) {
    os << "gamma-acceptable:     skipped\n";
  }
  os << "verdict:              " << to_string(verdict) << "\n";
  return os.str();
}

}  // namespace lefschetz
