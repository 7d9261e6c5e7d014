#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/acceptability.hpp"
#include "lefschetz/fixed_points.hpp"
#include "lefschetz/splitting.hpp"

namespace lefschetz {

enum class FoliationKind { Unstable, Stable, Zero, Custom };
std::string to_string(FoliationKind k);

struct FoliationChoice {
  FoliationKind kind = FoliationKind::Unstable;
  std::optional<RationalMatrix> custom_basis;  // columns span p
};

enum class Verdict { ExactEqual, IntervalConsistent, Mismatch };
std::string to_string(Verdict v);

// Scalar in a verification report: an exact algebraic number, or a certified
// interval when the exact tower is unavailable.
struct ReportScalar {
  bool exact = true;
  FieldElement value;          // meaningful when exact
  RationalInterval interval;   // always filled
  std::string str() const;
};

// Local fixed-point data: the sign over the foliation directions and the
// absolute transverse determinant. By the linearization diagrams these agree
// at every fixed point, so they are functions of the splitting alone.
struct LocalData {
  int sign = 1;
  FieldElement transverse_abs;
};
LocalData local_data(const FixedPoint& x, const Splitting& s,
                     const RationalMatrix& fstar);

struct LefschetzReport {
  AnosovClass anosov = AnosovClass::Anosov;
  FoliationKind foliation = FoliationKind::Unstable;
  std::size_t dim_p = 0;
  std::size_t dim_unstable = 0, dim_stable = 0, dim_neutral = 0;
  bool have_splitting = false;
  FieldPtr field;  // null: rational scalars (or interval mode)
  bool exact_mode = true;
  bool cohomology_skipped = false;    // interval fallback skips the CE side
  bool acceptability_skipped = false;
  ReportScalar lhs_cohomology;
  ReportScalar lhs_determinant;
  ReportScalar rhs_fixed_point_sum;
  std::size_t fixed_point_count = 0;
  std::vector<FixedPoint> fixed_points;
  Rational global_determinant;        // det(1 - f_* | g)
  std::optional<AcceptabilityReport> acceptability;
  Verdict verdict = Verdict::Mismatch;
  Rational precision;

  std::string text() const;
};

// Verifies the dynamical Lefschetz trace formula for the foliation choice:
// the alternating cohomology trace, the determinant det(1 - f_*|p), and the
// fixed-point sum are computed along independent paths and compared exactly
// (or by certified intervals of width <= precision when the scalar tower is
// unsupported).
LefschetzReport verify(const LieAlgebra<Rational>& algebra,
                       const PolynomialGroup& group, const GroupEndomorphism& f,
                       const FoliationChoice& choice, const Rational& precision);

struct NomizuReport {
  std::vector<int> betti;
  int euler = 0;
  bool euler_zero = true;
  std::optional<bool> expected_match;
};

// Betti numbers of the full algebra (they agree with the de Rham Betti
// numbers of the nilmanifold) plus the Euler characteristic check.
NomizuReport nomizu_check(const LieAlgebra<Rational>& algebra,
                          const std::optional<std::vector<int>>& expected);

Rational default_precision();  // 2^-64

}  // namespace lefschetz
