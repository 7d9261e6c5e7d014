#include "lefschetz/splitting.hpp"

#include <algorithm>
#include <map>

namespace lefschetz {

std::string to_string(AnosovClass c) {
  switch (c) {
    case AnosovClass::Anosov: return "ANOSOV";
    case AnosovClass::Generalized: return "GENERALIZED";
    default: return "NEITHER";
  }
}

AnosovClass anosov_class(const Polynomial& cp) {
  if (cp(Rational(1)).is_zero()) return AnosovClass::Neither;
  return classify_unit_circle(cp).on == 0 ? AnosovClass::Anosov
                                          : AnosovClass::Generalized;
}

namespace {

// Integer square-class representative of a positive rational: r = s^2 * D
// with D squarefree up to a residual large square-free-by-trial part.
Integer square_class(const Rational& r) {
  check_internal(r.sign() > 0, "square class of a non-positive rational");
  Integer n = r.numerator() * r.denominator();
  for (Integer p(2); p * p <= n && p <= 100000; ++p) {
    Integer p2 = p * p;
    while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) n /= p2;
  }
  return n;
}

struct QuadraticRootPlan {
  Rational b, c;   // the factor x^2 + bx + c (disc > 0)
  int multiplicity;
};

struct ComplexPairPlan {
  Polynomial factor;  // irreducible quadratic with disc < 0
  int multiplicity;
  CircleClass cls;
};

struct NeutralChunkPlan {
  Polynomial factor;  // squarefree, all roots on the circle
  int multiplicity;
};

}  // namespace

std::optional<std::pair<Rational, Rational>> find_monic_quadratic_factor(
    const Polynomial& h) {
  if (h.degree() < 2) return std::nullopt;
  if (h.degree() == 2) {
    Polynomial m = h.monic();
    return std::make_pair(m.coeff(1), m.coeff(0));
  }
  // Scale x = y/t so the monic polynomial becomes integer; monic integer
  // polynomials factor into monic integer factors (Gauss), so candidate
  // quadratics have c | H(0) and |b| below twice the root bound.
  Polynomial hm = h.monic();
  Integer t = lcm_denominators(hm.coefficients());
  Polynomial big = hm.scale_arg(Rational(1, t));
  Integer tn(1);
  for (int i = 0; i < hm.degree(); ++i) tn *= t;
  Polynomial H = Rational(tn) * big;  // monic integer in y
  check_internal(H.is_monic(), "integer rescaling lost monicity");
  Integer h0 = H.coeff(0).numerator();
  check_internal(sgn(h0) != 0, "zero constant term after root deflation");

  Rational bound = cauchy_root_bound(H);
  Integer bmax = bound.floor() * 2 + 2;
  Integer cmax = (bound * bound).floor() + 1;

  std::vector<Integer> divs;
  Integer a0 = abs(h0);
  for (Integer i(1); i * i <= a0; ++i)
    if (mpz_divisible_p(a0.get_mpz_t(), i.get_mpz_t())) {
      if (i <= cmax) divs.push_back(i);
      Integer j = a0 / i;
      if (j != i && j <= cmax) divs.push_back(j);
    }
  std::sort(divs.begin(), divs.end());
  Integer budget = Integer(static_cast<long>(divs.size())) * 2 * (2 * bmax + 1);
  if (budget > 4000000)
    throw UnsupportedScalarTower(
        "quadratic factor search space too large for exact enumeration");
  for (const Integer& cd : divs)
    for (int cs : {1, -1})
      for (Integer b(-bmax); b <= bmax; ++b) {
        Integer c = cs > 0 ? cd : Integer(-cd);
        Polynomial q({Rational(c), Rational(b), Rational(1)});
        if (divmod(H, q).second.is_zero())
          // y = t x: x^2 + (b/t) x + c/t^2 divides h
          return std::make_pair(Rational(b, t), Rational(c, t * t));
      }
  return std::nullopt;
}

namespace {

int factor_power(Polynomial* h, const Polynomial& q) {
  int m = 0;
  for (;;) {
    auto [quot, rem] = divmod(*h, q);
    if (!rem.is_zero()) break;
    *h = quot;
    ++m;
  }
  return m;
}

void append_columns(Matrix<FieldElement>* dst, const Matrix<FieldElement>& src) {
  *dst = Matrix<FieldElement>::hconcat(*dst, src);
}

Matrix<FieldElement> kernel_as_matrix(const Matrix<FieldElement>& m) {
  return Matrix<FieldElement>::from_columns(m.cols(), kernel_basis(m));
}

}  // namespace

Splitting split(const LieAlgebra<Rational>& L, const RationalMatrix& f) {
  std::size_t n = L.dim();
  check_internal(f.is_square() && f.rows() == n, "endomorphism shape");
  Polynomial cp = char_poly(f);
  if (cp(Rational(1)).is_zero())
    throw EigenvalueOne("cannot split: 1 is an eigenvalue");

  // Peel off rational roots, then rational quadratic factors; whatever
  // remains must be entirely on the unit circle or the tower is unsupported.
  Polynomial h = cp.monic();
  std::vector<std::pair<Rational, int>> rational_parts;
  for (const auto& [root, mult] : rational_roots(cp)) {
    rational_parts.emplace_back(root, mult);
    for (int i = 0; i < mult; ++i)
      h = exact_quotient(h, Polynomial::linear_root(root));
  }
  std::vector<QuadraticRootPlan> real_quadratics;
  std::vector<ComplexPairPlan> complex_pairs;
  std::vector<NeutralChunkPlan> neutral_chunks;
  while (h.degree() > 0) {
    auto bc = find_monic_quadratic_factor(h);
    if (!bc) break;
    Polynomial q({bc->second, bc->first, Rational(1)});
    int m = factor_power(&h, q);
    check_internal(m > 0, "claimed factor does not divide");
    Rational disc = bc->first * bc->first - Rational(4) * bc->second;
    check_internal(!disc.is_zero(), "repeated-root quadratic escaped deflation");
    if (disc.sign() > 0) {
      Rational sq;
      if (rational_square_root(disc, &sq)) {
        // splits into rational linear factors after all; fold them back
        Rational l1 = (-bc->first + sq) / Rational(2);
        Rational l2 = (-bc->first - sq) / Rational(2);
        bool found1 = false, found2 = false;
        for (auto& [r, mm] : rational_parts) {
          if (r == l1) mm += m, found1 = true;
          if (r == l2) mm += m, found2 = true;
        }
        if (!found1) rational_parts.emplace_back(l1, m);
        if (!found2) rational_parts.emplace_back(l2, m);
      } else {
        real_quadratics.push_back({bc->first, bc->second, m});
      }
    } else {
      Rational norm = bc->second;  // lambda * conj(lambda)
      CircleClass cls = norm == Rational(1) ? CircleClass::On
                        : norm < Rational(1) ? CircleClass::Inside
                                             : CircleClass::Outside;
      complex_pairs.push_back({q, m, cls});
    }
  }
  if (h.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(h)) {
      auto cls = classify_unit_circle(factor);
      if (cls.on != factor.degree())
        throw UnsupportedScalarTower(
            "irreducible spectrum factor of degree > 2 off the unit circle: " +
            factor.str());
      neutral_chunks.push_back({factor, mult});
    }
  }

  // Field for the real irrational eigenvalues.
  std::vector<Integer> classes;
  for (const auto& rq : real_quadratics) {
    Integer d = square_class(rq.b * rq.b - Rational(4) * rq.c);
    bool seen = false;
    for (const auto& c : classes) seen = seen || c == d;
    if (!seen) classes.push_back(d);
  }
  std::sort(classes.begin(), classes.end());
  FieldPtr ext;
  std::map<std::string, FieldElement> sqrt_of_class;
  if (classes.size() == 1) {
    ext = make_quadratic_field(classes[0]);
    sqrt_of_class[classes[0].get_str()] = FieldElement::generator(ext);
  } else if (classes.size() == 2) {
    ext = make_biquadratic_field(classes[0], classes[1]);
    FieldElement alpha = FieldElement::generator(ext);
    // alpha = sqrt(d1) + sqrt(d2); sqrt(d1) = (alpha^3 - (3d1+d2) alpha)/(2(d2-d1))
    Rational d1(classes[0]), d2(classes[1]);
    FieldElement a3 = alpha * alpha * alpha;
    FieldElement s1 = (a3 - FieldElement(Rational(3) * d1 + d2) * alpha) /
                      FieldElement(Rational(2) * (d2 - d1));
    sqrt_of_class[classes[0].get_str()] = s1;
    sqrt_of_class[classes[1].get_str()] = alpha - s1;
  } else if (classes.size() > 2) {
    throw UnsupportedScalarTower(
        "more than two independent quadratic classes in the spectrum");
  }

  Matrix<FieldElement> fk = to_field_matrix(f);
  Matrix<FieldElement> unstable(n, 0), stable(n, 0), neutral(n, 0);
  auto bucket = [&](CircleClass c) -> Matrix<FieldElement>* {
    switch (c) {
      case CircleClass::Inside: return &stable;
      case CircleClass::Outside: return &unstable;
      case CircleClass::On: return &neutral;
      default: throw InternalError("unclassified eigenvalue bucket");
    }
  };

  // Rational eigenvalues.
  std::sort(rational_parts.begin(), rational_parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [lambda, mult] : rational_parts) {
    Rational a = lambda.abs();
    CircleClass cls = a == Rational(1) ? CircleClass::On
                      : a < Rational(1) ? CircleClass::Inside
                                        : CircleClass::Outside;
    RationalMatrix shift = f;
    for (std::size_t i = 0; i < n; ++i) shift.at(i, i) = shift.at(i, i) - lambda;
    if (cls == CircleClass::On) {  // lambda = +-1
      std::size_t geo = n - rank(shift);
      if (static_cast<int>(geo) < mult)
        throw JordanOnCircle("eigenvalue " + lambda.str() +
                             " has a nontrivial Jordan block on the circle");
    }
    RationalMatrix power = shift.pow(static_cast<unsigned long>(mult));
    auto ker = kernel_basis(power);
    check_internal(static_cast<int>(ker.size()) == mult,
                   "generalized eigenspace dimension mismatch");
    append_columns(bucket(cls),
                   to_field_matrix(RationalMatrix::from_columns(n, ker)));
  }

  // Real irrational pairs from each quadratic factor.
  for (const auto& rq : real_quadratics) {
    Rational disc = rq.b * rq.b - Rational(4) * rq.c;
    Integer cls_d = square_class(disc);
    // disc = (s/q)^2 * D
    Rational ratio = disc / Rational(cls_d);
    Rational s;
    check_internal(rational_square_root(ratio, &s), "square class mismatch");
    FieldElement sqrt_disc =
        FieldElement(s) * sqrt_of_class.at(cls_d.get_str());
    for (int sign : {1, -1}) {
      FieldElement lambda =
          (FieldElement(-rq.b) +
           (sign > 0 ? sqrt_disc : -sqrt_disc)) /
          FieldElement(2);
      check_internal(
          (lambda * lambda + FieldElement(rq.b) * lambda + FieldElement(rq.c))
              .is_zero(),
          "quadratic root reconstruction failed");
      // |lambda| vs 1 via exact signs; an irrational root is never on the circle.
      int above = (lambda - FieldElement(1)).sign();
      int below = (lambda + FieldElement(1)).sign();
      CircleClass cls = (above > 0 || below < 0) ? CircleClass::Outside
                                                 : CircleClass::Inside;
      Matrix<FieldElement> shift = fk;
      for (std::size_t i = 0; i < n; ++i)
        shift.at(i, i) = shift.at(i, i) - lambda;
      Matrix<FieldElement> power = shift.pow(static_cast<unsigned long>(rq.multiplicity));
      Matrix<FieldElement> ker = kernel_as_matrix(power);
      check_internal(static_cast<int>(ker.cols()) == rq.multiplicity,
                     "generalized eigenspace dimension mismatch");
      append_columns(bucket(cls), ker);
    }
  }

  // Complex conjugate pairs: the real root-subspace of q(f)^m stays rational.
  for (const auto& cpp : complex_pairs) {
    RationalMatrix qf = eval_at_matrix(cpp.factor, f);
    if (cpp.cls == CircleClass::On) {
      std::size_t geo = n - rank(qf);
      if (static_cast<int>(geo) < 2 * cpp.multiplicity)
        throw JordanOnCircle("on-circle conjugate pair of " +
                             cpp.factor.str() + " has a Jordan block");
    }
    RationalMatrix power = qf.pow(static_cast<unsigned long>(cpp.multiplicity));
    auto ker = kernel_basis(power);
    check_internal(static_cast<int>(ker.size()) == 2 * cpp.multiplicity,
                   "complex pair root-subspace dimension mismatch");
    append_columns(bucket(cpp.cls),
                   to_field_matrix(RationalMatrix::from_columns(n, ker)));
  }

  // Residual on-circle chunks (higher-degree cyclotomic-like factors).
  for (const auto& nc : neutral_chunks) {
    RationalMatrix rf = eval_at_matrix(nc.factor, f);
    std::size_t geo = n - rank(rf);
    std::size_t total =
        static_cast<std::size_t>(nc.factor.degree() * nc.multiplicity);
    if (geo < total)
      throw JordanOnCircle("on-circle factor " + nc.factor.str() +
                           " has a Jordan block");
    RationalMatrix power = rf.pow(static_cast<unsigned long>(nc.multiplicity));
    auto ker = kernel_basis(power);
    check_internal(ker.size() == total, "neutral chunk dimension mismatch");
    append_columns(&neutral,
                   to_field_matrix(RationalMatrix::from_columns(n, ker)));
  }

  Splitting out;
  out.extension = ext;
  out.unstable = std::move(unstable);
  out.stable = std::move(stable);
  out.neutral = std::move(neutral);

  // Direct sum and invariance checks, exact.
  check_internal(out.unstable.cols() + out.stable.cols() + out.neutral.cols() == n,
                 "splitting dimensions do not sum to dim g");
  Matrix<FieldElement> all = Matrix<FieldElement>::hconcat(
      Matrix<FieldElement>::hconcat(out.unstable, out.stable), out.neutral);
  check_internal(rank(all) == n, "splitting is not a direct sum");
  for (const Matrix<FieldElement>* part :
       {&out.unstable, &out.stable, &out.neutral}) {
    if (part->cols() == 0) continue;
    Matrix<FieldElement> res;
    check_internal(restriction_matrix(fk, *part, &res),
                   "splitting summand is not f-invariant");
  }

  // Bracket closure: each summand is a subalgebra.
  LieAlgebra<FieldElement> Lk(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      Lk.set_bracket(i, j, to_field_vector(L.basis_bracket(i, j)));
  for (const Matrix<FieldElement>* part :
       {&out.unstable, &out.stable, &out.neutral})
    if (part->cols() > 0) Subalgebra<FieldElement>(Lk, *part);

  auto classification = classify_unit_circle(cp);
  for (auto& e : classification.enclosures) {
    int m = e.multiplicity();
    out.eigen_data.emplace_back(std::move(e), m);
  }
  return out;
}

}  // namespace lefschetz
