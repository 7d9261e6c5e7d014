// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lefschetz/json_io.hpp"
#include "test_support.hpp"

#ifdef LEFSCHETZ_HAVE_EIGEN
#include <Eigen/Eigenvalues>
#endif

using namespace lefschetz;
using namespace lefschetz::testsupport;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& label,
               const std::function<bool()>& body) {
  bool pass = false;
  std::string note;
  auto t0 = std::chrono::steady_clock::now();
  try {
    pass = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("[%s] criterion %d: %s%s (%lld ms)\n", pass ? "PASS" : "FAIL",
              num, label.c_str(), note.c_str(), static_cast<long long>(ms));
  if (!pass) ++g_failures;
}

AssembledProblem load(const std::string& name) {
  std::ifstream in(std::string(LEFSCHETZ_FIXTURE_DIR) + "/" + name + ".json");
  std::ostringstream buf;
  buf << in.rdbuf();
  return assemble_problem(parse_problem_spec(buf.str()));
}

LefschetzReport run(const AssembledProblem& ap) {
  return verify(ap.algebra, ap.group, ap.endo, ap.foliation, ap.precision);
}

bool expect(bool cond, const std::string& what) {
  if (!cond) std::printf("       failed: %s\n", what.c_str());
  return cond;
}

}  // namespace

int main() {
  auto total0 = std::chrono::steady_clock::now();

  criterion(1, "heisenberg: 4 fixed points and det(1 - f_*|g) = -4, < 1 s", [] {
    auto t0 = std::chrono::steady_clock::now();
    auto ap = load("heisenberg");
    auto rep = run(ap);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool ok = true;
    ok &= expect(rep.fixed_point_count == 4, "fixed point count is 4");
    ok &= expect(rep.global_determinant == Rational(-4), "det(1-f_*|g) = -4");
    ok &= expect(ms < 1000, "runtime under one second");
    return ok;
  });

  criterion(2, "heisenberg: lhs-cohomology = lhs-determinant = rhs = -sqrt2 in Q(sqrt2)", [] {
    auto ap = load("heisenberg");
    auto rep = run(ap);
    bool ok = expect(rep.verdict == Verdict::ExactEqual, "verdict EXACT_EQUAL");
    ok &= expect(rep.field != nullptr &&
                     rep.field->min_poly() ==
                         Polynomial({Rational(-2), Rational(0), Rational(1)}),
                 "scalar field is Q(sqrt2)");
    if (!ok) return false;
    FieldElement minus_sqrt2 = -FieldElement::generator(rep.field);
    ok &= expect(rep.lhs_cohomology.value == minus_sqrt2, "cohomology = -sqrt2");
    ok &= expect(rep.lhs_determinant.value == minus_sqrt2, "determinant = -sqrt2");
    ok &= expect(rep.rhs_fixed_point_sum.value == minus_sqrt2, "rhs = -sqrt2");
    return ok;
  });

  criterion(3, "cat map: 1 fixed point, all three = -(1+sqrt5)/2 in Q(sqrt5)", [] {
    auto ap = load("catmap");
    auto rep = run(ap);
    bool ok = expect(rep.verdict == Verdict::ExactEqual, "verdict EXACT_EQUAL");
    ok &= expect(rep.fixed_point_count == 1, "one fixed point");
    ok &= expect(rep.field != nullptr &&
                     rep.field->min_poly() ==
                         Polynomial({Rational(-5), Rational(0), Rational(1)}),
                 "scalar field is Q(sqrt5)");
    if (!ok) return false;
    FieldElement expectv =
        -(FieldElement(1) + FieldElement::generator(rep.field)) /
        FieldElement(2);
    ok &= expect(rep.lhs_cohomology.value == expectv, "cohomology value");
    ok &= expect(rep.lhs_determinant.value == expectv, "determinant value");
    ok &= expect(rep.rhs_fixed_point_sum.value == expectv, "rhs value");
    return ok;
  });

  criterion(4, "circle -1: 2 fixed points, zero foliation gives 1 = 1", [] {
    auto ap = load("circle-minus-one");
    auto rep = run(ap);
    bool ok = expect(rep.foliation == FoliationKind::Zero, "zero foliation");
    ok &= expect(rep.fixed_point_count == 2, "two fixed points");
    ok &= expect(rep.verdict == Verdict::ExactEqual, "verdict EXACT_EQUAL");
    ok &= expect(rep.lhs_cohomology.value == FieldElement(1), "lhs = 1");
    ok &= expect(rep.rhs_fixed_point_sum.value == FieldElement(1), "rhs = 1");
    return ok;
  });

  criterion(5, "alternating trace = det(1 - f_*|g) on 60 random nilpotent algebras", [] {
    std::mt19937 rng(20240811);
    for (int t = 0; t < 60; ++t) {
      auto gen = random_algebra_with_automorphism(rng);
      if (!validate_algebra(gen.algebra).ok()) return false;
      Subalgebra<Rational> full(gen.algebra,
                                RationalMatrix::identity(gen.algebra.dim()));
      Rational lhs = alternating_cohomology_trace(full, gen.automorphism);
      Rational rhs = determinant(RationalMatrix::identity(gen.algebra.dim()) -
                                 gen.automorphism);
      if (!expect(lhs == rhs, "case " + std::to_string(t))) return false;
    }
    return true;
  });

  criterion(6, "fixed-point enumeration matches the grid oracle on 60 random tori", [] {
    std::mt19937 rng(777);
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
      if (classify_unit_circle(cp).on != 0) continue;
      Rational count = determinant(RationalMatrix::identity(n) - a).abs();
      if (count > Rational(50)) continue;

      auto g = abelian_group(n);
      auto e = validate_endomorphism_map(g, linear_map(a));
      auto pts = fixed_points(g, e);
      auto oracle = torus_fixed_points_oracle(a);
      if (!expect(Rational(static_cast<long>(pts.size())) == count,
                  "count = |det(I-A)|"))
        return false;
      if (!expect(pts.size() == oracle.size(), "oracle count")) return false;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (!expect(pts[i].coords == oracle[i], "oracle point set")) return false;
      ++done;
    }
    return true;
  });

  criterion(7, "unit-circle classifier: float oracle x100 and exact cyclotomic counts", [] {
#ifndef LEFSCHETZ_HAVE_EIGEN
    return expect(false, "floating-point oracle unavailable (Eigen missing)");
#else
    std::mt19937 rng(123457);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> degd(2, 6);
    int done = 0;
    while (done < 100) {
      int deg = degd(rng);
      std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = Rational(coeff(rng));
      if (c.back().is_zero() || c.front().is_zero()) continue;
      Polynomial p(c);
      if (p.degree() != deg) continue;
      Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
      for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
      for (int i = 0; i < deg; ++i)
        comp(i, deg - 1) =
            -(p.coeff(static_cast<std::size_t>(i)) / p.leading()).to_double();
      Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
      bool margin = true;
      int inside = 0, outside = 0;
      for (int i = 0; i < deg; ++i) {
        double mag = std::abs(es.eigenvalues()[i]);
        if (std::abs(mag - 1.0) < 1e-3) { margin = false; break; }
        (mag < 1.0 ? inside : outside)++;
      }
      if (!margin) continue;
      auto cls = classify_unit_circle(p);
      if (!expect(cls.inside == inside && cls.on == 0 && cls.outside == outside,
                  "oracle agreement on " + p.str()))
        return false;
      ++done;
    }

    // constructed cyclotomic x hyperbolic products with exact ON counts
    Polynomial cat({Rational(1), Rational(-3), Rational(1)});
    Polynomial heis({Rational(-1), Rational(-2), Rational(1)});
    struct Case { Polynomial p; int on; };
    Polynomial phi1({Rational(-1), Rational(1)});
    Polynomial phi2({Rational(1), Rational(1)});
    Polynomial phi4({Rational(1), Rational(0), Rational(1)});
    Polynomial phi3({Rational(1), Rational(1), Rational(1)});
    Polynomial phi8({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)});
    Polynomial phi12({Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)});
    std::vector<Case> cases = {
        {cat * phi1, 1},
        {cat * phi2 * phi2, 2},
        {heis * phi4, 2},
        {cat * phi8, 4},
        {heis * cat * phi3, 2},
        {cat * phi12 * phi2, 5},
        {phi8 * phi8, 8},
    };
    for (const auto& cs : cases) {
      auto cls = classify_unit_circle(cs.p);
      if (!expect(cls.on == cs.on, "ON count of " + cs.p.str())) return false;
      if (!expect(cls.inside + cls.on + cls.outside == cs.p.degree(),
                  "total count"))
        return false;
    }
    return true;
#endif
  });

  criterion(8, "gamma-acceptability verdicts with witnesses", [] {
    bool ok = true;
    // every abelian Anosov automorphism fixture has acceptable gu and gs
    for (const char* name : {"catmap", "catmap3", "torus4-mixed"}) {
      auto ap = load(name);
      Polynomial cp = char_poly(ap.endo.linear_part);
      if (!expect(anosov_class(cp) == AnosovClass::Anosov,
                  std::string(name) + " is Anosov"))
        return false;
      if (!expect(cp.coeff(0).abs() == Rational(1),
                  std::string(name) + " is an automorphism"))
        return false;
      auto s = split(ap.algebra, ap.endo.linear_part);
      ok &= expect(is_gamma_acceptable(ap.algebra, s.unstable).acceptable,
                   std::string(name) + " unstable acceptable");
      ok &= expect(is_gamma_acceptable(ap.algebra, s.stable).acceptable,
                   std::string(name) + " stable acceptable");
    }
    // heisenberg unstable fails at layer 1 with an explicit witness
    auto heis = load("heisenberg");
    auto s = split(heis.algebra, heis.endo.linear_part);
    auto rep = is_gamma_acceptable(heis.algebra, s.unstable);
    ok &= expect(!rep.acceptable, "heisenberg unstable not acceptable");
    ok &= expect(rep.layers.size() == 2 && !rep.layers[1].dense,
                 "failure at layer 1");
    ok &= expect(rep.layers[1].witness.has_value() &&
                     !rep.layers[1].witness->empty() &&
                     sgn((*rep.layers[1].witness)[0]) != 0,
                 "nonzero rational witness");
    // rational lines in T^2 are not acceptable
    RationalMatrix line(2, 1);
    line.at(0, 0) = 1;
    auto lrep = is_gamma_acceptable(abelian(2), line);
    ok &= expect(!lrep.acceptable && lrep.layers[0].witness.has_value(),
                 "rational line witness");
    return ok;
  });

  criterion(9, "Betti numbers and Euler characteristic", [] {
    bool ok = true;
    auto heis = nomizu_check(heisenberg3(), std::vector<int>{1, 2, 2, 1});
    ok &= expect(heis.expected_match.value_or(false), "heisenberg (1,2,2,1)");
    auto t3 = nomizu_check(abelian(3), std::vector<int>{1, 3, 3, 1});
    ok &= expect(t3.expected_match.value_or(false), "abelian T3 (1,3,3,1)");
    for (const char* name :
         {"heisenberg", "catmap", "catmap3", "circle-minus-one",
          "torus2-expanding", "torus4-mixed", "torus3-plastic", "abelian-t3",
          "filiform4"}) {
      std::ifstream in(std::string(LEFSCHETZ_FIXTURE_DIR) + "/" + name +
                       ".json");
      std::ostringstream buf;
      buf << in.rdbuf();
      ProblemSpec spec = parse_problem_spec(buf.str());
      auto rep = nomizu_check(spec.algebra, std::nullopt);
      ok &= expect(rep.euler_zero,
                   std::string("Euler characteristic 0 for ") + name);
    }
    return ok;
  });

  auto total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - total0)
                      .count();
  std::printf("%d criteria failed; total %lld ms\n", g_failures,
              static_cast<long long>(total_ms));
  return g_failures == 0 ? 0 : 1;
}
