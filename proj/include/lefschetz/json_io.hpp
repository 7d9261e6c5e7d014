#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "lefschetz/trace_formula.hpp"

namespace lefschetz {

using Json = nlohmann::ordered_json;

// Problem description as read from a spec file. The group is optional; when
// absent it is derived from the algebra by the truncated BCH series. The
// endomorphism is a polynomial map, or a plain matrix when the group law is
// componentwise addition.
struct ProblemSpec {
  std::string name;
  LieAlgebra<Rational> algebra{0};
  std::optional<PolynomialGroup> group;
  std::optional<PolynomialMap> endo_map;
  std::optional<RationalMatrix> endo_matrix;
  FoliationKind foliation = FoliationKind::Unstable;
  std::optional<RationalMatrix> custom_basis;
  std::optional<Rational> precision;
};

// Strict parser: unknown keys are rejected with ParseError.
ProblemSpec parse_problem_spec(const std::string& text);
ProblemSpec load_problem_spec(const std::string& path);

// Canonical serialization; parse-then-serialize is idempotent.
std::string serialize_problem_spec(const ProblemSpec& spec);

// Everything assembled and validated, ready for verification.
struct AssembledProblem {
  LieAlgebra<Rational> algebra{0};
  PolynomialGroup group;
  bool group_derived = false;     // BCH-generated
  bool group_integral = true;     // Z^n closed under the group law
  GroupEndomorphism endo;
  FoliationChoice foliation;
  Rational precision;
};
AssembledProblem assemble_problem(const ProblemSpec& spec);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json field_element_to_json(const FieldElement& e);
FieldElement field_element_from_json(const Json& j);

Json field_to_json(const FieldPtr& f);  // null json for rational scalars
Json report_scalar_to_json(const ReportScalar& s, const FieldPtr& field);

Json splitting_to_json(const Splitting& s);
Json acceptability_to_json(const AcceptabilityReport& r);
Json report_to_json(const LefschetzReport& rep, const std::string& name);
Json nomizu_to_json(const NomizuReport& rep, const std::string& name);

// Full validation run in report form (never throws on validation failures;
// the "ok" member carries the overall verdict).
Json validation_report_json(const ProblemSpec& spec);
// Central series, spectral class, splitting and acceptability.
Json analyze_report_json(const ProblemSpec& spec);

}  // namespace lefschetz
