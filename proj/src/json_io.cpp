#include "lefschetz/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lefschetz {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (allowed.find(key) == allowed.end())
      throw ParseError("unknown key '" + key + "' in " + where);
}

std::size_t require_size(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned())
    throw ParseError(where + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" string or integer");
}

namespace {

std::vector<Rational> rational_vector_from_json(const Json& j,
                                                const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json rational_vector_to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

Json integer_vector_to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

// Basis vectors (rows of the JSON array) become matrix columns.
RationalMatrix basis_from_json(const Json& j, std::size_t dim,
                               const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of vectors");
  std::vector<std::vector<Rational>> cols;
  for (const auto& row : j) {
    auto v = rational_vector_from_json(row, where);
    if (v.size() != dim)
      throw ParseError(where + " vector length must equal dim");
    cols.push_back(std::move(v));
  }
  return RationalMatrix::from_columns(dim, cols);
}

RationalMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ParseError(where + " must be a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) rows.push_back(rational_vector_from_json(row, where));
  std::size_t cols = rows[0].size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ParseError(where + " rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rows[i][c];
  }
  return m;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(rational_vector_to_json(m.row(i)));
  return rows;
}

MultiPoly multipoly_from_json(const Json& j, std::size_t nvars,
                              const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of monomials");
  MultiPoly p(nvars);
  for (const auto& term : j) {
    reject_unknown_keys(term, {"exponents", "coeff"}, where + " monomial");
    if (!term.contains("exponents") || !term.contains("coeff"))
      throw ParseError(where + " monomial needs exponents and coeff");
    const Json& ej = term["exponents"];
    if (!ej.is_array() || ej.size() != nvars)
      throw ParseError(where + " exponents must have length " +
                       std::to_string(nvars));
    std::vector<unsigned> e;
    for (const auto& x : ej) e.push_back(static_cast<unsigned>(require_size(x, where + " exponent")));
    p.add_term(e, rational_from_json(term["coeff"]));
  }
  return p;
}

Json multipoly_to_json(const MultiPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exponents"] = e;
    term["coeff"] = rational_to_json(c);
    a.push_back(std::move(term));
  }
  return a;
}

PolynomialMap polymap_from_json(const Json& j, std::size_t in_vars,
                                const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of outputs");
  PolynomialMap f;
  f.in_vars = in_vars;
  for (const auto& out : j)
    f.outputs.push_back(multipoly_from_json(out, in_vars, where));
  return f;
}

Json polymap_to_json(const PolynomialMap& f) {
  Json a = Json::array();
  for (const auto& out : f.outputs) a.push_back(multipoly_to_json(out));
  return a;
}

bool is_componentwise_sum(const PolynomialGroup& g) {
  for (std::size_t i = 0; i < g.dim; ++i) {
    MultiPoly expect = MultiPoly::variable(2 * g.dim, i) +
                       MultiPoly::variable(2 * g.dim, g.dim + i);
    if (!(g.multiplication.outputs[i] == expect)) return false;
  }
  return true;
}

}  // namespace

ProblemSpec parse_problem_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown_keys(j,
                      {"name", "lie_algebra", "group", "endomorphism",
                       "foliation", "custom_basis", "precision"},
                      "problem spec");
  ProblemSpec spec;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name must be a string");
    spec.name = j["name"].get<std::string>();
  }

  if (!j.contains("lie_algebra")) throw ParseError("missing lie_algebra");
  const Json& la = j["lie_algebra"];
  reject_unknown_keys(la, {"dim", "brackets"}, "lie_algebra");
  if (!la.contains("dim")) throw ParseError("lie_algebra needs dim");
  std::size_t dim = require_size(la["dim"], "lie_algebra.dim");
  LieAlgebra<Rational> L(dim);
  if (la.contains("brackets")) {
    if (!la["brackets"].is_array())
      throw ParseError("lie_algebra.brackets must be an array");
    std::vector<std::vector<std::vector<Rational>>> acc(
        dim, std::vector<std::vector<Rational>>(dim));
    for (const auto& b : la["brackets"]) {
      reject_unknown_keys(b, {"i", "j", "k", "c"}, "bracket entry");
      for (const char* key : {"i", "j", "k", "c"})
        if (!b.contains(key))
          throw ParseError(std::string("bracket entry needs ") + key);
      std::size_t i = require_size(b["i"], "bracket i");
      std::size_t jj = require_size(b["j"], "bracket j");
      std::size_t k = require_size(b["k"], "bracket k");
      if (i >= dim || jj >= dim || k >= dim)
        throw ParseError("bracket index out of range");
      if (i >= jj) throw ParseError("bracket entries must have i < j");
      if (acc[i][jj].empty()) acc[i][jj].assign(dim, Rational(0));
      acc[i][jj][k] += rational_from_json(b["c"]);
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t jj = i + 1; jj < dim; ++jj)
        if (!acc[i][jj].empty()) L.set_bracket(i, jj, acc[i][jj]);
  }
  spec.algebra = L;

  if (j.contains("group")) {
    const Json& gj = j["group"];
    reject_unknown_keys(gj, {"dim", "layer_blocks", "multiplication", "inverse"},
                        "group");
    for (const char* key : {"dim", "layer_blocks", "multiplication", "inverse"})
      if (!gj.contains(key))
        throw ParseError(std::string("group needs ") + key);
    PolynomialGroup g;
    g.dim = require_size(gj["dim"], "group.dim");
    if (g.dim != dim)
      throw ParseError("group.dim must match lie_algebra.dim");
    if (!gj["layer_blocks"].is_array())
      throw ParseError("group.layer_blocks must be an array");
    for (const auto& blk : gj["layer_blocks"]) {
      if (!blk.is_array()) throw ParseError("layer block must be an array");
      std::vector<std::size_t> block;
      for (const auto& x : blk) block.push_back(require_size(x, "layer index"));
      g.layer_blocks.push_back(std::move(block));
    }
    g.multiplication =
        polymap_from_json(gj["multiplication"], 2 * dim, "multiplication");
    if (g.multiplication.out_vars() != dim)
      throw ParseError("multiplication must have dim outputs");
    g.inverse = polymap_from_json(gj["inverse"], dim, "inverse");
    if (g.inverse.out_vars() != dim)
      throw ParseError("inverse must have dim outputs");
    spec.group = std::move(g);
  }

  if (!j.contains("endomorphism")) throw ParseError("missing endomorphism");
  const Json& ej = j["endomorphism"];
  reject_unknown_keys(ej, {"map", "matrix"}, "endomorphism");
  if (ej.contains("map") == ej.contains("matrix"))
    throw ParseError("endomorphism needs exactly one of map or matrix");
  if (ej.contains("map"))
    spec.endo_map = polymap_from_json(ej["map"], dim, "endomorphism.map");
  else
    spec.endo_matrix = matrix_from_json(ej["matrix"], "endomorphism.matrix");

  if (j.contains("foliation")) {
    std::string f = j["foliation"].get<std::string>();
    if (f == "unstable") spec.foliation = FoliationKind::Unstable;
    else if (f == "stable") spec.foliation = FoliationKind::Stable;
    else if (f == "zero") spec.foliation = FoliationKind::Zero;
    else if (f == "custom") spec.foliation = FoliationKind::Custom;
    else throw ParseError("foliation must be unstable|stable|zero|custom");
  }
  if (j.contains("custom_basis"))
    spec.custom_basis = basis_from_json(j["custom_basis"], dim, "custom_basis");
  if (spec.foliation == FoliationKind::Custom && !spec.custom_basis)
    throw ParseError("custom foliation requires custom_basis");
  if (j.contains("precision")) {
    spec.precision = rational_from_json(j["precision"]);
    if (spec.precision->sign() <= 0)
      throw ParseError("precision must be positive");
  }
  return spec;
}

ProblemSpec load_problem_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_spec(buf.str());
}

std::string serialize_problem_spec(const ProblemSpec& spec) {
  Json j;
  j["name"] = spec.name;
  Json la;
  la["dim"] = spec.algebra.dim();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < spec.algebra.dim(); ++i)
    for (std::size_t jj = i + 1; jj < spec.algebra.dim(); ++jj) {
      const auto& v = spec.algebra.basis_bracket(i, jj);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        Json b;
        b["i"] = i;
        b["j"] = jj;
        b["k"] = k;
        b["c"] = rational_to_json(v[k]);
        brackets.push_back(std::move(b));
      }
    }
  la["brackets"] = std::move(brackets);
  j["lie_algebra"] = std::move(la);

  if (spec.group) {
    Json g;
    g["dim"] = spec.group->dim;
    g["layer_blocks"] = spec.group->layer_blocks;
    g["multiplication"] = polymap_to_json(spec.group->multiplication);
    g["inverse"] = polymap_to_json(spec.group->inverse);
    j["group"] = std::move(g);
  }
  Json e;
  if (spec.endo_map) e["map"] = polymap_to_json(*spec.endo_map);
  if (spec.endo_matrix) e["matrix"] = matrix_to_json(*spec.endo_matrix);
  j["endomorphism"] = std::move(e);
  j["foliation"] = to_string(spec.foliation);
  if (spec.custom_basis) {
    Json basis = Json::array();
    for (std::size_t c = 0; c < spec.custom_basis->cols(); ++c)
      basis.push_back(rational_vector_to_json(spec.custom_basis->column(c)));
    j["custom_basis"] = std::move(basis);
  }
  if (spec.precision) j["precision"] = rational_to_json(*spec.precision);
  return j.dump(2) + "\n";
}

AssembledProblem assemble_problem(const ProblemSpec& spec) {
  AssembledProblem out;
  out.algebra = spec.algebra;
  auto av = validate_algebra(spec.algebra);
  if (!av.ok())
    throw NotNilpotent("lie_algebra invalid: " + av.detail);

  if (spec.group) {
    out.group = *spec.group;
    auto gv = validate_group(out.group);
    if (!gv.structural_ok())
      throw NotHomomorphism("group invalid: " + gv.detail);
    out.group_integral = gv.integer_coefficients;
  } else {
    bool warn = false;
    out.group = bch_group_from_algebra(spec.algebra, &warn);
    out.group_derived = true;
    out.group_integral = !warn;
  }
  if (!group_matches_algebra(out.group, spec.algebra))
    throw NotHomomorphism(
        "group law bilinear part does not match the algebra brackets");
  {
    auto expected = adapted_layer_blocks(spec.algebra);
    auto canon = [](std::vector<std::vector<std::size_t>> b) {
      for (auto& x : b) std::sort(x.begin(), x.end());
      return b;
    };
    if (canon(out.group.layer_blocks) != canon(expected))
      throw ParseError(
          "group.layer_blocks do not match the lower central series layers");
  }

  PolynomialMap f;
  if (spec.endo_matrix) {
    if (!is_componentwise_sum(out.group))
      throw ParseError(
          "endomorphism.matrix is only valid for an abelian group law");
    if (spec.endo_matrix->rows() != spec.algebra.dim() ||
        spec.endo_matrix->cols() != spec.algebra.dim())
      throw ParseError("endomorphism.matrix must be dim x dim");
    f = linear_map(*spec.endo_matrix);
  } else {
    f = *spec.endo_map;
  }
  out.endo = validate_endomorphism_map(out.group, f);
  require_valid_endomorphism(spec.algebra, out.endo.linear_part);

  out.foliation.kind = spec.foliation;
  out.foliation.custom_basis = spec.custom_basis;
  out.precision = spec.precision.value_or(default_precision());
  return out;
}

Json field_to_json(const FieldPtr& f) {
  if (!f) return Json(nullptr);
  Json j;
  Json mp = Json::array();
  for (const auto& c : f->min_poly().coefficients())
    mp.push_back(rational_to_json(c));
  j["min_poly"] = std::move(mp);
  j["interval"] = Json::array({rational_to_json(f->isolating_interval().lo),
                               rational_to_json(f->isolating_interval().hi)});
  j["irreducibility_validated"] = f->irreducibility_validated();
  return j;
}

Json field_element_to_json(const FieldElement& e) {
  Json j;
  if (e.field()) {
    Json mp = Json::array();
    for (const auto& c : e.field()->min_poly().coefficients())
      mp.push_back(rational_to_json(c));
    j["min_poly"] = std::move(mp);
    j["interval"] =
        Json::array({rational_to_json(e.field()->isolating_interval().lo),
                     rational_to_json(e.field()->isolating_interval().hi)});
  } else {
    j["min_poly"] = Json(nullptr);
    j["interval"] = Json(nullptr);
  }
  j["coords"] = rational_vector_to_json(e.coords());
  return j;
}

FieldElement field_element_from_json(const Json& j) {
  reject_unknown_keys(j, {"min_poly", "interval", "coords"}, "field element");
  if (!j.contains("coords")) throw ParseError("field element needs coords");
  auto coords = rational_vector_from_json(j["coords"], "coords");
  if (!j.contains("min_poly") || j["min_poly"].is_null()) {
    if (coords.size() != 1)
      throw ParseError("rational field element needs one coordinate");
    return FieldElement(coords[0]);
  }
  auto mp = rational_vector_from_json(j["min_poly"], "min_poly");
  auto iv = rational_vector_from_json(j["interval"], "interval");
  if (iv.size() != 2) throw ParseError("interval must be [lo, hi]");
  auto field = std::make_shared<RealAlgebraicField>(
      Polynomial(mp), RationalInterval(iv[0], iv[1]),
      /*irreducibility_asserted=*/true);
  return FieldElement(field, coords);
}

Json report_scalar_to_json(const ReportScalar& s, const FieldPtr& field) {
  Json j;
  if (s.exact) {
    j["field"] = field_to_json(s.value.field() ? s.value.field() : field);
    j["coords"] = rational_vector_to_json(s.value.coords());
  } else {
    j["interval"] = Json::array({rational_to_json(s.interval.lo),
                                 rational_to_json(s.interval.hi)});
  }
  return j;
}

Json splitting_to_json(const Splitting& s) {
  Json j;
  j["field"] = field_to_json(s.extension);
  auto summand = [&](const Matrix<FieldElement>& basis) {
    Json vectors = Json::array();
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      Json vec = Json::array();
      for (std::size_t r = 0; r < basis.rows(); ++r)
        vec.push_back(rational_vector_to_json(basis.at(r, c).coords()));
      vectors.push_back(std::move(vec));
    }
    return vectors;
  };
  j["unstable"] = summand(s.unstable);
  j["stable"] = summand(s.stable);
  j["neutral"] = summand(s.neutral);
  return j;
}

Json acceptability_to_json(const AcceptabilityReport& r) {
  Json j;
  j["acceptable"] = r.acceptable;
  Json layers = Json::array();
  for (const auto& l : r.layers) {
    Json lj;
    lj["layer"] = l.layer;
    lj["dense"] = l.dense;
    lj["witness"] = l.witness ? integer_vector_to_json(*l.witness) : Json(nullptr);
    layers.push_back(std::move(lj));
  }
  j["layers"] = std::move(layers);
  return j;
}

Json report_to_json(const LefschetzReport& rep, const std::string& name) {
  Json j;
  j["name"] = name;
  j["foliation"] = to_string(rep.foliation);
  j["anosov_class"] = to_string(rep.anosov);
  j["mode"] = rep.exact_mode ? "exact" : "interval";
  j["field"] = field_to_json(rep.field);
  Json dims;
  dims["p"] = rep.dim_p;
  dims["unstable"] = rep.dim_unstable;
  dims["stable"] = rep.dim_stable;
  dims["neutral"] = rep.dim_neutral;
  j["dims"] = std::move(dims);
  j["det_one_minus_fstar_g"] = rational_to_json(rep.global_determinant);
  j["fixed_point_count"] = rep.fixed_point_count;
  Json pts = Json::array();
  for (const auto& p : rep.fixed_points) {
    Json pj;
    pj["coords"] = rational_vector_to_json(p.coords);
    pj["gamma"] = integer_vector_to_json(p.gamma);
    pts.push_back(std::move(pj));
  }
  j["fixed_points"] = std::move(pts);
  j["lhs_cohomology"] = rep.cohomology_skipped
                            ? Json(nullptr)
                            : report_scalar_to_json(rep.lhs_cohomology, rep.field);
  j["lhs_determinant"] = report_scalar_to_json(rep.lhs_determinant, rep.field);
  j["rhs_fixed_point_sum"] =
      report_scalar_to_json(rep.rhs_fixed_point_sum, rep.field);
  j["acceptability"] = rep.acceptability
                           ? acceptability_to_json(*rep.acceptability)
                           : Json(nullptr);
  j["verdict"] = to_string(rep.verdict);
  j["precision"] = rational_to_json(rep.precision);
  return j;
}

Json nomizu_to_json(const NomizuReport& rep, const std::string& name) {
  Json j;
  j["name"] = name;
  j["betti"] = rep.betti;
  j["euler_characteristic"] = rep.euler;
  j["euler_zero"] = rep.euler_zero;
  j["expected_match"] =
      rep.expected_match ? Json(*rep.expected_match) : Json(nullptr);
  return j;
}

Json validation_report_json(const ProblemSpec& spec) {
  Json j;
  j["name"] = spec.name;
  bool ok = true;

  auto av = validate_algebra(spec.algebra);
  Json ja;
  ja["antisymmetric"] = av.antisymmetric;
  ja["jacobi"] = av.jacobi;
  ja["nilpotent"] = av.nilpotent;
  ja["nilpotency_class"] = av.nilpotency_class;
  ja["detail"] = av.detail.empty() ? Json(nullptr) : Json(av.detail);
  j["lie_algebra"] = std::move(ja);
  ok = ok && av.ok();

  PolynomialGroup group;
  bool group_usable = false, group_derived = false;
  Json jg;
  if (av.ok()) {
    try {
      if (spec.group) {
        group = *spec.group;
      } else {
        bool warn = false;
        group = bch_group_from_algebra(spec.algebra, &warn);
        group_derived = true;
      }
      auto gv = validate_group(group);
      jg["derived_from_bch"] = group_derived;
      jg["structural"] = gv.structural_ok();
      jg["integer_coefficients"] = gv.integer_coefficients;
      jg["matches_algebra"] = group_matches_algebra(group, spec.algebra);
      bool blocks_ok = true;
      try {
        auto expected = adapted_layer_blocks(spec.algebra);
        auto canon = [](std::vector<std::vector<std::size_t>> b) {
          for (auto& x : b) std::sort(x.begin(), x.end());
          return b;
        };
        blocks_ok = canon(group.layer_blocks) == canon(expected);
      } catch (const Error&) {
        blocks_ok = false;
      }
      jg["layer_blocks_match_series"] = blocks_ok;
      jg["layers"] = group.layer_blocks.size();
      jg["detail"] = gv.detail.empty() ? Json(nullptr) : Json(gv.detail);
      group_usable =
          gv.structural_ok() && jg["matches_algebra"].get<bool>() && blocks_ok;
      ok = ok && group_usable && gv.integer_coefficients;
    } catch (const Error& e) {
      jg["error"] = e.what();
      ok = false;
    }
  } else {
    jg = Json(nullptr);
  }
  j["group"] = std::move(jg);

  Json je;
  if (group_usable) {
    try {
      PolynomialMap f;
      if (spec.endo_matrix) {
        f = linear_map(*spec.endo_matrix);
      } else {
        f = *spec.endo_map;
      }
      GroupEndomorphism endo = validate_endomorphism_map(group, f);
      je["homomorphism"] = true;
      je["lattice_preserving"] = true;
      je["no_eigenvalue_one"] = true;
      je["linear_part"] = Json::array();
      for (std::size_t i = 0; i < endo.linear_part.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < endo.linear_part.cols(); ++c)
          row.push_back(endo.linear_part.at(i, c).str());
        je["linear_part"].push_back(std::move(row));
      }
      auto lv = validate_endomorphism(spec.algebra, endo.linear_part);
      je["lie_endomorphism"] = lv.homomorphism && lv.preserves_series;
      ok = ok && je["lie_endomorphism"].get<bool>();
    } catch (const Error& e) {
      je["error"] = e.what();
      ok = false;
    }
  } else {
    je = Json(nullptr);
    ok = false;
  }
  j["endomorphism"] = std::move(je);
  j["ok"] = ok;
  return j;
}

Json analyze_report_json(const ProblemSpec& spec) {
  AssembledProblem ap = assemble_problem(spec);
  Json j;
  j["name"] = spec.name;

  auto chain = lower_central_series(ap.algebra);
  Json dims = Json::array();
  for (const auto& c : chain)
    if (c.cols() > 0) dims.push_back(c.cols());
  j["central_series_dims"] = std::move(dims);

  Polynomial cp = char_poly(ap.endo.linear_part);
  j["char_poly"] = Json::array();
  for (const auto& c : cp.coefficients())
    j["char_poly"].push_back(rational_to_json(c));
  j["anosov_class"] = to_string(anosov_class(cp));

  try {
    Splitting s = split(ap.algebra, ap.endo.linear_part);
    Json sj = splitting_to_json(s);
    sj["dims"] = Json::object();
    sj["dims"]["unstable"] = s.dim_unstable();
    sj["dims"]["stable"] = s.dim_stable();
    sj["dims"]["neutral"] = s.dim_neutral();
    Json spectrum = Json::array();
    for (const auto& [enc, mult] : s.eigen_data) {
      Json e;
      e["class"] = to_string(enc.circle_class());
      e["multiplicity"] = mult;
      e["re"] = Json::array(
          {rational_to_json(enc.re().lo), rational_to_json(enc.re().hi)});
      if (!enc.is_real())
        e["im"] = Json::array(
            {rational_to_json(enc.im().lo), rational_to_json(enc.im().hi)});
      spectrum.push_back(std::move(e));
    }
    sj["spectrum"] = std::move(spectrum);
    j["splitting"] = std::move(sj);
    Json acc;
    acc["unstable"] =
        acceptability_to_json(is_gamma_acceptable(ap.algebra, s.unstable));
    acc["stable"] =
        acceptability_to_json(is_gamma_acceptable(ap.algebra, s.stable));
    j["acceptability"] = std::move(acc);
  } catch (const UnsupportedScalarTower& e) {
    Json sj;
    sj["unsupported_scalar_tower"] = e.what();
    j["splitting"] = std::move(sj);
    j["acceptability"] = Json(nullptr);
  }
  return j;
}

}  // namespace lefschetz
