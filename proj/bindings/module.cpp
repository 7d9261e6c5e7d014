#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lefschetz/json_io.hpp"

namespace py = pybind11;
using namespace lefschetz;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(json_to_py(x));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default: return py::none();
  }
}

FoliationKind foliation_from_name(const std::string& name) {
  if (name == "unstable") return FoliationKind::Unstable;
  if (name == "stable") return FoliationKind::Stable;
  if (name == "zero") return FoliationKind::Zero;
  if (name == "custom") return FoliationKind::Custom;
  throw ParseError("foliation must be unstable|stable|zero|custom");
}

RationalMatrix matrix_from_strings(
    const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return RationalMatrix(0, 0);
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw ParseError("rows must have equal length");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = Rational::parse(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::string>> matrix_to_strings(
    const IntegerMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i].push_back(m.at(i, j).get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_lefschetz, m) {
  m.doc() =
      "Exact verification of the dynamical Lefschetz trace formula for "
      "algebraic Anosov maps on nilmanifolds.";

  py::register_exception<ParseError>(m, "SpecParseError");
  static py::exception<Error> base_error(m, "VerificationError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError&) {
      throw;  // handled by the registered exception above
    } catch (const Error& e) {
      base_error((std::string(e.name()) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "validate",
      [](const std::string& spec_json) {
        return json_to_py(validation_report_json(parse_problem_spec(spec_json)));
      },
      py::arg("spec_json"),
      "Run every structural validation on a problem spec (JSON text); "
      "returns the report as a dict with an overall 'ok' flag.");

  m.def(
      "analyze",
      [](const std::string& spec_json) {
        return json_to_py(analyze_report_json(parse_problem_spec(spec_json)));
      },
      py::arg("spec_json"),
      "Central series, spectral class, splitting and acceptability report.");

  m.def(
      "lefschetz",
      [](const std::string& spec_json, std::optional<std::string> foliation,
         std::optional<std::string> precision) {
        ProblemSpec spec = parse_problem_spec(spec_json);
        if (foliation) spec.foliation = foliation_from_name(*foliation);
        if (precision) spec.precision = Rational::parse(*precision);
        AssembledProblem ap = assemble_problem(spec);
        LefschetzReport rep =
            verify(ap.algebra, ap.group, ap.endo, ap.foliation, ap.precision);
        return json_to_py(report_to_json(rep, spec.name));
      },
      py::arg("spec_json"), py::arg("foliation") = std::nullopt,
      py::arg("precision") = std::nullopt,
      "Verify the trace formula; both sides are computed independently and "
      "compared exactly (or by certified intervals).");

  m.def(
      "betti",
      [](const std::string& spec_json) {
        ProblemSpec spec = parse_problem_spec(spec_json);
        auto av = validate_algebra(spec.algebra);
        if (!av.ok()) throw NotNilpotent("lie_algebra invalid: " + av.detail);
        return nomizu_check(spec.algebra, std::nullopt).betti;
      },
      py::arg("spec_json"),
      "Betti numbers of the algebra's Chevalley-Eilenberg complex (equal to "
      "the nilmanifold's de Rham Betti numbers).");

  m.def(
      "char_poly",
      [](const std::vector<std::vector<std::string>>& rows) {
        Polynomial p = char_poly(matrix_from_strings(rows));
        std::vector<std::string> out;
        for (const auto& c : p.coefficients()) out.push_back(c.str());
        return out;
      },
      py::arg("matrix"),
      "Characteristic polynomial of a rational matrix; ascending "
      "coefficients as rational strings.");

  m.def(
      "classify_unit_circle",
      [](const std::vector<std::string>& ascending_coeffs) {
        std::vector<Rational> c;
        for (const auto& s : ascending_coeffs) c.push_back(Rational::parse(s));
        auto cls = classify_unit_circle(Polynomial(c));
        py::dict out;
        out["inside"] = cls.inside;
        out["on"] = cls.on;
        out["outside"] = cls.outside;
        return out;
      },
      py::arg("coeffs"),
      "Exact root counts of a rational polynomial relative to the unit "
      "circle, with multiplicity.");

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<long long>>& rows) {
        if (rows.empty()) throw ParseError("empty matrix");
        IntegerMatrix mat(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].size() != rows[0].size())
            throw ParseError("rows must have equal length");
          for (std::size_t j = 0; j < rows[i].size(); ++j)
            mat.at(i, j) = Integer(static_cast<long>(rows[i][j]));
        }
        auto snf = smith_normal_form(mat);
        return py::make_tuple(matrix_to_strings(snf.u), matrix_to_strings(snf.d),
                              matrix_to_strings(snf.v));
      },
      py::arg("matrix"),
      "Smith normal form (U, D, V) with U*M*V = D and unimodular U, V; "
      "entries returned as decimal strings.");

  m.attr("__version__") = "0.1.0";
}
