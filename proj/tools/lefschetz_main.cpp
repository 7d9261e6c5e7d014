#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lefschetz/json_io.hpp"

using namespace lefschetz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;

std::string analyze_text(const Json& j) {
  std::ostringstream os;
  os << "name:                 " << j["name"].get<std::string>() << "\n";
  os << "central series dims: ";
  for (const auto& d : j["central_series_dims"]) os << " " << d;
  os << "\n";
  os << "spectral class:       " << j["anosov_class"].get<std::string>() << "\n";
  if (j["splitting"].contains("dims")) {
    const auto& d = j["splitting"]["dims"];
    os << "splitting dims:       u=" << d["unstable"] << " s=" << d["stable"]
       << " e=" << d["neutral"] << "\n";
    for (const char* side : {"unstable", "stable"}) {
      const auto& a = j["acceptability"][side];
      std::string label = std::string(side) + " acceptable:";
      label.resize(22, ' ');
      os << label << (a["acceptable"].get<bool>() ? "yes" : "no");
      for (const auto& l : a["layers"]) {
        os << " [layer " << l["layer"] << ": "
           << (l["dense"].get<bool>() ? "dense" : "not dense");
        if (!l["witness"].is_null()) {
          os << ", witness (";
          bool first = true;
          for (const auto& w : l["witness"]) {
            os << (first ? "" : ",") << w.get<std::string>();
            first = false;
          }
          os << ")";
        }
        os << "]";
      }
      os << "\n";
    }
  } else {
    os << "splitting:            unsupported scalar tower\n";
  }
  return os.str();
}

std::string validate_text(const Json& j) {
  std::ostringstream os;
  os << "name:        " << j["name"].get<std::string>() << "\n";
  auto flag = [&](const char* label, const Json& v) {
    os << label << (v.is_boolean() && v.get<bool>() ? "pass" : "FAIL") << "\n";
  };
  const auto& a = j["lie_algebra"];
  flag("antisymmetry:  ", a["antisymmetric"]);
  flag("jacobi:        ", a["jacobi"]);
  flag("nilpotency:    ", a["nilpotent"]);
  if (!j["group"].is_null() && !j["group"].contains("error")) {
    flag("group law:     ", j["group"]["structural"]);
    flag("lattice:       ", j["group"]["integer_coefficients"]);
    flag("matches g:     ", j["group"]["matches_algebra"]);
    flag("layer blocks:  ", j["group"]["layer_blocks_match_series"]);
  } else if (!j["group"].is_null()) {
    os << "group error:   " << j["group"]["error"].get<std::string>() << "\n";
  }
  if (!j["endomorphism"].is_null()) {
    if (j["endomorphism"].contains("error"))
      os << "endo error:    " << j["endomorphism"]["error"].get<std::string>()
         << "\n";
    else
      flag("endomorphism:  ", j["endomorphism"]["lie_endomorphism"]);
  }
  os << "overall:       " << (j["ok"].get<bool>() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical Lefschetz trace formula verifier for nilmanifolds"};
  app.set_version_flag("--version", "lefschetz 0.1.0");
  app.require_subcommand(1);

  std::string spec_path, format = "text", foliation_flag, precision_flag,
              expected_flag;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_path, "problem spec JSON file")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* cmd_validate = app.add_subcommand("validate", "check all invariants");
  add_common(cmd_validate);
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "central series, spectral class, splitting");
  add_common(cmd_analyze);
  CLI::App* cmd_lefschetz =
      app.add_subcommand("lefschetz", "verify the trace formula");
  add_common(cmd_lefschetz);
  cmd_lefschetz->add_option("--foliation", foliation_flag,
                            "unstable|stable|zero|custom (overrides the spec)");
  cmd_lefschetz->add_option("--precision", precision_flag,
                            "interval width target, e.g. 1/1000000");
  CLI::App* cmd_betti = app.add_subcommand("betti", "Betti numbers of the algebra");
  add_common(cmd_betti);
  cmd_betti->add_option("--expected", expected_flag,
                        "comma-separated expected Betti numbers");

  CLI11_PARSE(app, argc, argv);

  try {
    ProblemSpec spec = load_problem_spec(spec_path);

    if (cmd_validate->parsed()) {
      Json rep = validation_report_json(spec);
      std::cout << (format == "json" ? rep.dump(2) + "\n" : validate_text(rep));
      return rep["ok"].get<bool>() ? kExitOk : kExitFail;
    }

    if (cmd_analyze->parsed()) {
      Json rep = analyze_report_json(spec);
      std::cout << (format == "json" ? rep.dump(2) + "\n" : analyze_text(rep));
      return kExitOk;
    }

    if (cmd_lefschetz->parsed()) {
      if (!foliation_flag.empty()) {
        if (foliation_flag == "unstable") spec.foliation = FoliationKind::Unstable;
        else if (foliation_flag == "stable") spec.foliation = FoliationKind::Stable;
        else if (foliation_flag == "zero") spec.foliation = FoliationKind::Zero;
        else if (foliation_flag == "custom") spec.foliation = FoliationKind::Custom;
        else throw ParseError("bad --foliation value");
        if (spec.foliation == FoliationKind::Custom && !spec.custom_basis)
          throw ParseError("custom foliation requires custom_basis in the spec");
      }
      if (!precision_flag.empty()) {
        spec.precision = Rational::parse(precision_flag);
        if (spec.precision->sign() <= 0)
          throw ParseError("precision must be positive");
      }
      AssembledProblem ap = assemble_problem(spec);
      LefschetzReport rep = verify(ap.algebra, ap.group, ap.endo, ap.foliation,
                                   ap.precision);
      if (format == "json")
        std::cout << report_to_json(rep, spec.name).dump(2) << "\n";
      else
        std::cout << rep.text();
      return rep.verdict == Verdict::Mismatch ? kExitFail : kExitOk;
    }

    if (cmd_betti->parsed()) {
      auto av = validate_algebra(spec.algebra);
      if (!av.ok()) throw NotNilpotent("lie_algebra invalid: " + av.detail);
      std::optional<std::vector<int>> expected;
      if (!expected_flag.empty()) {
        expected = std::vector<int>{};
        std::istringstream is(expected_flag);
        std::string tok;
        while (std::getline(is, tok, ',')) expected->push_back(std::stoi(tok));
      }
      NomizuReport rep = nomizu_check(spec.algebra, expected);
      if (format == "json") {
        std::cout << nomizu_to_json(rep, spec.name).dump(2) << "\n";
      } else {
        std::cout << "betti:";
        for (int b : rep.betti) std::cout << " " << b;
        std::cout << "\neuler characteristic: " << rep.euler << "\n";
        if (rep.expected_match)
          std::cout << "expected match:       "
                    << (*rep.expected_match ? "yes" : "NO") << "\n";
      }
      bool ok = rep.euler_zero && rep.expected_match.value_or(true);
      return ok ? kExitOk : kExitFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitFail;
  }
  return kExitParse;
}
