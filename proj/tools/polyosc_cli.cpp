#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyosc/errors.hpp"
#include "polyosc/oracle.hpp"
#include "polyosc/poly.hpp"
#include "polyosc/report.hpp"
#include "polyosc/spectrum.hpp"
#include "polyosc/system.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polyosc;

struct CommonArgs {
  std::string system;
  int l1 = 0;
  int l2 = 0;
  std::string kappa;
  std::string format = "table";
  std::string out;
};

void add_common(CLI::App* cmd, CommonArgs* args, bool with_format = true) {
  cmd->add_option("--system", args->system, "system kind: aniso or sw")
      ->required()
      ->check(CLI::IsMember({"aniso", "sw"}));
  cmd->add_option("--l1", args->l1, "mode-1 frequency multiplier")->required();
  cmd->add_option("--l2", args->l2, "mode-2 frequency multiplier")->required();
  cmd->add_option("--kappa", args->kappa,
                  "barrier strength as a rational p/q (sw only)");
  if (with_format)
    cmd->add_option("--format", args->format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", args->out, "write output to this file");
}

SystemSpec system_from_args(const CommonArgs& args) {
  std::optional<Rational> kappa;
  if (!args.kappa.empty()) {
    kappa = parse_rational(args.kappa);
    if (!kappa)
      throw CLI::ValidationError(
          "--kappa", "expected an exact rational like 1/3, got '" +
                         args.kappa + "'");
  }
  const SystemKind kind = args.system == "aniso" ? SystemKind::Anisotropic
                                                 : SystemKind::SWDeformed;
  return make_system(kind, args.l1, args.l2, kappa);
}

Rational emax_from_string(const std::string& text) {
  const auto value = parse_rational(text);
  if (!value || *value <= 0)
    throw CLI::ValidationError(
        "--emax", "expected a positive rational like 40 or 81/2, got '" +
                      text + "'");
  return *value;
}

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

ordered_json system_json(const SystemSpec& sys) {
  ordered_json j;
  j["kind"] = sys.kind == SystemKind::Anisotropic ? "aniso" : "sw";
  j["l1"] = sys.l1;
  j["l2"] = sys.l2;
  if (sys.kind == SystemKind::SWDeformed) j["kappa"] = to_string(sys.kappa);
  return j;
}

ordered_json poly_terms_json(const BivarPoly& poly) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : poly.terms()) {
    ordered_json t;
    t["m_power"] = key.first;
    t["e_power"] = key.second;
    t["coeff"] = c.to_string();
    terms.push_back(t);
  }
  return terms;
}

std::string label_text(const FamilyLabel& label) {
  std::string text = std::to_string(label.i) + "-" + std::to_string(label.j);
  if (label.sector > 0) text += "+";
  if (label.sector < 0) text += "-";
  return text;
}

std::string state_label(const SystemSpec& sys, int n1, int n2) {
  return std::to_string(n1 % sys.l2 + 1) + "-" +
         std::to_string(n2 % sys.l1 + 1);
}

int cmd_structure(const CommonArgs& args) {
  const SystemSpec sys = system_from_args(args);
  const FactoredPoly phi = structure_function(sys);
  const BivarPoly comm = commutator_polynomial(phi);
  const CasimirSplit split = casimir_split(phi);

  std::ostringstream out;
  if (args.format == "json") {
    ordered_json j;
    j["system"] = system_json(sys);
    ordered_json jphi;
    jphi["lead"] = phi.lead.to_string();
    ordered_json factors = ordered_json::array();
    for (const auto& f : phi.factors) {
      ordered_json jf;
      jf["m_coeff"] = to_string(f.m_coeff);
      jf["e_coeff"] = to_string(f.e_coeff);
      jf["constant"] = f.constant.to_string();
      jf["text"] = to_string(f);
      factors.push_back(jf);
    }
    jphi["factors"] = factors;
    j["phi"] = jphi;
    ordered_json jc;
    jc["deg_m"] = comm.deg_m();
    jc["terms"] = poly_terms_json(comm);
    jc["text"] = comm.to_string();
    j["commutator"] = jc;
    ordered_json js;
    js["casimir"] = poly_terms_json(split.casimir);
    js["casimir_text"] = split.casimir.to_string();
    ordered_json alphas = ordered_json::array();
    for (std::size_t i = 1; i < split.alpha.size(); ++i) {
      if (split.alpha[i].is_zero()) continue;
      ordered_json ja;
      ja["power"] = static_cast<int>(i);
      ja["terms"] = poly_terms_json(split.alpha[i]);
      ja["text"] = split.alpha[i].to_string();
      alphas.push_back(ja);
    }
    js["alpha"] = alphas;
    j["casimir_split"] = js;
    out << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "m_power,e_power,coeff\n";
    for (const auto& [key, c] : comm.terms())
      out << key.first << "," << key.second << "," << c.to_string() << "\n";
  } else {
    out << "system: " << sys.name() << "\n";
    out << "phi = " << to_string(phi) << "\n";
    out << "deg_m(P) = " << comm.deg_m() << "\n";
    out << "P(m;E) = " << comm.to_string() << "\n";
    out << "casimir(E) = " << split.casimir.to_string() << "\n";
    for (std::size_t i = 1; i < split.alpha.size(); ++i) {
      if (split.alpha[i].is_zero()) continue;
      out << "alpha[" << i << "](E) = " << split.alpha[i].to_string() << "\n";
    }
  }
  deliver(out.str(), args.out);
  return 0;
}

int cmd_spectrum(const CommonArgs& args, const std::string& emax_text) {
  const SystemSpec sys = system_from_args(args);
  const Rational e_max = emax_from_string(emax_text);
  const FactoredPoly phi = structure_function(sys);
  const std::vector<EnergyFamily> families = solve_families(phi, sys);
  const std::vector<SpectrumLevel> levels = assemble_levels(families, e_max);

  std::ostringstream out;
  if (args.format == "json") {
    ordered_json j;
    j["system"] = system_json(sys);
    j["e_max"] = to_string(e_max);
    ordered_json jf = ordered_json::array();
    for (std::size_t i = 0; i < families.size(); ++i) {
      const EnergyFamily& f = families[i];
      ordered_json one;
      one["index"] = static_cast<int>(i);
      one["base"] = f.base.to_string();
      one["base_float"] = round_to_12(f.base.to_double());
      one["step"] = to_string(f.step);
      one["lower_factor_id"] = f.lower_factor_id;
      one["upper_factor_id"] = f.upper_factor_id;
      if (f.label) one["label"] = label_text(*f.label);
      jf.push_back(one);
    }
    j["families"] = jf;
    ordered_json jl = ordered_json::array();
    for (const auto& level : levels) {
      ordered_json one;
      one["energy"] = round_to_12(level.energy.to_double());
      one["energy_exact"] = level.energy.to_string();
      one["degeneracy"] = level.total_degeneracy;
      ordered_json contributors = ordered_json::array();
      for (const auto& c : level.contributors) {
        ordered_json jc;
        jc["family"] = c.family_index;
        jc["n"] = c.n;
        contributors.push_back(jc);
      }
      one["contributors"] = contributors;
      jl.push_back(one);
    }
    j["levels"] = jl;
    out << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "energy,energy_exact,degeneracy,contributors\n";
    for (const auto& level : levels) {
      out << format_double(level.energy.to_double()) << ","
          << level.energy.to_string() << "," << level.total_degeneracy << ",";
      for (std::size_t i = 0; i < level.contributors.size(); ++i) {
        if (i) out << ";";
        out << level.contributors[i].family_index << ":"
            << level.contributors[i].n;
      }
      out << "\n";
    }
  } else {
    out << "system: " << sys.name() << "\n";
    out << "families (E(n) = base + step*n, degeneracy n+1):\n";
    for (std::size_t i = 0; i < families.size(); ++i) {
      const EnergyFamily& f = families[i];
      out << "  [" << i << "] base = " << f.base.to_string() << " ("
          << format_double(f.base.to_double()) << "), step = "
          << to_string(f.step);
      if (f.label) out << ", label " << label_text(*f.label);
      out << "\n";
    }
    out << "levels up to e_max = " << to_string(e_max) << ":\n";
    out << "  energy          exact              degeneracy  contributors\n";
    for (const auto& level : levels) {
      std::ostringstream row;
      row << "  " << format_double(level.energy.to_double());
      while (row.str().size() < 18) row << " ";
      row << level.energy.to_string();
      while (row.str().size() < 37) row << " ";
      row << level.total_degeneracy;
      while (row.str().size() < 49) row << " ";
      for (std::size_t i = 0; i < level.contributors.size(); ++i) {
        if (i) row << " ";
        row << level.contributors[i].family_index << ":"
            << level.contributors[i].n;
      }
      out << row.str() << "\n";
    }
  }
  deliver(out.str(), args.out);
  return 0;
}

int cmd_verify(const CommonArgs& args, int ncut, double tol,
               const std::string& emax_text) {
  const SystemSpec sys = system_from_args(args);
  VerifyOptions options;
  options.basis_n1 = ncut;
  options.basis_n2 = ncut;
  options.tolerance = tol;
  options.e_max = emax_from_string(emax_text);
  const VerificationReport report = run_verification(sys, options);
  deliver(report_to_json(report).dump(2) + "\n", args.out);
  return report.overall_pass ? 0 : 1;
}

int cmd_diagram(const CommonArgs& args, const std::string& emax_text) {
  const SystemSpec sys = system_from_args(args);
  if (sys.kind != SystemKind::Anisotropic)
    throw Error(Errc::UnsupportedSystem,
                "level diagrams cover the anisotropic oscillator only");
  const Rational e_max = emax_from_string(emax_text);

  struct Row {
    int n1;
    int n2;
    Rational energy;
  };
  std::vector<Row> rows;
  for (int n1 = 0;; ++n1) {
    const Rational e1(sys.l1 * (2 * n1 + 1), 2);
    if (e1 + Rational(sys.l2, 2) > e_max) break;
    for (int n2 = 0;; ++n2) {
      const Rational e = e1 + Rational(sys.l2 * (2 * n2 + 1), 2);
      if (e > e_max) break;
      rows.push_back({n1, n2, e});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.n1 < b.n1;
  });

  std::ostringstream out;
  if (args.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json one;
      one["n1"] = row.n1;
      one["n2"] = row.n2;
      one["energy"] = round_to_12(to_double(row.energy));
      one["family_label"] = state_label(sys, row.n1, row.n2);
      j.push_back(one);
    }
    out << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "n1,n2,energy,family_label\n";
    for (const auto& row : rows)
      out << row.n1 << "," << row.n2 << ","
          << format_double(to_double(row.energy)) << ","
          << state_label(sys, row.n1, row.n2) << "\n";
  } else {
    out << "system: " << sys.name() << ", e_max = " << to_string(e_max)
        << "\n";
    out << "  n1  n2  energy          label\n";
    for (const auto& row : rows) {
      std::ostringstream line;
      line << "  " << row.n1;
      while (line.str().size() < 6) line << " ";
      line << row.n2;
      while (line.str().size() < 10) line << " ";
      line << format_double(to_double(row.energy));
      while (line.str().size() < 26) line << " ";
      line << state_label(sys, row.n1, row.n2);
      out << line.str() << "\n";
    }
  }
  deliver(out.str(), args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial ladder algebras of two-dimensional oscillators"};
  app.require_subcommand(1);

  CommonArgs structure_args;
  auto* structure = app.add_subcommand(
      "structure", "factored phi, expanded P(m;E), and the Casimir split");
  add_common(structure, &structure_args);

  CommonArgs spectrum_args;
  std::string spectrum_emax = "40";
  auto* spectrum =
      app.add_subcommand("spectrum", "energy families and merged levels");
  add_common(spectrum, &spectrum_args);
  spectrum->add_option("--emax", spectrum_emax,
                       "energy cutoff as a rational, w0 units");

  CommonArgs verify_args;
  int verify_ncut = 40;
  double verify_tol = 1e-9;
  std::string verify_emax = "40";
  auto* verify = app.add_subcommand(
      "verify", "run the full check suite and emit a JSON report");
  add_common(verify, &verify_args, /*with_format=*/false);
  verify->add_option("--ncut", verify_ncut, "per-mode basis cutoff");
  verify->add_option("--tol", verify_tol, "operator identity tolerance");
  verify->add_option("--emax", verify_emax, "spectrum comparison cutoff");

  CommonArgs diagram_args;
  std::string diagram_emax = "10";
  auto* diagram = app.add_subcommand(
      "diagram", "occupation-lattice level dataset (anisotropic only)");
  add_common(diagram, &diagram_args);
  diagram->add_option("--emax", diagram_emax,
                      "energy cutoff as a rational, w0 units");

  try {
    app.parse(argc, argv);
    if (structure->parsed()) return cmd_structure(structure_args);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_args, spectrum_emax);
    if (verify->parsed())
      return cmd_verify(verify_args, verify_ncut, verify_tol, verify_emax);
    if (diagram->parsed()) return cmd_diagram(diagram_args, diagram_emax);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const polyosc::Error& e) {
    const Errc code = e.code();
    std::cerr << e.what() << "\n";
    // argument-validation failures are flag errors
    if (code == Errc::NonPositiveMultiplier ||
        code == Errc::KappaOutOfRange || code == Errc::UnexpectedKappa)
      return 2;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
