#include "polyosc/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "polyosc/errors.hpp"
#include "polyosc/fock.hpp"
#include "polyosc/oracle.hpp"
#include "polyosc/poly.hpp"
#include "polyosc/spectrum.hpp"

namespace polyosc {

const char* check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

double round_to_12(double value) {
  return std::strtod(format_double(value).c_str(), nullptr);
}

namespace {

using Checks = std::vector<CheckResult>;

CheckResult residual_result(std::string name, double residual, double tol) {
  CheckResult r;
  r.name = std::move(name);
  r.max_residual = residual;
  r.status = residual < tol ? CheckStatus::Pass : CheckStatus::Fail;
  r.summary = "tolerance " + format_double(tol);
  return r;
}

CheckResult flag_result(std::string name, bool ok, std::string summary) {
  CheckResult r;
  r.name = std::move(name);
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  r.summary = std::move(summary);
  return r;
}

CheckResult note_result(std::string name, std::string summary) {
  CheckResult r;
  r.name = std::move(name);
  r.status = CheckStatus::Skipped;
  r.summary = std::move(summary);
  return r;
}

BivarPoly poly_from_terms(
    const std::vector<std::tuple<int, int, Rational>>& terms) {
  BivarPoly p;
  for (const auto& [mp, ep, c] : terms) p.add_term(mp, ep, AlgScalar(c));
  return p;
}

std::string diff_summary(const SpectrumDiff& diff, std::size_t compared) {
  if (diff.pass)
    return std::to_string(compared) + " levels, energies and degeneracies equal";
  std::ostringstream out;
  out << diff.missing_in_a.size() << " missing on the solver side, "
      << diff.missing_in_b.size() << " missing on the oracle side, "
      << diff.degeneracy_mismatches.size() << " degeneracy mismatches";
  return out.str();
}

// Closed-form golden targets for the small anisotropic systems.
void append_closed_form_matches(const SystemSpec& sys, const BivarPoly& comm,
                                const CasimirSplit& split, Checks& checks) {
  const int l1 = sys.l1;
  const int l2 = sys.l2;
  if (l1 == 1 && l2 == 1) {
    const BivarPoly expect_p = poly_from_terms({{1, 0, 2}});
    checks.push_back(flag_result("closed_form_commutator_match",
                                 comm == expect_p, "expected P = 2*m"));
    const BivarPoly expect_c =
        poly_from_terms({{0, 2, Rational(1, 2)}, {0, 0, Rational(-1, 2)}});
    const bool casimir_ok = split.casimir == expect_c &&
                            split.alpha.size() > 2 &&
                            split.alpha[2] == poly_from_terms({{0, 0, 2}});
    checks.push_back(flag_result("closed_form_casimir_match", casimir_ok,
                                 "expected casimir = E^2/2 - 1/2, alpha_2 = 2"));
  } else if (l1 == 2 && l2 == 2) {
    const BivarPoly expect_p =
        poly_from_terms({{1, 2, 1}, {1, 0, -12}, {3, 0, -64}});
    checks.push_back(flag_result("closed_form_commutator_match",
                                 comm == expect_p,
                                 "expected P = (E^2 - 12)*m - 64*m^3"));
    const BivarPoly expect_c = poly_from_terms({{0, 4, Rational(1, 128)},
                                                {0, 2, Rational(-5, 16)},
                                                {0, 0, Rational(9, 8)}});
    checks.push_back(
        flag_result("closed_form_casimir_match", split.casimir == expect_c,
                    "expected casimir = E^4/128 - 5*E^2/16 + 9/8"));
  } else if (l1 == 3 && l2 == 1) {
    const BivarPoly expect_p = poly_from_terms({{3, 0, 108},
                                                {2, 1, -27},
                                                {2, 0, 54},
                                                {1, 1, -9},
                                                {1, 0, 30},
                                                {0, 3, Rational(1, 4)},
                                                {0, 1, -3},
                                                {0, 0, 4}});
    checks.push_back(flag_result(
        "closed_form_commutator_match", comm == expect_p,
        "expected P = 108*m^3 + (-27*E + 54)*m^2 + (-9*E + 30)*m + E^3/4 - "
        "3*E + 4"));
  }
}

void run_anisotropic_checks(const SystemSpec& sys, const VerifyOptions& opts,
                            Checks& checks) {
  using Scalar = long double;
  const int l1 = sys.l1;
  const int l2 = sys.l2;

  const FactoredPoly phi = structure_function(sys);
  const BivarPoly comm = commutator_polynomial(phi);
  const CasimirSplit split = casimir_split(phi);

  const FockBasis basis = build_basis(opts.basis_n1, opts.basis_n2);
  const LadderOps<Scalar> ops = ladder_triple<Scalar>(sys, basis);
  const std::vector<int> mask_small = interior_mask(basis, l2, l1);
  const std::vector<int> mask_wide = interior_mask(basis, 2 * l2, 2 * l1);

  {
    const auto up = check_identity(commutator(ops.j0, ops.jplus), ops.jplus,
                                   mask_small, opts.tolerance);
    const auto down =
        check_identity(commutator(ops.j0, ops.jminus),
                       Scalar(-1) * ops.jminus, mask_small, opts.tolerance);
    checks.push_back(residual_result(
        "ladder_comm", std::max(up.max_residual, down.max_residual),
        opts.tolerance));
  }
  {
    SparseOperator<Scalar> zero;
    zero.matrix.resize(basis.size(), basis.size());
    const double h_tol = 1e-10;
    const auto up =
        check_identity(commutator(ops.h, ops.jplus), zero, mask_small, h_tol);
    const auto down = check_identity(commutator(ops.h, ops.jminus), zero,
                                     mask_small, h_tol);
    checks.push_back(residual_result(
        "h_comm", std::max(up.max_residual, down.max_residual), h_tol));
  }
  {
    const auto rhs = polynomial_diagonal<Scalar>(basis, sys, comm);
    const auto r = check_identity(commutator(ops.jplus, ops.jminus), rhs,
                                  mask_wide, opts.tolerance);
    checks.push_back(
        residual_result("structure_identity", r.max_residual, opts.tolerance));
  }
  {
    const auto rhs = polynomial_diagonal<Scalar>(basis, sys, expand(phi));
    const auto r = check_identity(ops.jplus * ops.jminus, rhs, mask_wide,
                                  opts.tolerance);
    checks.push_back(
        residual_result("phi_diagonal", r.max_residual, opts.tolerance));
  }
  {
    BivarPoly alpha_sum;
    for (std::size_t i = 1; i < split.alpha.size(); ++i) {
      BivarPoly m_power;
      m_power.add_term(static_cast<int>(i), 0, AlgScalar(1));
      alpha_sum = alpha_sum + split.alpha[i] * m_power;
    }
    const auto lhs = anticommutator(ops.jplus, ops.jminus) +
                     polynomial_diagonal<Scalar>(basis, sys, alpha_sum);
    const auto rhs = polynomial_diagonal<Scalar>(basis, sys, split.casimir);
    const auto r = check_identity(lhs, rhs, mask_wide, opts.tolerance);
    checks.push_back(
        residual_result("casimir_scalar", r.max_residual, opts.tolerance));
  }
  {
    const int expected = l1 + l2 - 1;
    const int got = comm.deg_m();
    checks.push_back(flag_result(
        "order_claim", got == expected,
        "deg_m(P) = " + std::to_string(got) + " (expected " +
            std::to_string(expected) + ")"));
  }

  const std::vector<EnergyFamily> families = solve_families(phi, sys);
  {
    const int expected = l1 * l2;
    checks.push_back(flag_result(
        "family_count", static_cast<int>(families.size()) == expected,
        std::to_string(families.size()) + " families (expected " +
            std::to_string(expected) + ")"));
  }
  {
    const std::vector<EnergyFamily> closed = closed_form_families(sys);
    bool equal = families.size() == closed.size();
    for (std::size_t i = 0; equal && i < families.size(); ++i) {
      equal = families[i].base == closed[i].base &&
              families[i].step == closed[i].step;
    }
    checks.push_back(flag_result(
        "closed_form_match", equal,
        "solver families against E = l1*(i-1/2) + l2*(j-1/2) + l1*l2*n"));
  }
  {
    const auto levels = assemble_levels(families, opts.e_max);
    const auto oracle = enumerate_spectrum(sys, opts.e_max);
    const SpectrumDiff diff = compare_spectra(levels, oracle, opts.tolerance);
    checks.push_back(flag_result("spectrum_vs_oracle", diff.pass,
                                 diff_summary(diff, levels.size())));
  }

  append_closed_form_matches(sys, comm, split, checks);

  if (l1 == 3 && l2 == 1) {
    checks.push_back(note_result(
        "family_list_note",
        "derived family bases {2,3,4} with step 3 match the general closed "
        "form and the lattice oracle; a known variant of the explicit 3:1 "
        "list reads {2,5,8} (frequency roles swapped in the first term, a "
        "dropped '+' in the second) and is recorded here, not used"));
  }
}

void run_deformed_checks(const SystemSpec& sys, const VerifyOptions& opts,
                         const GridSpec& grid, Checks& checks) {
  const int l1 = sys.l1;
  const int l2 = sys.l2;

  const FactoredPoly phi = structure_function(sys);
  const BivarPoly comm = commutator_polynomial(phi);

  {
    const int expected = 2 * (l1 + l2) - 1;
    const int got = comm.deg_m();
    checks.push_back(flag_result(
        "order_claim", got == expected,
        "deg_m(P) = " + std::to_string(got) + " (expected " +
            std::to_string(expected) + ")"));
  }

  const std::vector<EnergyFamily> families = solve_families(phi, sys);
  {
    const int expected = 4 * l1 * l2;
    checks.push_back(flag_result(
        "family_count", static_cast<int>(families.size()) == expected,
        std::to_string(families.size()) + " families (expected " +
            std::to_string(expected) + ")"));
  }
  {
    const auto levels = assemble_levels(families, opts.e_max);
    const auto oracle = enumerate_spectrum(sys, opts.e_max);
    const SpectrumDiff diff = compare_spectra(levels, oracle, opts.tolerance);
    checks.push_back(flag_result("spectrum_vs_oracle", diff.pass,
                                 diff_summary(diff, levels.size())));
  }
  {
    const SystemSpec at_zero =
        make_system(SystemKind::SWDeformed, l1, l2, Rational(0));
    const SystemSpec plain = make_system(SystemKind::Anisotropic, l1, l2);
    const auto solved =
        assemble_levels(solve_families(structure_function(at_zero), at_zero),
                        opts.e_max);
    const auto plain_levels = enumerate_spectrum(plain, opts.e_max);
    const auto zero_levels = enumerate_spectrum(at_zero, opts.e_max);
    const bool solver_ok =
        compare_spectra(solved, plain_levels, opts.tolerance).pass;
    const bool oracle_ok =
        compare_spectra(zero_levels, plain_levels, opts.tolerance).pass;
    checks.push_back(flag_result(
        "kappa_zero_limit", solver_ok && oracle_ok,
        "solver and lattice spectra at kappa = 0 against the plain "
        "anisotropic spectrum, exact comparison"));
  }

  // finite-difference side: three grids with spacing h, h/2, h/4
  const GridSpec g0 = grid;
  const GridSpec g1 = g0.refined();
  const GridSpec g2 = g1.refined();
  const GridOperators ops0 = grid_mode2(l2, sys.kappa, g0);
  const GridOperators ops1 = grid_mode2(l2, sys.kappa, g1);
  const GridOperators ops2 = grid_mode2(l2, sys.kappa, g2);
  const Eigen::VectorXd ev0 = grid_eigenvalues(ops0, 3);
  const Eigen::VectorXd ev1 = grid_eigenvalues(ops1, 3);
  const Eigen::VectorXd ev2 = grid_eigenvalues(ops2, 3);

  {
    const AlgContext ctx = sys.context();
    double worst = 0;
    for (int k = 0; k < 3; ++k) {
      const AlgScalar exact(Rational(l2 * (2 * k + 1)), Rational(l2, 2), ctx);
      worst = std::max(worst, std::abs(ev0[k] - exact.to_double()));
    }
    CheckResult r = residual_result("fd_sector_match", worst, 1e-3);
    r.summary = "lowest three \"+\"-sector levels against l2*(2k+1+s/2), "
                "default grid, tolerance 0.001";
    checks.push_back(r);
  }
  {
    bool ok = true;
    std::ostringstream ratios;
    for (int k = 0; k < 3; ++k) {
      const double num = ev0[k] - ev1[k];
      const double den = ev1[k] - ev2[k];
      const double ratio = den != 0 ? num / den : 0;
      if (!(ratio >= 3.5 && ratio <= 4.5)) ok = false;
      if (k) ratios << ", ";
      ratios << format_double(ratio);
    }
    checks.push_back(flag_result(
        "fd_richardson", ok,
        "eigenvalue Richardson ratios {" + ratios.str() +
            "} for the lowest three levels, expected within [3.5, 4.5]"));
  }
  {
    // commutator residual on the lowest FD state not annihilated by A2
    // (the k = 1 ladder state; A2 maps it down the ladder), measured over
    // the window x in [0.5, x_max - 0.5]
    auto residual_at = [&](const GridOperators& ops,
                           const Eigen::VectorXd& ev) {
      const Eigen::VectorXd psi = grid_eigenvector(ops, ev[1]);
      return grid_commutator_residual(ops, psi, 0.5, ops.grid.x_max - 0.5);
    };
    const double r0 = residual_at(ops0, ev0);
    const double r1 = residual_at(ops1, ev1);
    const double r2 = residual_at(ops2, ev2);
    const double ratio01 = r1 > 0 ? r0 / r1 : 0;
    const double ratio12 = r2 > 0 ? r1 / r2 : 0;
    const bool ok = ratio01 >= 3.5 && ratio12 >= 3.5;
    checks.push_back(flag_result(
        "grid_comm_residual", ok,
        "[H2,A2] + 2*l2*A2 residual shrink per grid halving: " +
            format_double(ratio01) + ", " + format_double(ratio12) +
            " (expected >= 3.5)"));
  }

  checks.push_back(note_result(
      "sector_sign_note",
      "mode-2 factor constants 2r-1 -+ s/2 are fixed by the lowest-state "
      "condition in each sector and verified by the grid oracle and the "
      "kappa->0 limit; a known variant flips these offset signs for r >= 2 "
      "and fails both; recorded here, not used"));
}

}  // namespace

VerificationReport run_verification(const SystemSpec& sys,
                                    const VerifyOptions& options) {
  VerificationReport report;
  report.system = sys;
  report.options = options;
  report.grid = options.grid.value_or(GridSpec::defaults_for(sys.l2));

  if (sys.kind == SystemKind::Anisotropic) {
    run_anisotropic_checks(sys, options, report.checks);
  } else {
    run_deformed_checks(sys, options, report.grid, report.checks);
  }

  report.overall_pass = true;
  for (const auto& check : report.checks)
    if (check.status == CheckStatus::Fail) report.overall_pass = false;
  return report;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json sys;
  sys["kind"] =
      report.system.kind == SystemKind::Anisotropic ? "aniso" : "sw";
  sys["l1"] = report.system.l1;
  sys["l2"] = report.system.l2;
  if (report.system.kind == SystemKind::SWDeformed)
    sys["kappa"] = to_string(report.system.kappa);
  j["system"] = sys;

  nlohmann::ordered_json env;
  env["basis_n1"] = report.options.basis_n1;
  env["basis_n2"] = report.options.basis_n2;
  env["grid_points"] = report.grid.points;
  env["grid_x_max"] = round_to_12(report.grid.x_max);
  env["tolerance"] = round_to_12(report.options.tolerance);
  env["e_max"] = to_string(report.options.e_max);
  j["environment"] = env;

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json c;
    c["name"] = check.name;
    c["status"] = check_status_name(check.status);
    if (check.max_residual)
      c["max_residual"] = round_to_12(*check.max_residual);
    if (!check.summary.empty()) c["summary"] = check.summary;
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["overall_pass"] = report.overall_pass;
  return j;
}

}  // namespace polyosc
