// Command line front end. Subcommands:
//   spectrum     eigenvalues and eigenfunctions for one boundary condition
//   negscan      negative-energy bound state search with oracle cross-check
//   sweep        Robin-angle grid survey, CSV output
//   hermiticity  boundary terms and Gram matrix of the emitted states
//   validate     acceptance checks plus the published-formula audit
//
// Exit codes: 0 ok, 2 bad usage or invalid input, 3 spectrum incomplete,
// 4 internal inconsistency or failed checks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "squarewell/report.hpp"
#include "squarewell/validate.hpp"

namespace {

using namespace squarewell;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitInconsistent = 4;

struct BcOptions {
  std::string family;
  std::string custom;
  std::optional<double> theta0;
  std::optional<double> thetaL;
};

void add_bc_options(CLI::App* cmd, BcOptions& o) {
  cmd->add_option("--family", o.family, "preset family letter A..E");
  cmd->add_option("--custom", o.custom,
                  "a,b:a,b or a,b:a,b=c1:c2 (psi and L*psi' coefficients at 0 and L)");
  auto* t0 = cmd->add_option("--theta0", o.theta0, "Robin angle at x=0, condition cos(t) psi + sin(t) L psi' = 0");
  auto* tL = cmd->add_option("--thetaL", o.thetaL, "Robin angle at x=L");
  t0->needs(tL);
  tL->needs(t0);
}

bool parse_custom(const std::string& text, BoundaryCondition& bc) {
  std::string head = text, tail;
  if (auto eq = text.find('='); eq != std::string::npos) {
    head = text.substr(0, eq);
    tail = text.substr(eq + 1);
  }
  double a0, b0, aL, bL, c1 = 0.0, c2 = 0.0;
  int used = 0;
  if (std::sscanf(head.c_str(), "%lf,%lf:%lf,%lf%n", &a0, &b0, &aL, &bL, &used) != 4 ||
      used != static_cast<int>(head.size()))
    return false;
  if (!tail.empty()) {
    used = 0;
    if (std::sscanf(tail.c_str(), "%lf:%lf%n", &c1, &c2, &used) != 2 ||
        used != static_cast<int>(tail.size()))
      return false;
  }
  bc.at_zero = BoundaryEquation{a0, b0, c1};
  bc.at_length = BoundaryEquation{aL, bL, c2};
  return true;
}

// Fills bc (and family echo) from exactly one of the three selection routes.
// Returns false after printing a usage message.
bool resolve_bc(const BcOptions& o, BoundaryCondition& bc,
                std::optional<Family>& family) {
  const int routes = int(!o.family.empty()) + int(!o.custom.empty()) +
                     int(o.theta0.has_value());
  if (routes != 1) {
    std::cerr << "error: choose exactly one of --family, --custom, --theta0/--thetaL\n";
    return false;
  }
  if (!o.family.empty()) {
    if (o.family.size() != 1) {
      std::cerr << "error: --family expects a single letter A..E\n";
      return false;
    }
    try {
      const Family f = family_from_letter(o.family[0]);
      family = f;
      bc = family_condition(f);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return false;
    }
    return true;
  }
  if (!o.custom.empty()) {
    if (!parse_custom(o.custom, bc)) {
      std::cerr << "error: cannot parse --custom value '" << o.custom << "'\n";
      return false;
    }
    return true;
  }
  bc = condition_from_angles(*o.theta0, *o.thetaL);
  return true;
}

bool require_homogeneous(const BoundaryCondition& bc) {
  if (bc.at_zero.homogeneous() && bc.at_length.homogeneous()) return true;
  std::cerr << "error: eigenvalue commands need homogeneous conditions (rhs 0)\n";
  return false;
}

int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return kExitOk;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitInconsistent;
  }
  os.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  return os.good() ? kExitOk : kExitInconsistent;
}

std::vector<OracleRow> oracle_rows_for(const BoundaryCondition& bc,
                                       const std::vector<Eigenstate>& states) {
  std::vector<OracleRow> rows;
  if (states.empty()) return rows;
  const auto hm = discretize(bc, 4000);
  const auto ev = eigenvalues(hm, static_cast<int>(states.size()));
  for (std::size_t i = 0; i < states.size(); ++i) {
    OracleRow row;
    row.index = static_cast<int>(i);
    row.solver_energy = states[i].energy();
    row.oracle_energy = ev[i];
    row.abs_diff = std::abs(row.solver_energy - row.oracle_energy);
    row.rel_diff = row.abs_diff / std::max(1.0, std::abs(row.oracle_energy));
    rows.push_back(row);
  }
  return rows;
}

int run_spectrum(const BcOptions& bco, int count, double length, double ql_max,
                 const std::string& out_path) {
  BoundaryCondition bc;
  std::optional<Family> family;
  if (!resolve_bc(bco, bc, family)) return kExitUsage;
  if (!require_homogeneous(bc)) return kExitUsage;

  RunReport rep;
  rep.command = "spectrum";
  rep.family = family;
  rep.input_bc = bc;
  rep.length = length;
  rep.count = count;
  rep.ql_max = ql_max;
  rep.spectrum = find_spectrum(bc, count, length, ql_max);
  rep.oracle_rows = oracle_rows_for(bc, rep.spectrum->states);
  if (family) rep.paper_audit = audit_family(*family);
  return emit(to_json(rep), out_path);
}

int run_negscan(const BcOptions& bco, double length, double ql_max,
                const std::string& out_path) {
  BoundaryCondition bc;
  std::optional<Family> family;
  if (!resolve_bc(bco, bc, family)) return kExitUsage;
  if (!require_homogeneous(bc)) return kExitUsage;

  RunReport rep;
  rep.command = "negscan";
  rep.family = family;
  rep.input_bc = bc;
  rep.length = length;
  rep.ql_max = ql_max;
  rep.scan = negative_energy_scan(bc, length, ql_max);
  rep.oracle_negative_count = negative_count(discretize(bc, 4000));
  if (family) rep.paper_audit = audit_family(*family);

  const int found = static_cast<int>(rep.scan->roots.size());
  const int rc = emit(to_json(rep), out_path);
  if (rc != kExitOk) return rc;
  if (found != rep.oracle_negative_count) {
    std::cerr << "error: scan found " << found << " bound state(s) but the oracle found "
              << rep.oracle_negative_count << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int run_hermiticity(const BcOptions& bco, int count, double length, double ql_max,
                    const std::string& out_path) {
  BoundaryCondition bc;
  std::optional<Family> family;
  if (!resolve_bc(bco, bc, family)) return kExitUsage;
  if (!require_homogeneous(bc)) return kExitUsage;

  RunReport rep;
  rep.command = "hermiticity";
  rep.family = family;
  rep.input_bc = bc;
  rep.length = length;
  rep.count = count;
  rep.ql_max = ql_max;
  const auto sp = find_spectrum(bc, count, length, ql_max);
  rep.hermiticity = hermiticity_report(bc, sp.states);
  return emit(to_json(rep), out_path);
}

int run_sweep(int grid, const std::string& out_path) {
  if (grid < 2) {
    std::cerr << "error: --grid must be at least 2\n";
    return kExitUsage;
  }
  const auto angles = uniform_angle_grid(grid);
  const auto sr = bc_sweep(angles, angles);
  return emit(sweep_csv(sr), out_path);
}

int run_validate(const std::string& families_arg, bool strict_paper,
                 const std::string& out_path) {
  std::vector<Family> fams;
  std::string echo;
  for (char ch : families_arg) {
    if (ch == ',' || ch == ' ') continue;
    Family f;
    try {
      f = family_from_letter(ch);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    if (std::find(fams.begin(), fams.end(), f) != fams.end()) continue;
    fams.push_back(f);
    if (!echo.empty()) echo += ',';
    echo += family_letter(f);
  }
  if (fams.empty()) {
    std::cerr << "error: --families selected nothing\n";
    return kExitUsage;
  }

  RunReport rep;
  rep.command = "validate";
  rep.families = echo;
  rep.has_bc = false;
  rep.strict_paper = strict_paper;
  rep.checks = run_acceptance_checks(fams);
  rep.has_checks = true;
  rep.paper_audit = audit_families(fams);

  bool all_passed = true;
  for (const auto& c : rep.checks) all_passed = all_passed && c.passed;

  const int rc = emit(to_json(rep), out_path);
  if (rc != kExitOk) return rc;
  if (!all_passed) {
    std::cerr << "error: " << [&] {
      int n = 0;
      for (const auto& c : rep.checks) n += c.passed ? 0 : 1;
      return n;
    }() << " check(s) failed\n";
    return kExitInconsistent;
  }
  if (strict_paper && !rep.paper_audit.empty()) {
    std::cerr << "error: strict mode, " << rep.paper_audit.size()
              << " audit finding(s) against the published formulas\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"square well boundary condition solver"};
  app.require_subcommand(1);

  BcOptions spec_bc, scan_bc, herm_bc;
  int spec_count = 8, herm_count = 8, sweep_grid = 20;
  double spec_L = 1.0, scan_L = 1.0, herm_L = 1.0;
  double spec_qmax = 50.0, scan_qmax = 50.0, herm_qmax = 50.0;
  std::string spec_out, scan_out, herm_out, sweep_out, val_out;
  std::string val_families = "A,B,C,D,E";
  bool strict_paper = false;

  auto* c_spec = app.add_subcommand("spectrum", "full spectrum with eigenfunctions");
  add_bc_options(c_spec, spec_bc);
  c_spec->add_option("--count", spec_count, "number of states to emit")
      ->check(CLI::PositiveNumber);
  c_spec->add_option("--L", spec_L, "well length")->check(CLI::PositiveNumber);
  c_spec->add_option("--qmax", spec_qmax, "negative-class search limit in qL")
      ->check(CLI::PositiveNumber);
  c_spec->add_option("--out", spec_out, "output file (default stdout)");

  auto* c_scan = app.add_subcommand("negscan", "negative-energy bound state search");
  add_bc_options(c_scan, scan_bc);
  c_scan->add_option("--L", scan_L, "well length")->check(CLI::PositiveNumber);
  c_scan->add_option("--qmax", scan_qmax, "search limit in qL")->check(CLI::PositiveNumber);
  c_scan->add_option("--out", scan_out, "output file (default stdout)");

  auto* c_herm = app.add_subcommand("hermiticity", "boundary terms and Gram matrix");
  add_bc_options(c_herm, herm_bc);
  c_herm->add_option("--count", herm_count, "number of states to test")
      ->check(CLI::PositiveNumber);
  c_herm->add_option("--L", herm_L, "well length")->check(CLI::PositiveNumber);
  c_herm->add_option("--qmax", herm_qmax, "negative-class search limit in qL")
      ->check(CLI::PositiveNumber);
  c_herm->add_option("--out", herm_out, "output file (default stdout)");

  auto* c_sweep = app.add_subcommand("sweep", "Robin angle grid survey (CSV)");
  c_sweep->add_option("--grid", sweep_grid, "points per angle axis");
  c_sweep->add_option("--out", sweep_out, "output file (default stdout)");

  auto* c_val = app.add_subcommand("validate", "run acceptance checks and formula audit");
  c_val->add_option("--families", val_families, "comma separated letters, default A,B,C,D,E");
  c_val->add_flag("--strict-paper", strict_paper,
                  "fail (exit 4) when the audit reports findings");
  c_val->add_option("--out", val_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_spec->parsed())
      return run_spectrum(spec_bc, spec_count, spec_L, spec_qmax, spec_out);
    if (c_scan->parsed()) return run_negscan(scan_bc, scan_L, scan_qmax, scan_out);
    if (c_herm->parsed())
      return run_hermiticity(herm_bc, herm_count, herm_L, herm_qmax, herm_out);
    if (c_sweep->parsed()) return run_sweep(sweep_grid, sweep_out);
    if (c_val->parsed()) return run_validate(val_families, strict_paper, val_out);
  } catch (const InvalidBoundaryCondition& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IncompleteSpectrum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
