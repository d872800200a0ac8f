#pragma once

// Report assembly and serialization. The JSON writer is deliberately small and
// fixed-order: identical inputs must produce byte-identical reports, so floats
// are always printed with 17 significant digits and keys appear in the order
// they are written.

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "squarewell/audit.hpp"
#include "squarewell/bc_algebra.hpp"
#include "squarewell/boundary.hpp"
#include "squarewell/eigenstate.hpp"
#include "squarewell/hermiticity.hpp"
#include "squarewell/spectrum.hpp"
#include "squarewell/sweep.hpp"

namespace squarewell {

inline constexpr const char* kToolVersion = "1.0.0";

inline std::string fmt17(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) v = 0.0;  // never print -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class JsonWriter {
 public:
  JsonWriter() { first_.push_back(true); }

  void begin_object(const char* key = nullptr) { start(key); out_ += '{'; first_.push_back(true); }
  void begin_array(const char* key = nullptr) { start(key); out_ += '['; first_.push_back(true); }
  void end_object() { close('}'); }
  void end_array() { close(']'); }

  void field(const char* key, const std::string& v) { start(key); quoted(v.c_str()); }
  void field(const char* key, const char* v) { start(key); quoted(v); }
  void field(const char* key, double v) { start(key); out_ += fmt17(v); }
  void field(const char* key, int v) { start(key); out_ += std::to_string(v); }
  void field(const char* key, bool v) { start(key); out_ += v ? "true" : "false"; }
  void element(double v) { start(nullptr); out_ += fmt17(v); }

  const std::string& str() const { return out_; }

 private:
  std::string out_;
  std::vector<bool> first_;

  void start(const char* key) {
    if (!out_.empty()) {
      if (!first_.back()) out_ += ',';
      out_ += '\n';
      out_.append(2 * (first_.size() - 1), ' ');
    }
    first_.back() = false;
    if (key) {
      quoted(key);
      out_ += ": ";
    }
  }

  void close(char c) {
    const bool empty = first_.back();
    first_.pop_back();
    if (!empty) {
      out_ += '\n';
      out_.append(2 * (first_.size() - 1), ' ');
    }
    out_ += c;
  }

  void quoted(const char* s) {
    out_ += '"';
    for (; *s; ++s) {
      const unsigned char c = static_cast<unsigned char>(*s);
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
          if (c < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += static_cast<char>(c);
          }
      }
    }
    out_ += '"';
  }
};

struct OracleRow {
  int index = 0;
  double solver_energy = 0.0;
  double oracle_energy = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::optional<Family> family;
  std::string families;  // validate: letters audited, e.g. "A,C"
  bool has_bc = true;
  BoundaryCondition input_bc;
  double length = 1.0;
  int count = 0;
  double ql_max = 50.0;
  int oracle_grid = 4000;
  bool strict_paper = false;
  std::optional<SpectrumReport> spectrum;
  std::optional<NegativeScanReport> scan;
  std::optional<HermiticityReport> hermiticity;
  std::vector<OracleRow> oracle_rows;
  int oracle_negative_count = -1;  // -1: not computed
  std::vector<AuditEntry> paper_audit;
  std::vector<CheckResult> checks;
  bool has_checks = false;
};

namespace detail {

inline const char* class_name(EnergyClass c) {
  switch (c) {
    case EnergyClass::negative: return "negative";
    case EnergyClass::zero: return "zero";
    case EnergyClass::positive: return "positive";
  }
  return "?";
}

inline void write_equation(JsonWriter& w, const char* key, const BoundaryEquation& eq) {
  w.begin_object(key);
  w.field("psi", eq.psi);
  w.field("dpsi", eq.dpsi);
  w.field("rhs", eq.rhs);
  w.end_object();
}

inline void write_bc(JsonWriter& w, const char* key, const BoundaryCondition& bc) {
  const BoundaryCondition cc = canonicalized(bc);
  w.begin_object(key);
  write_equation(w, "at_zero", cc.at_zero);
  write_equation(w, "at_length", cc.at_length);
  w.end_object();
}

inline void write_state(JsonWriter& w, const Eigenstate& st) {
  w.begin_object();
  w.field("index", st.index);
  w.field("class", class_name(st.energy_class));
  w.field("scaled_wavenumber", st.scaled_wavenumber);
  w.field("energy", st.energy());
  w.begin_array("coeff");
  for (const auto& c : st.coeff) {
    w.begin_array();
    w.element(c.real());
    w.element(c.imag());
    w.end_array();
  }
  w.end_array();
  w.field("norm_constant", st.norm_constant);
  w.end_object();
}

inline void write_scan(JsonWriter& w, const char* key, const NegativeScanReport& scan) {
  w.begin_object(key);
  w.field("verdict", scan.eliminated ? "eliminated" : "bound-states-found");
  w.field("ql_max", scan.ql_max);
  w.field("grid_points", scan.grid_points);
  w.begin_array("roots");
  for (double r : scan.roots) w.element(r);
  w.end_array();
  w.begin_array("bound_states");
  for (const auto& st : scan.bound_states) write_state(w, st);
  w.end_array();
  w.end_object();
}

}  // namespace detail

inline std::string to_json(const RunReport& rep) {
  JsonWriter w;
  w.begin_object();
  w.field("tool_version", kToolVersion);
  w.field("command", rep.command);

  w.begin_object("input");
  if (rep.family)
    w.field("family", std::string(1, family_letter(*rep.family)));
  if (!rep.families.empty()) w.field("families", rep.families);
  if (rep.has_bc) detail::write_bc(w, "boundary", rep.input_bc);
  w.field("length", rep.length);
  if (rep.count > 0) w.field("count", rep.count);
  w.field("ql_max", rep.ql_max);
  w.field("oracle_grid", rep.oracle_grid);
  if (rep.command == "validate") w.field("strict_paper", rep.strict_paper);
  w.end_object();

  if (rep.spectrum) {
    w.begin_object("spectrum");
    w.field("requested_count", rep.spectrum->requested_count);
    w.begin_array("states");
    for (const auto& st : rep.spectrum->states) detail::write_state(w, st);
    w.end_array();
    w.field("zero_mode", rep.spectrum->zero_mode.has_value());
    w.begin_array("degenerate_candidates");
    for (double d : rep.spectrum->degenerate_candidates) w.element(d);
    w.end_array();
    w.end_object();
  }

  if (rep.scan) detail::write_scan(w, "negative_scan", *rep.scan);

  if (rep.hermiticity) {
    w.begin_object("hermiticity");
    w.field("pair_count", rep.hermiticity->pair_count);
    w.field("max_boundary_term", rep.hermiticity->max_boundary_term);
    w.field("gram_deviation", rep.hermiticity->gram_deviation);
    w.end_object();
  }

  if (!rep.oracle_rows.empty() || rep.oracle_negative_count >= 0) {
    w.begin_object("oracle");
    w.field("grid_size", rep.oracle_grid);
    if (rep.oracle_negative_count >= 0)
      w.field("negative_count", rep.oracle_negative_count);
    w.begin_array("rows");
    for (const auto& row : rep.oracle_rows) {
      w.begin_object();
      w.field("index", row.index);
      w.field("solver_energy", row.solver_energy);
      w.field("oracle_energy", row.oracle_energy);
      w.field("abs_diff", row.abs_diff);
      w.field("rel_diff", row.rel_diff);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }

  w.begin_array("paper_audit");
  for (const auto& e : rep.paper_audit) {
    w.begin_object();
    w.field("family", std::string(1, family_letter(e.family)));
    w.field("claim", e.claim);
    w.field("status", to_string(e.status));
    w.field("detail", e.detail);
    w.end_object();
  }
  w.end_array();

  if (rep.has_checks) {
    w.begin_array("checks");
    for (const auto& c : rep.checks) {
      w.begin_object();
      w.field("id", c.id);
      w.field("name", c.name);
      w.field("passed", c.passed);
      w.field("detail", c.detail);
      w.end_object();
    }
    w.end_array();
  }

  w.end_object();
  std::string out = w.str();
  out += '\n';
  return out;
}

// Sweep grids serialize to CSV, one row per cell in row-major order.
inline std::string sweep_csv(const SweepResult& sr) {
  std::string out = "theta0,thetaL,negative_count,zero_mode,ground_energy\n";
  for (const auto& c : sr.cells) {
    out += fmt17(c.theta0);
    out += ',';
    out += fmt17(c.thetaL);
    out += ',';
    out += std::to_string(c.negative_count);
    out += ',';
    out += c.zero_mode ? '1' : '0';
    out += ',';
    out += fmt17(c.ground_energy);
    out += '\n';
  }
  return out;
}

}  // namespace squarewell
