#pragma once

// Core value types for the 1D box eigenproblem: the well geometry and separated
// two-point boundary conditions of the form
//
//     a * psi(x0) + b * L * psi'(x0) = c        at x0 = 0 and x0 = L.
//
// The derivative term carries a factor of L so that (a, b, c) are dimensionless
// and a condition keeps its meaning under rescaling of the well.

#include <cmath>
#include <stdexcept>
#include <string>

namespace squarewell {

struct InvalidBoundaryCondition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WellConfig {
  double length = 1.0;
};

inline void validate(const WellConfig& w) {
  if (!(w.length > 0.0) || !std::isfinite(w.length))
    throw std::invalid_argument("WellConfig: length must be positive and finite");
}

// One separated condition at a single endpoint.
struct BoundaryEquation {
  double psi = 0.0;   // a, multiplies psi(x0)
  double dpsi = 0.0;  // b, multiplies L * psi'(x0)
  double rhs = 0.0;   // c

  bool homogeneous() const { return rhs == 0.0; }
};

inline void validate(const BoundaryEquation& eq) {
  if (!std::isfinite(eq.psi) || !std::isfinite(eq.dpsi) || !std::isfinite(eq.rhs))
    throw InvalidBoundaryCondition("boundary equation has non-finite coefficients");
  if (eq.psi == 0.0 && eq.dpsi == 0.0)
    throw InvalidBoundaryCondition("boundary equation has a = b = 0");
}

// Scales so that a^2 + b^2 = 1 with the first nonzero of (a, b) positive.
// Exactly idempotent: an already-canonical equation is returned unchanged.
inline BoundaryEquation canonicalized(const BoundaryEquation& eq) {
  validate(eq);
  const double n2 = eq.psi * eq.psi + eq.dpsi * eq.dpsi;
  const double lead = (eq.psi != 0.0) ? eq.psi : eq.dpsi;
  if (std::abs(n2 - 1.0) < 8.0 * 1e-16 && lead > 0.0) return eq;
  const double scale = ((lead > 0.0) ? 1.0 : -1.0) / std::sqrt(n2);
  BoundaryEquation out{eq.psi * scale, eq.dpsi * scale, eq.rhs * scale};
  if (out.psi == 0.0) out.psi = 0.0;  // drop negative zero
  if (out.dpsi == 0.0) out.dpsi = 0.0;
  if (out.rhs == 0.0) out.rhs = 0.0;
  return out;
}

struct BoundaryCondition {
  BoundaryEquation at_zero;
  BoundaryEquation at_length;

  bool homogeneous() const {
    return at_zero.homogeneous() && at_length.homogeneous();
  }
};

inline void validate(const BoundaryCondition& bc) {
  validate(bc.at_zero);
  validate(bc.at_length);
}

inline BoundaryCondition canonicalized(const BoundaryCondition& bc) {
  return {canonicalized(bc.at_zero), canonicalized(bc.at_length)};
}

// The five standard families, by their usual letters:
//   A = Dirichlet-Dirichlet, B = Neumann-Neumann, C = Dirichlet-Neumann,
//   D = Neumann-Dirichlet, E = Robin-Robin with psi + L psi' = 0 at both ends.
enum class Family { A, B, C, D, E };

inline BoundaryCondition family_condition(Family f) {
  switch (f) {
    case Family::A: return {{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
    case Family::B: return {{0.0, 1.0, 0.0}, {0.0, 1.0, 0.0}};
    case Family::C: return {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    case Family::D: return {{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}};
    case Family::E: return {{1.0, 1.0, 0.0}, {1.0, 1.0, 0.0}};
  }
  throw std::invalid_argument("unknown family");
}

inline char family_letter(Family f) {
  return static_cast<char>('A' + static_cast<int>(f));
}

inline Family family_from_letter(char c) {
  if (c >= 'a' && c <= 'e') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'E')
    throw InvalidBoundaryCondition(std::string("unknown family letter: ") + c);
  return static_cast<Family>(c - 'A');
}

// Angle form cos(t) psi + sin(t) L psi' = 0; t = 0 is Dirichlet, t = pi/2 Neumann.
inline BoundaryCondition condition_from_angles(double theta0, double thetaL) {
  if (!std::isfinite(theta0) || !std::isfinite(thetaL))
    throw InvalidBoundaryCondition("boundary angles must be finite");
  return {{std::cos(theta0), std::sin(theta0), 0.0},
          {std::cos(thetaL), std::sin(thetaL), 0.0}};
}

}  // namespace squarewell
