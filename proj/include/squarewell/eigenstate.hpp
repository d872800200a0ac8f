#pragma once

// Eigenstate value type and pointwise evaluation. A state is a coefficient pair
// over a class-specific basis on [0, L], identically zero outside the well:
//
//   positive energy:  c0 exp(+i k x) + c1 exp(-i k x),   k = kL / L,  E = +(kL)^2
//   zero energy:      c0 x + c1,                                      E = 0
//   negative energy:  c0 exp(+q x) + c1 exp(-q x),       q = qL / L,  E = -(qL)^2
//
// Energies are dimensionless, in units of hbar^2 / (2 m L^2). The stored pair is
// the shape; norm_constant scales it so the L2 norm over [0, L] is one.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "squarewell/boundary.hpp"
#include "squarewell/quadrature.hpp"

namespace squarewell {

struct TrivialState : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class EnergyClass { negative, zero, positive };

struct Eigenstate {
  EnergyClass energy_class = EnergyClass::positive;
  double scaled_wavenumber = 0.0;  // kL or qL; 0 for the zero class
  std::array<std::complex<double>, 2> coeff{};
  double norm_constant = 1.0;
  int index = 0;
  double length = 1.0;

  double energy() const {
    const double s = scaled_wavenumber;
    switch (energy_class) {
      case EnergyClass::negative: return -s * s;
      case EnergyClass::zero: return 0.0;
      case EnergyClass::positive: return s * s;
    }
    return 0.0;
  }
};

inline std::complex<double> evaluate(const Eigenstate& st, double x) {
  if (!std::isfinite(x)) throw std::domain_error("evaluate: non-finite position");
  if (x < 0.0 || x > st.length) return {0.0, 0.0};
  const std::complex<double> i(0.0, 1.0);
  const double r = st.scaled_wavenumber / st.length;
  switch (st.energy_class) {
    case EnergyClass::positive:
      return st.norm_constant *
             (st.coeff[0] * std::exp(i * (r * x)) + st.coeff[1] * std::exp(-i * (r * x)));
    case EnergyClass::negative:
      return st.norm_constant *
             (st.coeff[0] * std::exp(r * x) + st.coeff[1] * std::exp(-r * x));
    case EnergyClass::zero:
      return st.norm_constant * (st.coeff[0] * x + st.coeff[1]);
  }
  return {0.0, 0.0};
}

// Derivative of the interior formula; zero outside the well like evaluate.
inline std::complex<double> evaluate_derivative(const Eigenstate& st, double x) {
  if (!std::isfinite(x)) throw std::domain_error("evaluate_derivative: non-finite position");
  if (x < 0.0 || x > st.length) return {0.0, 0.0};
  const std::complex<double> i(0.0, 1.0);
  const double r = st.scaled_wavenumber / st.length;
  switch (st.energy_class) {
    case EnergyClass::positive:
      return st.norm_constant * (i * r) *
             (st.coeff[0] * std::exp(i * (r * x)) - st.coeff[1] * std::exp(-i * (r * x)));
    case EnergyClass::negative:
      return st.norm_constant * r *
             (st.coeff[0] * std::exp(r * x) - st.coeff[1] * std::exp(-r * x));
    case EnergyClass::zero:
      return st.norm_constant * st.coeff[0];
  }
  return {0.0, 0.0};
}

// Residual |a psi(x0) + b L psi'(x0) - c| of one boundary equation at x0.
inline double boundary_residual(const Eigenstate& st, const BoundaryEquation& eq,
                                double x0) {
  const auto v = eq.psi * evaluate(st, x0) +
                 eq.dpsi * st.length * evaluate_derivative(st, x0) - eq.rhs;
  return std::abs(v);
}

inline double boundary_residual(const Eigenstate& st, const BoundaryCondition& bc) {
  return std::max(boundary_residual(st, bc.at_zero, 0.0),
                  boundary_residual(st, bc.at_length, st.length));
}

// Unit L2 norm over [0, L] plus the phase convention: the first nonvanishing of
// {psi(0+), psi'(0+)} is made real and positive.
inline Eigenstate normalized(const Eigenstate& st) {
  Eigenstate out = st;
  out.norm_constant = 1.0;
  const double n2 = std::real(integrate(
      [&](double x) {
        const auto v = evaluate(out, x);
        return std::norm(v);
      },
      0.0, out.length));
  if (!(n2 > 1e-24))
    throw TrivialState("normalized: state has (near-)zero L2 norm");
  out.norm_constant = 1.0 / std::sqrt(n2);

  const auto v0 = evaluate(out, 0.0);
  const auto d0 = out.length * evaluate_derivative(out, 0.0);
  const double ref = std::max(std::abs(v0), std::abs(d0));
  const auto lead = (std::abs(v0) > 1e-9 * ref) ? v0 : d0;
  const double mag = std::abs(lead);
  if (mag > 0.0) {
    const auto phase = std::conj(lead) / mag;
    out.coeff[0] *= phase;
    out.coeff[1] *= phase;
  }
  return out;
}

}  // namespace squarewell
