#pragma once

// Closed-form results for the five standard families: positive spectra and
// eigenfunctions, the Neumann-Neumann zero mode, and the negative-class
// coefficient pair (G, H) for given boundary data.
//
// Two variants of the coefficient formulas are provided. negative_coefficients
// returns expressions derived directly from the 2x2 boundary system; these
// agree with the generic solver to machine precision. The _as_published
// variants evaluate the formulas in the form they circulate in the literature,
// which for families B and E differ from the system they claim to solve; the
// discrepancy is what the audit module reports.

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "squarewell/bc_algebra.hpp"
#include "squarewell/boundary.hpp"
#include "squarewell/eigenstate.hpp"

namespace squarewell {

struct SingularDenominator : std::domain_error {
  Family family;
  double ql;
  SingularDenominator(Family f, double s)
      : std::domain_error("closed-form coefficient denominator vanishes"),
        family(f), ql(s) {}
};

// Positive-class wavenumbers kL in increasing order.
//   A, B, E: n pi for n = 1, 2, ...   (B's zero mode is separate;
//            E's n = 0 entry would be the zero function)
//   C, D:    (n + 1/2) pi for n = 0, 1, ...
inline std::vector<double> closed_form_wavenumbers(Family f, int count) {
  if (count < 0) throw std::invalid_argument("closed_form_wavenumbers: count < 0");
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    switch (f) {
      case Family::A:
      case Family::B:
      case Family::E: out.push_back((i + 1) * M_PI); break;
      case Family::C:
      case Family::D: out.push_back((i + 0.5) * M_PI); break;
    }
  }
  return out;
}

inline int lowest_index(Family f) {
  return (f == Family::C || f == Family::D) ? 0 : 1;
}

// Normalized positive-class eigenstate for quantum number n (family indexing:
// A, B, E from n = 1; C, D from n = 0). Family E uses the coefficient ratio
// that actually satisfies both Robin equations, psi ∝ kL cos(kx) - sin(kx).
inline Eigenstate closed_form_eigenstate(Family f, int n, double length = 1.0) {
  validate(WellConfig{length});
  if (n < lowest_index(f))
    throw std::invalid_argument("closed_form_eigenstate: index below family range");
  const int i = n - lowest_index(f);
  const double kl = closed_form_wavenumbers(f, i + 1).back();
  Eigenstate st;
  st.energy_class = EnergyClass::positive;
  st.scaled_wavenumber = kl;
  st.index = n;
  st.length = length;
  const std::complex<double> im(0.0, 1.0);
  switch (f) {
    case Family::A:
    case Family::C: st.coeff = {1.0, -1.0}; break;             // sin(kx)
    case Family::B:
    case Family::D: st.coeff = {1.0, 1.0}; break;              // cos(kx)
    case Family::E: st.coeff = {kl + im, kl - im}; break;      // kL cos(kx) - sin(kx)
  }
  return normalized(st);
}

// Constant zero-energy state; only the Neumann-Neumann family supports one.
inline std::optional<Eigenstate> zero_energy_state(Family f, double length = 1.0) {
  validate(WellConfig{length});
  if (f != Family::B) return std::nullopt;
  Eigenstate st;
  st.energy_class = EnergyClass::zero;
  st.coeff = {0.0, 1.0};
  st.length = length;
  st.index = 0;
  return normalized(st);
}

namespace detail {

inline void check_ql(double ql) {
  if (!(ql > 0.0) || !std::isfinite(ql))
    throw std::invalid_argument("negative coefficients: need qL > 0");
}

}  // namespace detail

// Negative-class pair (G, H) with psi = G e^{qx} + H e^{-qx} for boundary data
// (c1 at x = 0, c2 at x = L). Thrown SingularDenominator marks parameters where
// the family formula degenerates; for family E that is qL = 1, the wavenumber
// of its hidden bound state.
inline std::array<double, 2> negative_coefficients(Family f, double ql,
                                                   double c1, double c2) {
  detail::check_ql(ql);
  const double s = ql;
  const double e = std::exp(s);
  const double d2 = std::exp(2.0 * s) - 1.0;  // e^{2s} - 1, nonzero for s > 0
  const double p2 = std::exp(2.0 * s) + 1.0;
  switch (f) {
    case Family::A:
      return {(c2 * e - c1) / d2, e * (c1 * e - c2) / d2};
    case Family::B:
      return {(c2 * e - c1) / (s * d2), e * (c2 - c1 * e) / (s * d2)};
    case Family::C:
      return {(c1 * s + c2 * e) / (s * p2), e * (c1 * s * e - c2) / (s * p2)};
    case Family::D:
      return {(c1 + c2 * s * e) / (s * p2), e * (c2 * s - c1 * e) / (s * p2)};
    case Family::E: {
      if (s == 1.0) throw SingularDenominator(Family::E, s);
      return {(c2 * e - c1) / ((1.0 + s) * d2),
              e * (c2 - c1 * e) / ((s - 1.0) * d2)};
    }
  }
  throw std::invalid_argument("unknown family");
}

// The formulas as published. Families A, C, D match negative_coefficients;
// B's H carries a sign error and E's G a spurious qL factor on the c2 term.
inline std::array<double, 2> negative_coefficients_as_published(Family f, double ql,
                                                                double c1, double c2) {
  detail::check_ql(ql);
  const double s = ql;
  const double e = std::exp(s);
  const double d2 = std::exp(2.0 * s) - 1.0;
  switch (f) {
    case Family::B:
      return {(c2 * e - c1) / (s * d2), e * (c1 * e - c2) / (s * d2)};
    case Family::E: {
      if (s == 1.0) throw SingularDenominator(Family::E, s);
      return {(c2 * s * e - c1) / ((1.0 + s) * d2),
              e * (c2 - c1 * e) / ((s - 1.0) * d2)};
    }
    default:
      return negative_coefficients(f, ql, c1, c2);
  }
}

// Published coefficient ratio for family E's positive states. The combination
// it produces fails both Robin equations; the derived ratio is its reciprocal.
inline std::complex<double> family_e_ratio_as_published(double kl) {
  const std::complex<double> im(0.0, 1.0);
  return (kl + im) / (kl - im);
}

inline std::complex<double> family_e_ratio_derived(double kl) {
  const std::complex<double> im(0.0, 1.0);
  return (kl - im) / (kl + im);
}

}  // namespace squarewell
