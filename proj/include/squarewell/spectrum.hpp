#pragma once

// Full-spectrum solver for homogeneous separated conditions: negative-energy
// scan, zero-mode detection, and positive-class root finding on a real
// characteristic function, assembled into one energy-ordered state list.

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "squarewell/bc_algebra.hpp"
#include "squarewell/boundary.hpp"
#include "squarewell/eigenstate.hpp"

namespace squarewell {

struct IncompleteSpectrum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Real characteristic whose positive zeros in kL are the positive spectrum:
//   c(kL) = Im[(a0 + i b0 kL)(aL - i bL kL) e^{-i kL}].
// The complex boundary determinant equals 2i times this value.
inline double characteristic(const BoundaryCondition& bc, double kl) {
  const double a0 = bc.at_zero.psi, b0 = bc.at_zero.dpsi;
  const double aL = bc.at_length.psi, bL = bc.at_length.dpsi;
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> z = (a0 + i * (b0 * kl)) * (aL - i * (bL * kl));
  return std::imag(z * std::exp(-i * kl));
}

inline double characteristic_derivative(const BoundaryCondition& bc, double kl) {
  const double a0 = bc.at_zero.psi, b0 = bc.at_zero.dpsi;
  const double aL = bc.at_length.psi, bL = bc.at_length.dpsi;
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> u0 = a0 + i * (b0 * kl);
  const std::complex<double> uL = aL - i * (bL * kl);
  const std::complex<double> z = u0 * uL;
  const std::complex<double> dz = i * b0 * uL - i * bL * u0;
  return std::imag((dz - i * z) * std::exp(-i * kl));
}

// |z(kL)|, the natural magnitude scale of the characteristic at kL.
inline double characteristic_scale(const BoundaryCondition& bc, double kl) {
  const double a0 = bc.at_zero.psi, b0 = bc.at_zero.dpsi;
  const double aL = bc.at_length.psi, bL = bc.at_length.dpsi;
  return std::sqrt((a0 * a0 + b0 * b0 * kl * kl) * (aL * aL + bL * bL * kl * kl));
}

struct SpectrumReport {
  BoundaryCondition bc;
  int requested_count = 0;
  std::vector<Eigenstate> states;            // strictly increasing energy
  NegativeScanReport negative;
  std::optional<Eigenstate> zero_mode;
  std::vector<double> degenerate_candidates;  // kL of suspected non-simple roots
};

namespace detail {

// Positive-class roots below kl_limit, at most `want` of them. Scans in
// brackets of width pi/4, each subsampled so a close pair cannot hide, then
// refines sign changes by bisection plus Newton polish. Brackets without a
// sign change but with a deep relative dip get a derivative-based check and
// are reported as degenerate candidates instead of roots.
inline void positive_roots(const BoundaryCondition& bc, int want, double kl_limit,
                           std::vector<double>& roots,
                           std::vector<double>& degenerate) {
  const auto f = [&](double s) { return characteristic(bc, s); };
  const auto df = [&](double s) { return characteristic_derivative(bc, s); };
  const double width = M_PI / 4.0;
  const int sub = 8;
  double lo = 1e-6;
  double flo = f(lo);
  while (static_cast<int>(roots.size()) < want && lo < kl_limit) {
    const double hi = lo + width;
    double a = lo, fa = flo;
    double dip = std::abs(fa) / std::max(characteristic_scale(bc, a), 1e-300);
    double dip_at = a;
    for (int j = 1; j <= sub; ++j) {
      const double b = lo + width * j / sub;
      const double fb = f(b);
      if (fb == 0.0) {
        roots.push_back(b);
      } else if (fa != 0.0 && ((fa < 0.0) != (fb < 0.0))) {
        roots.push_back(refine_root(f, df, a, b, fa));
      }
      const double rel = std::abs(fb) / std::max(characteristic_scale(bc, b), 1e-300);
      if (rel < dip) {
        dip = rel;
        dip_at = b;
      }
      a = b;
      fa = fb;
      if (static_cast<int>(roots.size()) >= want) break;
    }
    // tangency check: deep dip with no sign change in the whole bracket
    if (dip < 1e-9 && dip_at > lo && dip_at < hi) {
      bool near_root = false;
      for (double r : roots)
        if (std::abs(r - dip_at) < width) near_root = true;
      if (!near_root) {
        const double g_lo = df(dip_at - width / sub);
        const double g_hi = df(dip_at + width / sub);
        if ((g_lo < 0.0) != (g_hi < 0.0)) {
          const double star = refine_root(df, [&](double s) {
            const double h = 1e-6;
            return (df(s + h) - df(s - h)) / (2.0 * h);
          }, dip_at - width / sub, dip_at + width / sub, g_lo);
          const double rel = std::abs(f(star)) /
                             std::max(characteristic_scale(bc, star), 1e-300);
          if (rel < 1e-9) degenerate.push_back(star);
        }
      }
    }
    lo = hi;
    flo = f(lo);
  }
  std::vector<double> merged;
  for (double r : roots)
    if (merged.empty() || r - merged.back() > 1e-8) merged.push_back(r);
  roots = std::move(merged);
}

}  // namespace detail

// Assembles the lowest `count` states: scan-found negative states, then the
// zero mode if present, then positive states in increasing kL.
inline SpectrumReport find_spectrum(const BoundaryCondition& bc, int count,
                                    double length = 1.0, double ql_max = 50.0) {
  validate(bc);
  validate(WellConfig{length});
  if (count < 1) throw std::invalid_argument("find_spectrum: count must be >= 1");

  SpectrumReport rep;
  rep.bc = bc;
  rep.requested_count = count;
  rep.negative = negative_energy_scan(bc, length, ql_max);
  rep.zero_mode = zero_mode_detect(bc, length);

  for (const auto& st : rep.negative.bound_states) {
    if (static_cast<int>(rep.states.size()) >= count) break;
    rep.states.push_back(st);
  }
  if (rep.zero_mode && static_cast<int>(rep.states.size()) < count)
    rep.states.push_back(*rep.zero_mode);

  const int want = count - static_cast<int>(rep.states.size());
  if (want > 0) {
    const double kl_limit = 2.0 * M_PI * (count + 4);
    std::vector<double> roots;
    detail::positive_roots(bc, want, kl_limit, roots, rep.degenerate_candidates);
    for (double kl : roots) {
      if (static_cast<int>(rep.states.size()) >= count) break;
      const auto sol = solve_coefficients(bc, EnergyClass::positive, kl, 0.0, 0.0);
      Eigenstate st;
      st.energy_class = EnergyClass::positive;
      st.scaled_wavenumber = kl;
      st.coeff = sol.coefficients;
      st.length = length;
      try {
        rep.states.push_back(normalized(st));
      } catch (const TrivialState&) {
        rep.degenerate_candidates.push_back(kl);  // zero-norm root, not emitted
      }
    }
  }
  if (static_cast<int>(rep.states.size()) < count)
    throw IncompleteSpectrum("find_spectrum: requested count not reached below kL limit");
  for (std::size_t i = 0; i < rep.states.size(); ++i)
    rep.states[i].index = static_cast<int>(i);
  return rep;
}

}  // namespace squarewell
