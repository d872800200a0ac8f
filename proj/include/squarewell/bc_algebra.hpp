#pragma once

// Linear algebra of the two-point boundary system. For each energy class the
// two boundary equations applied to the class basis give a 2x2 system on the
// coefficient pair; its determinant as a function of the scaled wavenumber is
// the quantization condition.

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "squarewell/boundary.hpp"
#include "squarewell/eigenstate.hpp"

namespace squarewell {

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;

// Thrown when the system is singular but the right-hand side is not.
struct InconsistentSystem : std::runtime_error {
  std::complex<double> determinant;
  explicit InconsistentSystem(std::complex<double> det)
      : std::runtime_error("boundary system is singular with nonzero data"),
        determinant(det) {}
};

// Row 0 is the equation at x = 0, row 1 at x = L; columns follow the basis
// order used by Eigenstate. s is kL (positive class) or qL (negative class)
// and is ignored for the zero class. Entries depend only on s, not on L.
inline Mat2 boundary_matrix(const BoundaryCondition& bc, EnergyClass cls, double s) {
  validate(bc);
  const double a0 = bc.at_zero.psi, b0 = bc.at_zero.dpsi;
  const double aL = bc.at_length.psi, bL = bc.at_length.dpsi;
  switch (cls) {
    case EnergyClass::negative: {
      if (!(s > 0.0)) throw std::invalid_argument("boundary_matrix: need qL > 0");
      const double e = std::exp(s);
      return {{{{a0 + b0 * s, a0 - b0 * s}},
               {{(aL + bL * s) * e, (aL - bL * s) / e}}}};
    }
    case EnergyClass::positive: {
      if (!(s > 0.0)) throw std::invalid_argument("boundary_matrix: need kL > 0");
      const std::complex<double> i(0.0, 1.0);
      const std::complex<double> u0 = a0 + i * (b0 * s);
      const std::complex<double> uL = aL - i * (bL * s);
      const std::complex<double> ph = std::exp(i * s);
      return {{{{u0, std::conj(u0)}},
               {{std::conj(uL) * ph, uL / ph}}}};
    }
    case EnergyClass::zero:
      // basis {x/L, 1}
      return {{{{b0, a0}}, {{aL + bL, aL}}}};
  }
  throw std::invalid_argument("boundary_matrix: unknown energy class");
}

inline std::complex<double> det2(const Mat2& m) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

// Real form of the negative-class determinant; its positive roots in qL are the
// bound-state wavenumbers.
inline double negative_determinant(const BoundaryCondition& bc, double ql) {
  const double a0 = bc.at_zero.psi, b0 = bc.at_zero.dpsi;
  const double aL = bc.at_length.psi, bL = bc.at_length.dpsi;
  const double e = std::exp(ql);
  return (a0 + b0 * ql) * (aL - bL * ql) / e - (a0 - b0 * ql) * (aL + bL * ql) * e;
}

inline double negative_determinant_derivative(const BoundaryCondition& bc, double ql) {
  const double a0 = bc.at_zero.psi, b0 = bc.at_zero.dpsi;
  const double aL = bc.at_length.psi, bL = bc.at_length.dpsi;
  const double e = std::exp(ql);
  const double p = (a0 + b0 * ql) * (aL - bL * ql);
  const double dp = b0 * (aL - bL * ql) - bL * (a0 + b0 * ql);
  const double q = (a0 - b0 * ql) * (aL + bL * ql);
  const double dq = -b0 * (aL + bL * ql) + bL * (a0 - b0 * ql);
  return (dp - p) / e - (dq + q) * e;
}

// Determinant of the zero-class system for the canonicalized condition.
inline double zero_mode_determinant(const BoundaryCondition& bc) {
  const BoundaryCondition cc = canonicalized(bc);
  const double a0 = cc.at_zero.psi, b0 = cc.at_zero.dpsi;
  const double aL = cc.at_length.psi, bL = cc.at_length.dpsi;
  return b0 * aL - a0 * (aL + bL);
}

enum class SolutionKind { unique, kernel };

struct CoefficientSolution {
  SolutionKind kind = SolutionKind::unique;
  std::array<std::complex<double>, 2> coefficients{};
  std::complex<double> determinant{};
  std::array<double, 2> rhs{};
};

namespace detail {

inline double row_norm(const Mat2& m, int r) {
  return std::sqrt(std::norm(m[r][0]) + std::norm(m[r][1]));
}

// Unit-norm kernel vector of the (numerically) rank-1 matrix, taken from the
// row with the larger norm; first nonvanishing component made real positive.
inline std::array<std::complex<double>, 2> kernel_vector(const Mat2& m) {
  const int r = (row_norm(m, 0) >= row_norm(m, 1)) ? 0 : 1;
  std::array<std::complex<double>, 2> v{-m[r][1], m[r][0]};
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  if (!(n > 0.0)) throw std::invalid_argument("kernel_vector: zero matrix row");
  v[0] /= n;
  v[1] /= n;
  const auto lead = (std::abs(v[0]) > 1e-12) ? v[0] : v[1];
  const auto phase = std::conj(lead) / std::abs(lead);
  v[0] *= phase;
  v[1] *= phase;
  if (v[0] == std::complex<double>(-0.0, 0.0)) v[0] = 0.0;
  if (v[1] == std::complex<double>(-0.0, 0.0)) v[1] = 0.0;
  return v;
}

}  // namespace detail

// Solves the 2x2 boundary system for given right-hand data (c1 at x = 0, c2 at
// x = L). A determinant below 1e-9 of the row-norm scale counts as singular;
// then zero data yields the kernel vector and nonzero data throws.
inline CoefficientSolution solve_coefficients(const BoundaryCondition& bc,
                                              EnergyClass cls, double s,
                                              double c1, double c2) {
  const Mat2 m = boundary_matrix(bc, cls, s);
  const auto det = det2(m);
  const double scale = detail::row_norm(m, 0) * detail::row_norm(m, 1);
  CoefficientSolution out;
  out.determinant = det;
  out.rhs = {c1, c2};
  if (std::abs(det) > 1e-9 * scale) {
    out.kind = SolutionKind::unique;
    out.coefficients = {(c1 * m[1][1] - c2 * m[0][1]) / det,
                        (c2 * m[0][0] - c1 * m[1][0]) / det};
    return out;
  }
  if (c1 == 0.0 && c2 == 0.0) {
    out.kind = SolutionKind::kernel;
    out.coefficients = detail::kernel_vector(m);
    return out;
  }
  throw InconsistentSystem(det);
}

struct NegativeScanReport {
  BoundaryCondition bc;              // canonicalized echo
  double ql_max = 50.0;
  int grid_points = 10000;
  std::vector<double> roots;         // qL values, increasing
  std::vector<Eigenstate> bound_states;  // increasing energy
  bool eliminated = true;            // no negative-energy states found
};

namespace detail {

// Bisection on a sign-change bracket followed by a few clamped Newton steps.
template <class F, class DF>
double refine_root(F&& f, DF&& df, double lo, double hi, double flo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((flo <= 0.0 && fm <= 0.0) || (flo >= 0.0 && fm >= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13) break;
  }
  double best = 0.5 * (lo + hi);
  double fbest = std::abs(f(best));
  double x = best;
  for (int it = 0; it < 6; ++it) {
    const double d = df(x);
    if (d == 0.0) break;
    double step = f(x) / d;
    double xn = x - step;
    if (xn < lo || xn > hi) break;
    x = xn;
    const double fx = std::abs(f(x));
    if (fx < fbest) {
      fbest = fx;
      best = x;
    }
    if (fx == 0.0) break;
  }
  return best;
}

}  // namespace detail

// Scans the negative-class determinant on a uniform qL grid over (0, ql_max]
// and refines every sign change. Roots are accepted only through sign changes.
inline NegativeScanReport negative_energy_scan(const BoundaryCondition& bc,
                                               double length = 1.0,
                                               double ql_max = 50.0,
                                               int grid_points = 10000) {
  validate(bc);
  validate(WellConfig{length});
  if (!(ql_max > 0.0)) throw std::invalid_argument("negative_energy_scan: ql_max <= 0");
  if (grid_points < 2) throw std::invalid_argument("negative_energy_scan: too few grid points");

  NegativeScanReport rep;
  rep.bc = canonicalized(bc);
  rep.ql_max = ql_max;
  rep.grid_points = grid_points;

  const auto f = [&](double s) { return negative_determinant(bc, s); };
  const auto df = [&](double s) { return negative_determinant_derivative(bc, s); };
  const double step = ql_max / grid_points;
  double prev_s = step;
  double prev_v = f(prev_s);
  if (prev_v == 0.0) rep.roots.push_back(prev_s);
  for (int i = 2; i <= grid_points; ++i) {
    const double s = i * step;
    const double v = f(s);
    if (v == 0.0) {
      rep.roots.push_back(s);
    } else if (prev_v != 0.0 && ((prev_v < 0.0) != (v < 0.0))) {
      rep.roots.push_back(detail::refine_root(f, df, prev_s, s, prev_v));
    }
    prev_s = s;
    prev_v = v;
  }
  // merge anything closer than 1e-8 (duplicate guard)
  std::vector<double> merged;
  for (double r : rep.roots)
    if (merged.empty() || r - merged.back() > 1e-8) merged.push_back(r);
  rep.roots = std::move(merged);

  for (auto it = rep.roots.rbegin(); it != rep.roots.rend(); ++it) {
    const auto sol = solve_coefficients(bc, EnergyClass::negative, *it, 0.0, 0.0);
    Eigenstate st;
    st.energy_class = EnergyClass::negative;
    st.scaled_wavenumber = *it;
    st.coeff = sol.coefficients;
    st.length = length;
    st.index = static_cast<int>(rep.bound_states.size());
    rep.bound_states.push_back(normalized(st));
  }
  rep.eliminated = rep.roots.empty();
  return rep;
}

// Nontrivial zero-energy solution, if the zero-class determinant vanishes
// (|det| < 1e-12 on canonicalized coefficients).
inline std::optional<Eigenstate> zero_mode_detect(const BoundaryCondition& bc,
                                                  double length = 1.0) {
  validate(bc);
  validate(WellConfig{length});
  const BoundaryCondition cc = canonicalized(bc);
  if (std::abs(zero_mode_determinant(cc)) >= 1e-12) return std::nullopt;
  // kernel of the row [b0, a0]; satisfies the row at L up to the determinant
  const double a0 = cc.at_zero.psi, b0 = cc.at_zero.dpsi;
  Eigenstate st;
  st.energy_class = EnergyClass::zero;
  st.scaled_wavenumber = 0.0;
  st.coeff = {std::complex<double>(a0 / length), std::complex<double>(-b0)};
  st.length = length;
  st.index = 0;
  return normalized(st);
}

}  // namespace squarewell
