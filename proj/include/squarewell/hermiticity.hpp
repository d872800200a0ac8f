#pragma once

// Hermiticity diagnostics: the boundary bracket that must vanish for the
// kinetic operator to be symmetric on the domain cut out by a boundary
// condition, and the Gram matrix of a state list.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "squarewell/boundary.hpp"
#include "squarewell/eigenstate.hpp"
#include "squarewell/quadrature.hpp"

namespace squarewell {

// [conj(f) g' - conj(f') g] evaluated at L minus at 0, from the analytic
// interior limits (no numerical differentiation). Both states must live on the
// same well.
inline std::complex<double> boundary_term(const Eigenstate& f, const Eigenstate& g) {
  if (f.length != g.length)
    throw std::invalid_argument("boundary_term: states on different wells");
  const auto bracket = [&](double x) {
    return std::conj(evaluate(f, x)) * evaluate_derivative(g, x) -
           std::conj(evaluate_derivative(f, x)) * evaluate(g, x);
  };
  return bracket(f.length) - bracket(0.0);
}

// Inner products <f_i | f_j> over [0, L] by panel quadrature.
inline std::vector<std::vector<std::complex<double>>> gram_matrix(
    const std::vector<Eigenstate>& states) {
  const std::size_t n = states.size();
  std::vector<std::vector<std::complex<double>>> g(
      n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (states[i].length != states[0].length)
      throw std::invalid_argument("gram_matrix: states on different wells");
    for (std::size_t j = i; j < n; ++j) {
      const auto v = integrate(
          [&](double x) {
            return std::conj(evaluate(states[i], x)) * evaluate(states[j], x);
          },
          0.0, states[0].length);
      g[i][j] = v;
      g[j][i] = std::conj(v);
    }
  }
  return g;
}

struct HermiticityReport {
  BoundaryCondition bc;
  int pair_count = 0;          // unordered pairs including diagonal
  double max_boundary_term = 0.0;
  double gram_deviation = 0.0;  // max |G - I|
};

inline HermiticityReport hermiticity_report(const BoundaryCondition& bc,
                                            const std::vector<Eigenstate>& states) {
  HermiticityReport rep;
  rep.bc = canonicalized(bc);
  const std::size_t n = states.size();
  rep.pair_count = static_cast<int>(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      rep.max_boundary_term =
          std::max(rep.max_boundary_term, std::abs(boundary_term(states[i], states[j])));
  const auto g = gram_matrix(states);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      rep.gram_deviation = std::max(rep.gram_deviation, std::abs(g[i][j] - target));
    }
  return rep;
}

}  // namespace squarewell
