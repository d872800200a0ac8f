#pragma once

// Composite Gauss-Legendre quadrature. Nodes and weights are generated once per
// order by Newton iteration on the Legendre recurrence, then reused.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace squarewell {

struct GaussRule {
  std::vector<double> node;    // on [-1, 1]
  std::vector<double> weight;

  explicit GaussRule(int order) {
    if (order < 2) throw std::invalid_argument("GaussRule: order must be >= 2");
    node.resize(order);
    weight.resize(order);
    const int n = order;
    for (int i = 0; i < n; ++i) {
      // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      node[i] = x;
      weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

inline const GaussRule& gauss_rule_32() {
  static const GaussRule rule(32);
  return rule;
}

// Integrates f over [a, b] with `panels` equal subintervals of an n-point rule.
// Works for real- and complex-valued integrands.
template <class F>
auto integrate(F&& f, double a, double b, int panels = 8,
               const GaussRule& rule = gauss_rule_32()) -> decltype(f(a)) {
  if (panels < 1) throw std::invalid_argument("integrate: panels must be >= 1");
  using R = decltype(f(a));
  R total{};
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    for (std::size_t i = 0; i < rule.node.size(); ++i)
      total += R(rule.weight[i] * half * f(mid + half * rule.node[i]));
  }
  return total;
}

}  // namespace squarewell
