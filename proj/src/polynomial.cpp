#include "basindim/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "basindim/errors.hpp"

namespace basindim {

Polynomial::Polynomial(std::vector<Complex> coefficients) : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && coefficients_.back() == Complex{}) coefficients_.pop_back();
  if (coefficients_.empty()) coefficients_.push_back(Complex{});
}

Polynomial Polynomial::derivative() const {
  if (degree() == 0) return Polynomial{};
  std::vector<Complex> d(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) d[k - 1] = static_cast<double>(k) * coefficients_[k];
  return Polynomial(std::move(d));
}

std::vector<Complex> polynomial_roots(const Polynomial& p, double tolerance, int max_iterations) {
  const int n = p.degree();
  if (n <= 0) return {};
  if (n == 1) {
    return {-p.coefficients()[0] / p.coefficients()[1]};
  }

  // Cauchy-type radius bound for the initial circle.
  const auto coeffs = p.coefficients();
  double radius = 0.0;
  for (int k = 0; k < n; ++k) {
    radius = std::max(radius, std::pow(std::abs(coeffs[k] / coeffs[n]), 1.0 / (n - k)));
  }
  radius = std::max(radius, 1e-3);

  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    // The 0.4 offset breaks symmetry with real-coefficient polynomials.
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(radius, angle);
  }

  const Polynomial dp = p.derivative();
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      const Complex pv = p(z[k]);
      if (pv == Complex{}) {
        done[k] = true;
        continue;
      }
      const Complex ratio = pv / dp(z[k]);
      Complex repulsion{};
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= tolerance * std::max(1.0, std::abs(z[k]))) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) {
      std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
      });
      return z;
    }
  }
  throw RootFindingError("Aberth iteration did not converge");
}

}  // namespace basindim
