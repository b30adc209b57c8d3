#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "basindim/complex.hpp"
#include "basindim/errors.hpp"

namespace basindim {

inline constexpr int kGaussPoints = 15;

/// 15-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::array<double, kGaussPoints> nodes;
  std::array<double, kGaussPoints> weights;
};

const GaussRule& gauss_legendre_15();

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;  // relative to the magnitude of the integral
  int max_panels = 1 << 14;
};

struct QuadratureResult {
  Complex value;
  int panels = 0;
  bool overflow = false;
};

/// Adaptive Gauss-Legendre integration along the straight segment
/// [from, to] of the complex plane. Each panel is compared with the sum over
/// its two halves; panels whose difference exceeds their share of the
/// tolerance are bisected. The integrand has signature
/// `Complex(Complex t, bool& overflow)` and may raise the flag to abort.
/// Throws QuadratureError when more than `max_panels` panels are needed.
template <class Integrand>
QuadratureResult integrate_segment(Integrand&& g, Complex from, Complex to,
                                   const QuadratureOptions& options = {}) {
  const GaussRule& rule = gauss_legendre_15();
  const Complex direction = to - from;
  bool overflow = false;

  struct Panel {
    Complex value;
    double magnitude;  // integral of |g| over the panel, in u
  };
  auto panel = [&](double u0, double u1) {
    const double half = 0.5 * (u1 - u0);
    const double mid = 0.5 * (u1 + u0);
    Complex acc{};
    double mag = 0.0;
    for (int k = 0; k < kGaussPoints; ++k) {
      const Complex t = from + direction * (mid + half * rule.nodes[k]);
      const Complex v = g(t, overflow);
      acc += rule.weights[k] * v;
      mag += rule.weights[k] * std::abs(v);
    }
    return Panel{acc * half, mag * half};
  };

  struct Interval {
    double u0, u1;
    Complex estimate;
  };
  const double length = std::abs(direction);
  const Panel first = panel(0.0, 1.0);
  if (overflow) return {Complex{}, 1, true};
  std::vector<Interval> stack;
  stack.push_back({0.0, 1.0, first.value});

  // Tolerances are in t-units; the relative part is taken against the
  // integral of |g| so cancellation cannot push the target below roundoff.
  double scale = first.magnitude * length;
  Complex total{};
  int panels = 1;
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (iv.u0 + iv.u1);
    const Panel left = panel(iv.u0, mid);
    const Panel right = panel(mid, iv.u1);
    if (overflow) return {Complex{}, panels, true};
    ++panels;
    const Complex refined = left.value + right.value;
    const double width = iv.u1 - iv.u0;
    const double local = (left.magnitude + right.magnitude) * length;
    const double tol = std::max({options.abs_tol * width, options.rel_tol * scale * width,
                                 options.rel_tol * local});
    // below this width the nodes no longer resolve distinct points in double
    const bool unresolved = width < 1e-12 * std::max(1.0, std::abs(mid));
    if (std::abs(refined - iv.estimate) * length <= tol || unresolved) {
      total += refined;
      continue;
    }
    if (panels >= options.max_panels) {
      throw QuadratureError("adaptive quadrature exceeded the panel cap");
    }
    stack.push_back({mid, iv.u1, right.value});
    stack.push_back({iv.u0, mid, left.value});
  }
  return {total * direction, panels, false};
}

}  // namespace basindim
