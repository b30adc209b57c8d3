#include "basindim/covering.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace basindim {
namespace {

// s_k = scale_k * (r / M) with scale_k = 39 mu / (beta (log M + mu pi |k|)).
double scaled_radius(const CoveringParams& p, long k) {
  return 39.0 * p.mu / (p.beta * (p.log_M + p.mu * std::numbers::pi * static_cast<double>(std::labs(k))));
}

double scaled_tail(const CoveringParams& p, double from) {
  if (p.alpha <= 1.0) return std::numeric_limits<double>::infinity();
  const double c = 39.0 * p.mu / p.beta;
  const double slope = p.mu * std::numbers::pi;
  return 2.0 * std::pow(c, p.alpha) * std::pow(p.log_M + slope * from, 1.0 - p.alpha) / (slope * (p.alpha - 1.0));
}

// (r / M)^alpha, computed in log space.
double radius_factor(const CoveringParams& p) {
  return std::exp(p.alpha * (std::log(p.r) - p.log_M));
}

}  // namespace

KoebeShrink koebe_shrink_factor(double M, double r, double R) {
  if (!(r > 0.0 && r <= 8.0)) throw std::invalid_argument("koebe_shrink_factor: need 0 < r <= 8");
  const double room = M - 8.0 - R;
  if (!(room > 0.0)) throw std::invalid_argument("koebe_shrink_factor: need M - 8 - R > 0");
  KoebeShrink out;
  out.factor = 4.0 * std::numbers::pi / room;
  out.within_simplified_bound = out.factor <= 13.0 / M;
  return out;
}

void CoveringParams::validate() const {
  if (!(mu > 0.0)) throw std::invalid_argument("covering: mu must be positive");
  if (!(beta > 0.0)) throw std::invalid_argument("covering: beta must be positive");
  if (tracts < 1) throw std::invalid_argument("covering: need at least one tract");
  if (!(r > 0.0 && r <= 8.0)) throw std::invalid_argument("covering: need 0 < r <= 8");
  if (!(alpha > 0.0)) throw std::invalid_argument("covering: alpha must be positive");
  if (!(log_M > std::log(13.0))) throw std::invalid_argument("covering: need M > 13");
}

CoveringResult covering_sum(const CoveringParams& params, long k_max) {
  params.validate();
  if (k_max < 1000) throw std::invalid_argument("covering_sum: k_max must be >= 1000");

  double scaled = 0.0;
  for (long k = k_max; k >= 1; --k) scaled += 2.0 * std::pow(scaled_radius(params, k), params.alpha);
  scaled += std::pow(scaled_radius(params, 0), params.alpha);
  const double scaled_tail_bound = scaled_tail(params, static_cast<double>(k_max));

  CoveringResult out;
  const double factor = radius_factor(params);
  out.partial_sum = scaled * factor;
  out.convergent = params.alpha > 1.0;
  out.tail_bound = out.convergent ? scaled_tail_bound * factor : std::numeric_limits<double>::infinity();
  out.rhs = factor;
  out.normalized_lhs = params.tracts * (scaled + scaled_tail_bound);
  out.lhs = out.convergent ? out.normalized_lhs * factor : std::numeric_limits<double>::infinity();
  out.passes = out.convergent && out.normalized_lhs <= 1.0;
  return out;
}

double covering_tail_upper(const CoveringParams& params, long k) {
  return scaled_tail(params, static_cast<double>(k)) * radius_factor(params);
}

double covering_tail_lower(const CoveringParams& params, long k) {
  return scaled_tail(params, static_cast<double>(k + 1)) * radius_factor(params);
}

double iterated_covering_bound(const CoveringParams& params, double initial_sum, int n) {
  if (n < 0) throw std::invalid_argument("iterated_covering_bound: n must be >= 0");
  if (!covering_sum(params, 1000).passes) {
    throw std::invalid_argument("iterated_covering_bound: covering inequality does not hold at these parameters");
  }
  return initial_sum * std::exp(-static_cast<double>(n) * params.alpha * params.log_M);
}

double covering_pass_threshold(CoveringParams params, long k_max) {
  if (params.alpha <= 1.0) throw std::invalid_argument("covering_pass_threshold: diverges for alpha <= 1");
  double lo = std::log(13.0) + 1e-9;
  params.log_M = lo;
  if (covering_sum(params, k_max).passes) return lo;
  double hi = 2.0 * lo;
  for (params.log_M = hi; !covering_sum(params, k_max).passes; params.log_M = hi) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("covering_pass_threshold: no threshold found");
  }
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    params.log_M = mid;
    (covering_sum(params, k_max).passes ? hi : lo) = mid;
  }
  return hi;
}

std::string verdict_text(const CoveringResult& result) {
  std::ostringstream out;
  if (!result.convergent) {
    out << "series: divergent (alpha <= 1)\n";
    out << "inequality: FAIL\n";
    return out.str();
  }
  out << "series: convergent\n";
  out << "partial_sum=" << result.partial_sum << "\n";
  out << "tail_bound=" << result.tail_bound << "\n";
  out << "m*sum/(r/M)^alpha=" << result.normalized_lhs << "\n";
  out << "inequality: " << (result.passes ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace basindim
