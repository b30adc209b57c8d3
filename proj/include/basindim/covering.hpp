#pragma once

#include <string>

namespace basindim {

struct KoebeShrink {
  double factor = 0.0;                // 4 pi / (M - 8 - R)
  bool within_simplified_bound = false;  // factor <= 13 / M
};

/// Derivative bound for inverse branches on D(a, r) with Re a >= M.
/// Throws std::invalid_argument unless M - 8 - R > 0.
KoebeShrink koebe_shrink_factor(double M, double r, double R);

struct CoveringParams {
  double mu = 2.0;     // order of growth
  double beta = 0.25;  // growth-bound constant
  int tracts = 2;      // logarithmic tracts per strip
  double log_M = 20.0; // the covering modulus M enters through log M; M = e^log_M
  double r = 1.0;      // disk radius, 0 < r <= 8
  double alpha = 1.5;
  double koebe_offset = 0.0;

  void validate() const;
};

struct CoveringResult {
  double partial_sum = 0.0;  // sum_{|k| <= k_max} s_k^alpha
  double tail_bound = 0.0;   // bound on sum_{|k| > k_max}; infinite when alpha <= 1
  bool convergent = false;
  double lhs = 0.0;          // tracts * (partial_sum + tail_bound)
  double rhs = 0.0;          // (r / M)^alpha
  double normalized_lhs = 0.0;  // lhs / rhs, independent of r and M except via log M
  bool passes = false;          // lhs <= rhs
};

/// s_k = 39 mu r / (beta (log M + mu pi |k|) M) summed to the power alpha
/// over |k| <= k_max, with an integral-comparison tail bound. Everything is
/// computed on the scale of r/M, so huge M (given as log_M) is fine.
CoveringResult covering_sum(const CoveringParams& params, long k_max);

/// Bound on the tail sum_{|k| > k} s_k^alpha from the integral
/// 2 * integral_k^inf; the matching lower integral starts at k + 1.
double covering_tail_upper(const CoveringParams& params, long k);
double covering_tail_lower(const CoveringParams& params, long k);

/// S0 / M^(n alpha), the inductive bound on the n-th cover. Throws
/// std::invalid_argument if covering_sum (k_max = 1000) does not PASS or n < 0.
double iterated_covering_bound(const CoveringParams& params, double initial_sum, int n);

/// Smallest log M (to relative 1e-6) at which covering_sum passes, by
/// bisection; the verdict is monotone in log M.
double covering_pass_threshold(CoveringParams params, long k_max = 1000);

std::string verdict_text(const CoveringResult& result);

}  // namespace basindim
