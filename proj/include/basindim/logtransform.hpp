#pragma once

#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "basindim/dynamics.hpp"
#include "basindim/funcat.hpp"

namespace basindim {

/// F(w) = Log f(e^w) with the principal branch, Im Fw in (-pi, pi].
struct LogPoint {
  Complex w;
  Complex z;   // e^w
  Complex Fw;
  bool valid = false;     // f(z) != 0 and nothing overflowed
  bool overflow = false;  // e^w or f(e^w) overflowed
};

LogPoint log_transform(const FunctionSpec& f, Complex w);

struct IdentityCheck {
  double relative_difference = 0.0;
  bool near_branch_cut = false;  // |Im Fw| > pi - 0.1; comparison skipped
};

/// Compares a branch-unwrapped central difference of F (step 1e-6) with
/// e^w f'(e^w) / f(e^w).
IdentityCheck log_derivative_identity_check(const FunctionSpec& f, Complex w);

struct SampleRegion {
  double re_min, re_max, im_min, im_max;
};

struct Sampler {
  SampleRegion region;
  int count = 10000;
  std::uint64_t seed = 1;
};

/// Jittered stratified samples: the rectangle is cut into a k x k lattice
/// (k = ceil(sqrt(count))) and cells are visited row-major, one uniform
/// point per cell, until `count` points exist. Deterministic in `seed`.
std::vector<Complex> stratified_samples(const Sampler& sampler);

/// log max(1, |v|) over the singular values v of f: tracts of |f| > e^s
/// with s above this floor avoid every singular value.
double singular_floor(const FunctionSpec& f);

enum class Inequality { koebe, growth };

std::string_view inequality_name(Inequality which);

struct HypothesisReport {
  Inequality inequality = Inequality::koebe;
  double s = 0.0;     // koebe offset
  double beta = 0.0;  // growth constant
  double t = 0.0;     // growth filter
  Sampler sampler{};
  int samples_drawn = 0;
  int samples_tested = 0;
  int samples_skipped = 0;  // overflowed or f = 0
  int violations = 0;
  double worst_ratio = 0.0;  // min lhs / rhs over tested samples
  Complex worst_point;

  bool passed() const { return samples_tested > 0 && violations == 0; }
};

/// |z f'/f| >= (log|f| - s) / (4 pi) on samples with |f(z)| > e^s.
/// Throws TooFewSamplesError if fewer than 100 samples survive the filter.
HypothesisReport verify_koebe_bound(const FunctionSpec& f, double s, const Sampler& sampler, int workers = 1);

/// |z f'/f| >= beta |Log f| on samples with |f(z)| >= e^t.
HypothesisReport verify_growth_bound(const FunctionSpec& f, double beta, double t, const Sampler& sampler,
                                     int workers = 1);

/// Minimum over samples with |f| >= e^t of |z f'/f| / |Log f|; an empirical
/// lower estimate of the admissible growth constant.
double estimate_beta(const FunctionSpec& f, double t, const Sampler& sampler, int workers = 1);

nlohmann::ordered_json to_json(const HypothesisReport& report);
std::string summary_line(const HypothesisReport& report);

struct ItineraryConfig {
  double strip_height = 2.0 * std::numbers::pi;
  double strip_offset = 0.0;

  long strip_index(Complex w) const;
};

/// Strip indices of Log f^k(e^w), k = 0..n-1, each iterate re-lifted with
/// the principal branch. Stops early (partial result) on overflow; throws
/// ZeroValueError if the orbit hits 0.
std::vector<long> itinerary(const FunctionSpec& f, Complex w, int n, const ItineraryConfig& cfg = {});

struct LogEscapeResult {
  bool escaping = false;
  bool branch_ambiguous = false;  // a lifted iterate sat within 1e-9 of the cut
  int min_step = -1;
  double min_real_part = 0.0;
};

/// Log-coordinate twin of escape_membership: iterates w -> Log f(e^w) and
/// tests min Re w_n >= log M over the same window and stopping rules.
LogEscapeResult log_escape_membership(const FunctionSpec& f, Complex w, const EscapeParams& params);

}  // namespace basindim
