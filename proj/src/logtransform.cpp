#include "basindim/logtransform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "basindim/errors.hpp"
#include "basindim/parallel.hpp"

namespace basindim {
namespace {

const double kLogOverflow = std::log(kOverflowThreshold);

Complex principal_log(Complex v) {
  Complex l = std::log(v);
  if (l.imag() <= -std::numbers::pi) l.imag(std::numbers::pi);
  return l;
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

enum class SampleStatus : std::uint8_t { skipped, filtered, tested };

struct SampleEval {
  SampleStatus status = SampleStatus::skipped;
  double log_modulus = 0.0;  // log |f(z)|
  double lhs = 0.0;          // |z f'(z) / f(z)|
  double abs_log = 0.0;      // |Log f(z)|
};

SampleEval evaluate_sample(const FunctionSpec& f, Complex z, double filter, bool strict) {
  SampleEval out;
  const Evaluation value = evaluate(f, z);
  if (value.overflow || std::abs(value.value) < kZeroThreshold) return out;
  out.log_modulus = std::log(std::abs(value.value));
  const bool keep = strict ? out.log_modulus > filter : out.log_modulus >= filter;
  if (!keep) {
    out.status = SampleStatus::filtered;
    return out;
  }
  const Evaluation slope = derivative(f, z);
  if (slope.overflow) return out;
  out.lhs = std::abs(z * slope.value / value.value);
  out.abs_log = std::abs(principal_log(value.value));
  out.status = SampleStatus::tested;
  return out;
}

std::vector<SampleEval> evaluate_samples(const FunctionSpec& f, const std::vector<Complex>& samples,
                                         double filter, bool strict, int workers) {
  std::vector<SampleEval> evals(samples.size());
  parallel_for(samples.size(), workers,
               [&](std::size_t k) { evals[k] = evaluate_sample(f, samples[k], filter, strict); });
  return evals;
}

template <class Rhs>
HypothesisReport run_check(HypothesisReport report, const std::vector<Complex>& samples,
                           const std::vector<SampleEval>& evals, Rhs&& rhs_of) {
  report.samples_drawn = static_cast<int>(samples.size());
  report.worst_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const SampleEval& e = evals[k];
    if (e.status == SampleStatus::skipped) ++report.samples_skipped;
    if (e.status != SampleStatus::tested) continue;
    ++report.samples_tested;
    const double rhs = rhs_of(e);
    if (e.lhs < rhs) ++report.violations;
    const double ratio = e.lhs / rhs;
    if (ratio < report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_point = samples[k];
    }
  }
  if (report.samples_tested < 100) {
    throw TooFewSamplesError("only " + std::to_string(report.samples_tested) +
                             " samples passed the modulus filter (need 100)");
  }
  return report;
}

}  // namespace

LogPoint log_transform(const FunctionSpec& f, Complex w) {
  LogPoint p;
  p.w = w;
  if (w.real() > kLogOverflow) {
    p.overflow = true;
    return p;
  }
  p.z = std::exp(w);
  const Evaluation value = evaluate(f, p.z);
  if (value.overflow) {
    p.overflow = true;
    return p;
  }
  if (std::abs(value.value) < kZeroThreshold) return p;
  p.Fw = principal_log(value.value);
  p.valid = true;
  return p;
}

IdentityCheck log_derivative_identity_check(const FunctionSpec& f, Complex w) {
  constexpr double h = 1e-6;
  const LogPoint center = log_transform(f, w);
  if (!center.valid) throw std::invalid_argument("log_derivative_identity_check: F undefined at w");
  IdentityCheck check;
  if (std::abs(center.Fw.imag()) > std::numbers::pi - 0.1) {
    check.near_branch_cut = true;
    return check;
  }
  const LogPoint plus = log_transform(f, w + h);
  const LogPoint minus = log_transform(f, w - h);
  if (!plus.valid || !minus.valid) throw std::invalid_argument("log_derivative_identity_check: F undefined near w");
  Complex delta = plus.Fw - minus.Fw;
  // Unwrap a jump across the cut.
  const double two_pi = 2.0 * std::numbers::pi;
  delta.imag(delta.imag() - two_pi * std::round(delta.imag() / two_pi));
  const Complex numeric = delta / (2.0 * h);
  const Complex exact = log_derivative(f, center.z);
  check.relative_difference = std::abs(numeric - exact) / std::abs(exact);
  return check;
}

std::vector<Complex> stratified_samples(const Sampler& sampler) {
  const SampleRegion& r = sampler.region;
  if (!(r.re_max > r.re_min) || !(r.im_max > r.im_min)) throw std::invalid_argument("empty sampling rectangle");
  if (sampler.count < 1) throw std::invalid_argument("sample count must be positive");
  const int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(sampler.count))));
  const double dx = (r.re_max - r.re_min) / k;
  const double dy = (r.im_max - r.im_min) / k;
  std::mt19937_64 rng(sampler.seed);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(sampler.count));
  for (int a = 0; a < k && static_cast<int>(out.size()) < sampler.count; ++a) {
    for (int b = 0; b < k && static_cast<int>(out.size()) < sampler.count; ++b) {
      const double u = unit_uniform(rng);
      const double v = unit_uniform(rng);
      out.emplace_back(r.re_min + (b + u) * dx, r.im_min + (a + v) * dy);
    }
  }
  return out;
}

std::string_view inequality_name(Inequality which) {
  return which == Inequality::koebe ? "koebe" : "growth";
}

double singular_floor(const FunctionSpec& f) {
  const SingularSet set = singular_values(f, 12.0);
  double largest = 1.0;
  for (const Complex v : set.critical_values) largest = std::max(largest, std::abs(v));
  for (const Complex v : set.asymptotic_values) largest = std::max(largest, std::abs(v));
  return std::log(largest);
}

HypothesisReport verify_koebe_bound(const FunctionSpec& f, double s, const Sampler& sampler, int workers) {
  const auto samples = stratified_samples(sampler);
  const auto evals = evaluate_samples(f, samples, s, /*strict=*/true, workers);
  HypothesisReport report;
  report.inequality = Inequality::koebe;
  report.s = s;
  report.sampler = sampler;
  return run_check(report, samples, evals,
                   [&](const SampleEval& e) { return (e.log_modulus - s) / (4.0 * std::numbers::pi); });
}

HypothesisReport verify_growth_bound(const FunctionSpec& f, double beta, double t, const Sampler& sampler,
                                     int workers) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  const auto samples = stratified_samples(sampler);
  const auto evals = evaluate_samples(f, samples, t, /*strict=*/false, workers);
  HypothesisReport report;
  report.inequality = Inequality::growth;
  report.beta = beta;
  report.t = t;
  report.sampler = sampler;
  return run_check(report, samples, evals, [&](const SampleEval& e) { return beta * e.abs_log; });
}

double estimate_beta(const FunctionSpec& f, double t, const Sampler& sampler, int workers) {
  const auto samples = stratified_samples(sampler);
  const auto evals = evaluate_samples(f, samples, t, /*strict=*/false, workers);
  double best = std::numeric_limits<double>::infinity();
  int tested = 0;
  for (const SampleEval& e : evals) {
    if (e.status != SampleStatus::tested || e.abs_log == 0.0) continue;
    ++tested;
    best = std::min(best, e.lhs / e.abs_log);
  }
  if (tested < 100) {
    throw TooFewSamplesError("only " + std::to_string(tested) + " samples passed the modulus filter (need 100)");
  }
  return best;
}

nlohmann::ordered_json to_json(const HypothesisReport& report) {
  nlohmann::ordered_json j;
  j["inequality"] = inequality_name(report.inequality);
  if (report.inequality == Inequality::koebe) {
    j["parameters"] = {{"s", report.s}};
  } else {
    j["parameters"] = {{"beta", report.beta}, {"t", report.t}};
  }
  const SampleRegion& r = report.sampler.region;
  j["sampler"] = {{"re_min", r.re_min}, {"re_max", r.re_max}, {"im_min", r.im_min}, {"im_max", r.im_max},
                  {"count", report.sampler.count}, {"seed", report.sampler.seed}};
  j["samples_drawn"] = report.samples_drawn;
  j["samples_tested"] = report.samples_tested;
  j["samples_skipped"] = report.samples_skipped;
  j["violations"] = report.violations;
  j["worst_ratio"] = report.worst_ratio;
  j["worst_point"] = {{"re", report.worst_point.real()}, {"im", report.worst_point.imag()}};
  j["verdict"] = report.passed() ? "PASS" : "FAIL";
  return j;
}

std::string summary_line(const HypothesisReport& report) {
  std::ostringstream out;
  out << inequality_name(report.inequality) << ": " << (report.passed() ? "PASS" : "FAIL") << "  tested "
      << report.samples_tested << "/" << report.samples_drawn << ", violations " << report.violations
      << ", worst ratio " << format_double(report.worst_ratio) << " at " << format_complex(report.worst_point);
  return out.str();
}

long ItineraryConfig::strip_index(Complex w) const {
  return static_cast<long>(std::floor((w.imag() - strip_offset) / strip_height));
}

std::vector<long> itinerary(const FunctionSpec& f, Complex w, int n, const ItineraryConfig& cfg) {
  std::vector<long> out;
  if (n <= 0) return out;
  if (w.real() > kLogOverflow) return out;
  Complex z = std::exp(w);
  for (int k = 0; k < n; ++k) {
    if (std::abs(z) < kZeroThreshold) throw ZeroValueError("itinerary: orbit hits 0");
    out.push_back(cfg.strip_index(principal_log(z)));
    if (k + 1 == n) break;
    const Evaluation e = evaluate(f, z);
    if (e.overflow) break;
    z = e.value;
  }
  return out;
}

LogEscapeResult log_escape_membership(const FunctionSpec& f, Complex w, const EscapeParams& params) {
  params.validate();
  const double log_floor = std::log(params.floor);
  const double log_escape = std::log(params.escape_radius);
  LogEscapeResult out;
  out.min_real_part = std::numeric_limits<double>::infinity();
  Complex v = w;
  for (int n = 0;; ++n) {
    if (n >= params.n_settle) {
      if (v.real() < out.min_real_part) {
        out.min_real_part = v.real();
        out.min_step = n;
      }
      if (v.real() < log_floor) return out;
    }
    if (v.real() >= log_escape) {
      out.escaping = true;
      return out;
    }
    if (n >= params.n_max) break;
    const LogPoint next = log_transform(f, v);
    if (next.overflow) {
      out.escaping = true;
      return out;
    }
    if (!next.valid) return out;  // f = 0: Re F = -infinity
    if (std::numbers::pi - std::abs(next.Fw.imag()) < 1e-9) out.branch_ambiguous = true;
    v = next.Fw;
  }
  out.escaping = true;
  return out;
}

}  // namespace basindim
