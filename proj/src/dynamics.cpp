#include "basindim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "basindim/parallel.hpp"

namespace basindim {
namespace {

constexpr int kNewtonMaxSteps = 200;
constexpr double kMinimalSeparation = 1e-6;

struct OrbitState {
  OrbitOutcome outcome = OrbitOutcome::undecided;
  int landing = -1;
  int step = -1;
};

// p further iterates must bring w closer to the cycle point.
bool capture_verified(const FunctionSpec& f, Complex w, Complex target, int period) {
  const double before = std::abs(w - target);
  Complex v = w;
  for (int k = 0; k < period; ++k) {
    const Evaluation e = evaluate(f, v);
    if (e.overflow) return false;
    v = e.value;
  }
  const double after = std::abs(v - target);
  return after < before || after <= 1e-9 * std::max(1.0, std::abs(target));
}

template <class Recorder>
OrbitState run_orbit(const FunctionSpec& f, Complex z, const AttractingCycle* cycle,
                     const OrbitOptions& options, Recorder&& record) {
  Complex w = z;
  record(w);
  for (int n = 0;; ++n) {
    if (cycle != nullptr) {
      for (int j = 0; j < cycle->period; ++j) {
        const Complex target = cycle->points[j];
        if (std::abs(w - target) < options.capture_radius &&
            capture_verified(f, w, target, cycle->period)) {
          return {OrbitOutcome::converged_to_cycle, j, n};
        }
      }
    }
    if (!(std::abs(w) <= options.escape_radius)) return {OrbitOutcome::escaped, -1, n};
    if (n >= options.budget) return {OrbitOutcome::undecided, -1, n};
    const Evaluation e = evaluate(f, w);
    if (e.overflow) return {OrbitOutcome::escaped, -1, n + 1};
    w = e.value;
    record(w);
  }
}

int basin_of(int landing, int step, int period) {
  return ((landing - step) % period + period) % period;
}

// f^p(z) together with the chain-rule derivative.
struct PowerValue {
  Complex value;
  Complex slope{1.0, 0.0};
  bool overflow = false;
};

PowerValue iterate_power(const FunctionSpec& f, Complex z, int period) {
  PowerValue out{z};
  for (int k = 0; k < period; ++k) {
    const Evaluation d = derivative(f, out.value);
    const Evaluation e = evaluate(f, out.value);
    if (d.overflow || e.overflow) {
      out.overflow = true;
      return out;
    }
    out.slope *= d.value;
    out.value = e.value;
  }
  return out;
}

}  // namespace

void GridSpec::validate() const {
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs nx, ny >= 2");
  if (!(half_width > 0.0) || !(half_height > 0.0)) throw std::invalid_argument("grid half extents must be positive");
}

std::optional<std::pair<int, int>> GridSpec::pixel_of(Complex z) const {
  const Complex d = z - center;
  const double u = (d.real() / (2.0 * half_width) + 0.5) * nx;
  const double v = (d.imag() / (2.0 * half_height) + 0.5) * ny;
  if (!(u >= 0.0 && u < nx && v >= 0.0 && v < ny)) return std::nullopt;
  return std::pair{static_cast<int>(u), static_cast<int>(v)};
}

double GridSpec::pixel_diagonal() const {
  return std::hypot(2.0 * half_width / nx, 2.0 * half_height / ny);
}

OrbitResult iterate_orbit(const FunctionSpec& f, Complex z, const AttractingCycle* cycle,
                          const OrbitOptions& options) {
  if (options.budget < 1) throw std::invalid_argument("iterate_orbit: budget must be >= 1");
  OrbitResult result;
  const OrbitState state = run_orbit(f, z, cycle, options, [&](Complex w) { result.points.push_back(w); });
  result.outcome = state.outcome;
  result.step = state.step;
  result.steps_used = state.step;
  if (state.outcome == OrbitOutcome::converged_to_cycle) {
    result.landing_index = state.landing;
    result.basin_index = basin_of(state.landing, state.step, cycle->period);
  }
  return result;
}

AttractingCycle find_periodic_point(const FunctionSpec& f, int period, Complex seed, double tol) {
  if (period < 1) throw std::invalid_argument("find_periodic_point: period must be >= 1");
  if (!(tol >= 1e-12)) throw std::invalid_argument("find_periodic_point: tol must be >= 1e-12");

  Complex z = seed;
  int steps = 0;
  bool converged = false;
  for (; steps <= kNewtonMaxSteps; ++steps) {
    const PowerValue pv = iterate_power(f, z, period);
    if (pv.overflow) break;
    const Complex g = pv.value - z;
    if (std::abs(g) <= tol * std::max(1.0, std::abs(z))) {
      converged = true;
      break;
    }
    const Complex slope = pv.slope - 1.0;
    if (slope == Complex{}) break;
    z -= g / slope;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
  }
  if (!converged) {
    throw CycleError(CycleError::Kind::nonconvergence,
                     "Newton did not converge to a period-" + std::to_string(period) + " point");
  }

  AttractingCycle cycle;
  cycle.period = period;
  cycle.newton_steps = steps;
  cycle.points.push_back(z);
  Complex multiplier{1.0, 0.0};
  Complex w = z;
  for (int k = 0; k < period; ++k) {
    multiplier *= derivative(f, w).value;
    w = evaluate(f, w).value;
    if (k + 1 < period) cycle.points.push_back(w);
  }
  cycle.multiplier = multiplier;
  cycle.newton_residual = std::abs(w - z);

  for (int k = 1; k < period; ++k) {
    if (std::abs(cycle.points[k] - z) <= kMinimalSeparation) {
      throw CycleError(CycleError::Kind::minimal_period,
                       "cycle has period " + std::to_string(k) + " < " + std::to_string(period));
    }
  }
  if (!(std::abs(multiplier) < 1.0)) {
    throw CycleError(CycleError::Kind::non_attracting, "cycle multiplier has modulus >= 1");
  }
  return cycle;
}

double multiplier_check(const FunctionSpec& f, const AttractingCycle& cycle) {
  constexpr double h = 1e-6;
  const Complex z = cycle.points.front();
  const PowerValue plus = iterate_power(f, z + h, cycle.period);
  const PowerValue minus = iterate_power(f, z - h, cycle.period);
  if (plus.overflow || minus.overflow) {
    throw CycleError(CycleError::Kind::multiplier_mismatch, "overflow in finite-difference multiplier");
  }
  const double fd = std::abs((plus.value - minus.value) / (2.0 * h));
  const double chain = std::abs(cycle.multiplier);
  if (std::abs(fd - chain) > 1e-4 * chain) {
    throw CycleError(CycleError::Kind::multiplier_mismatch,
                     "finite-difference multiplier " + format_double(fd) + " disagrees with chain rule " +
                         format_double(chain));
  }
  return fd;
}

std::vector<Complex> scan_cycle_seeds(const FunctionSpec& f, int period, const GridSpec& grid,
                                      std::size_t max_candidates) {
  grid.validate();
  std::vector<double> residual(grid.size(), std::numeric_limits<double>::infinity());
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      Complex w = grid.pixel_center(i, j);
      const Complex start = w;
      bool overflow = false;
      for (int k = 0; k < period && !overflow; ++k) {
        const Evaluation e = evaluate(f, w);
        overflow = e.overflow;
        w = e.value;
      }
      if (!overflow) residual[static_cast<std::size_t>(j) * grid.nx + i] = std::abs(w - start);
    }
  }

  std::vector<std::pair<double, Complex>> minima;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double v = residual[static_cast<std::size_t>(j) * grid.nx + i];
      if (!std::isfinite(v)) continue;
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int a = i + di, b = j + dj;
          if ((di == 0 && dj == 0) || a < 0 || b < 0 || a >= grid.nx || b >= grid.ny) continue;
          if (residual[static_cast<std::size_t>(b) * grid.nx + a] < v) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) minima.emplace_back(v, grid.pixel_center(i, j));
    }
  }
  std::stable_sort(minima.begin(), minima.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Complex> seeds;
  for (std::size_t k = 0; k < minima.size() && k < max_candidates; ++k) seeds.push_back(minima[k].second);
  return seeds;
}

AttractingCycle find_cycle_by_scan(const FunctionSpec& f, int period, const GridSpec& grid) {
  for (const Complex seed : scan_cycle_seeds(f, period, grid)) {
    try {
      return find_periodic_point(f, period, seed);
    } catch (const CycleError&) {
    }
  }
  throw CycleError(CycleError::Kind::nonconvergence, "no attracting cycle found from scan seeds");
}

BasinField classify_grid(const FunctionSpec& f, const AttractingCycle& cycle, const GridSpec& grid,
                         const OrbitOptions& options, int workers) {
  grid.validate();
  if (options.budget < cycle.period) throw std::invalid_argument("classify_grid: budget must be >= period");
  BasinField field;
  field.grid = grid;
  field.period = cycle.period;
  field.labels.assign(grid.size(), BasinField::kUndecided);
  field.iterations.assign(grid.size(), 0);

  parallel_for(static_cast<std::size_t>(grid.ny), workers, [&](std::size_t row) {
    const int j = static_cast<int>(row);
    for (int i = 0; i < grid.nx; ++i) {
      const OrbitState s = run_orbit(f, grid.pixel_center(i, j), &cycle, options, [](Complex) {});
      const std::size_t k = field.index(i, j);
      field.iterations[k] = s.step;
      switch (s.outcome) {
        case OrbitOutcome::converged_to_cycle:
          field.labels[k] = basin_of(s.landing, s.step, cycle.period);
          break;
        case OrbitOutcome::escaped:
          field.labels[k] = BasinField::kEscaped;
          break;
        case OrbitOutcome::undecided:
          field.labels[k] = BasinField::kUndecided;
          break;
      }
    }
  }, 1);
  return field;
}

void EscapeParams::validate() const {
  if (!(floor >= 1.0)) throw std::invalid_argument("escape floor M must be >= 1");
  if (!(escape_radius >= floor)) throw std::invalid_argument("escape radius must be >= M");
  if (n_settle < 0 || n_settle >= n_max) throw std::invalid_argument("need 0 <= n_settle < n_max");
}

EscapeCertificate escape_membership(const FunctionSpec& f, Complex z, const EscapeParams& params) {
  params.validate();
  EscapeCertificate cert;
  cert.min_modulus = std::numeric_limits<double>::infinity();
  Complex w = z;
  for (int n = 0;; ++n) {
    const double modulus = std::abs(w);
    cert.steps_reached = n;
    if (n >= params.n_settle) {
      if (modulus < cert.min_modulus) {
        cert.min_modulus = modulus;
        cert.min_step = n;
      }
      if (modulus < params.floor) {
        cert.escaping = false;
        cert.stop = EscapeCertificate::Stop::below_floor;
        return cert;
      }
    }
    if (modulus >= params.escape_radius) {
      cert.escaping = true;
      cert.stop = EscapeCertificate::Stop::escape_radius;
      return cert;
    }
    if (n >= params.n_max) break;
    const Evaluation e = evaluate(f, w);
    if (e.overflow) {
      cert.escaping = true;
      cert.steps_reached = n + 1;
      cert.stop = EscapeCertificate::Stop::overflow;
      return cert;
    }
    w = e.value;
  }
  cert.escaping = true;
  cert.stop = EscapeCertificate::Stop::budget;
  return cert;
}

}  // namespace basindim
