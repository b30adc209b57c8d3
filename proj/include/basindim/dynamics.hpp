#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "basindim/complex.hpp"
#include "basindim/funcat.hpp"

namespace basindim {

struct AttractingCycle {
  int period = 0;
  std::vector<Complex> points;  // z_0 .. z_{p-1}, z_{j+1} = f(z_j)
  Complex multiplier;           // (f^p)'(z_0) by the chain rule
  double newton_residual = 0.0;
  int newton_steps = 0;
};

class CycleError : public std::runtime_error {
 public:
  enum class Kind { nonconvergence, minimal_period, non_attracting, multiplier_mismatch };
  CycleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Rectangular window sampled at pixel centers. Pixel (i, j) sits at
/// center + x_i + i*y_j with x_i = (2i + 1 - nx)/(2 nx) * 2 half_width and
/// y_j likewise; j grows with the imaginary part. The integer numerators
/// make mirrored pixels exact negatives of each other about the center.
struct GridSpec {
  Complex center;
  double half_width = 1.0;
  double half_height = 1.0;
  int nx = 2;
  int ny = 2;

  void validate() const;
  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  Complex pixel_center(int i, int j) const {
    const double x = static_cast<double>(2 * i + 1 - nx) / (2.0 * nx) * (2.0 * half_width);
    const double y = static_cast<double>(2 * j + 1 - ny) / (2.0 * ny) * (2.0 * half_height);
    return center + Complex{x, y};
  }
  /// Pixel containing z, or nullopt outside the window.
  std::optional<std::pair<int, int>> pixel_of(Complex z) const;
  double pixel_diagonal() const;
};

struct OrbitOptions {
  int budget = 2000;
  double capture_radius = 1e-4;
  double escape_radius = 1e10;
};

enum class OrbitOutcome { converged_to_cycle, escaped, undecided };

struct OrbitResult {
  std::vector<Complex> points;  // z, f(z), ..., up to the deciding iterate
  OrbitOutcome outcome = OrbitOutcome::undecided;
  int basin_index = -1;    // j with z in A(z_j), i.e. (landing index - step) mod p
  int landing_index = -1;  // cycle point approached at `step`
  int step = -1;           // iterate at which the outcome was decided
  int steps_used = 0;
};

/// Iterates f from z until it is captured by a cycle point (a capture only
/// counts if p more iterations bring the point closer), leaves the disk of
/// radius escape_radius (or overflows), or the budget of f-applications
/// runs out.
OrbitResult iterate_orbit(const FunctionSpec& f, Complex z, const AttractingCycle* cycle,
                          const OrbitOptions& options);

/// Newton iteration on f^p(z) - z from `seed`. Throws CycleError if Newton
/// fails within 200 steps, the cycle has smaller period, or it is not
/// attracting.
AttractingCycle find_periodic_point(const FunctionSpec& f, int period, Complex seed, double tol = 1e-12);

/// |(f^p)'(z_0)| by a central difference of f^p (step 1e-6); throws
/// CycleError(multiplier_mismatch) if it differs from the chain-rule
/// multiplier by more than relative 1e-4.
double multiplier_check(const FunctionSpec& f, const AttractingCycle& cycle);

/// Local minima of |f^p(z) - z| over the grid, best first.
std::vector<Complex> scan_cycle_seeds(const FunctionSpec& f, int period, const GridSpec& grid,
                                      std::size_t max_candidates = 16);

/// First attracting cycle reached by Newton from the scan candidates.
AttractingCycle find_cycle_by_scan(const FunctionSpec& f, int period, const GridSpec& grid);

struct BasinField {
  static constexpr std::int32_t kEscaped = -1;
  static constexpr std::int32_t kUndecided = -2;

  GridSpec grid;
  int period = 1;
  std::vector<std::int32_t> labels;      // basin index >= 0, kEscaped or kUndecided
  std::vector<std::int32_t> iterations;  // step at which the label was decided

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * grid.nx + i; }
  std::int32_t label(int i, int j) const { return labels[index(i, j)]; }
};

/// Per-pixel landing-phase classification. Pixels are independent, so the
/// result is identical for any worker count.
BasinField classify_grid(const FunctionSpec& f, const AttractingCycle& cycle, const GridSpec& grid,
                         const OrbitOptions& options, int workers = 1);

struct EscapeParams {
  double floor = 10.0;  // M
  int n_settle = 1;
  int n_max = 50;
  double escape_radius = 1e10;

  void validate() const;
};

struct EscapeCertificate {
  enum class Stop { escape_radius, overflow, below_floor, budget };

  bool escaping = false;
  int min_step = -1;  // -1 when the orbit escaped before n_settle
  double min_modulus = 0.0;
  int steps_reached = 0;
  Stop stop = Stop::budget;
};

/// Finite-budget test for liminf |f^n(z)| >= M: true iff |f^n(z)| >= M for
/// every n in [n_settle, n_reached]. Iteration stops early on escape
/// (|f^n| >= escape_radius or overflow, affirmative) and on the first
/// post-settle iterate below M (the verdict can no longer change).
EscapeCertificate escape_membership(const FunctionSpec& f, Complex z, const EscapeParams& params);

}  // namespace basindim
