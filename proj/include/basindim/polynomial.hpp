#pragma once

#include <span>
#include <vector>

#include "basindim/complex.hpp"

namespace basindim {

/// Dense polynomial with complex coefficients, constant term first.
/// Trailing zero coefficients are trimmed so the leading coefficient is
/// nonzero whenever the degree is positive.
class Polynomial {
 public:
  Polynomial() : coefficients_{Complex{0.0, 0.0}} {}
  explicit Polynomial(std::vector<Complex> coefficients);

  static Polynomial constant(Complex c) { return Polynomial({c}); }

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return degree() == 0 && coefficients_[0] == Complex{}; }
  Complex leading() const { return coefficients_.back(); }
  std::span<const Complex> coefficients() const { return coefficients_; }

  /// Horner evaluation.
  Complex operator()(Complex z) const {
    Complex acc = coefficients_.back();
    for (auto it = coefficients_.rbegin() + 1; it != coefficients_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Polynomial derivative() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coefficients_;
};

/// All complex roots of a polynomial by Aberth-Ehrlich simultaneous
/// iteration, started from a circle of initial guesses. Roots are returned
/// sorted by (re, im). Throws RootFindingError if the iteration does not
/// reach `tolerance` (relative step size) within `max_iterations`.
std::vector<Complex> polynomial_roots(const Polynomial& p, double tolerance = 1e-12,
                                      int max_iterations = 500);

}  // namespace basindim
