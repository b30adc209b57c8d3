#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "basindim/complex.hpp"
#include "basindim/polynomial.hpp"
#include "basindim/quadrature.hpp"

namespace basindim {

/// lambda * e^z
struct ExpLambda {
  Complex lambda;
};

/// a cos z + b
struct Cosine {
  Complex a;
  Complex b;
};

/// lambda * integral_0^z exp(-t^2) dt
struct ErfScaled {
  Complex lambda;
};

/// c + integral_0^z p(t) exp(q(t)) dt
struct PExpQ {
  Polynomial p;
  Polynomial q;
  Complex c;
};

/// One entire function from the supported families. Construction goes through
/// the named factories, which enforce the family invariants (nonzero scale,
/// deg q >= 1, nonzero p).
class FunctionSpec {
 public:
  using Variant = std::variant<ExpLambda, Cosine, ErfScaled, PExpQ>;

  static FunctionSpec exp_lambda(Complex lambda);
  static FunctionSpec cosine(Complex a, Complex b);
  static FunctionSpec erf_scaled(Complex lambda);
  static FunctionSpec pexpq(Polynomial p, Polynomial q, Complex c);

  const Variant& variant() const { return variant_; }

  /// Config-file family name: exp_lambda, cosine, erf_scaled, pexpq.
  std::string_view family() const;

 private:
  explicit FunctionSpec(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

/// A function or derivative value. When `overflow` is set the value is not
/// meaningful beyond "modulus exceeds kOverflowThreshold".
struct Evaluation {
  Complex value;
  bool overflow = false;
};

/// f(z). PExpQ goes through adaptive quadrature along [0, z]; ErfScaled uses
/// its Maclaurin series for |z| <= 3, the large-argument expansion for
/// |z| >= 6, and quadrature in between.
Evaluation evaluate(const FunctionSpec& f, Complex z);

/// f'(z) in closed form.
Evaluation derivative(const FunctionSpec& f, Complex z);

/// z f'(z) / f(z). Throws ZeroValueError if |f(z)| < 1e-300 and
/// OverflowError if either factor overflowed.
Complex log_derivative(const FunctionSpec& f, Complex z);

/// integral of p(t) exp(q(t)) along the straight segment [from, to].
QuadratureResult integrate_pexpq(const Polynomial& p, const Polynomial& q, Complex from, Complex to);

struct SingularSet {
  std::vector<Complex> critical_values;
  std::vector<Complex> asymptotic_values;
  bool truncated = false;
};

/// Critical and finite asymptotic values. For the integral families the
/// asymptotic values are limits of f along the rays of asymptotic_directions,
/// computed by quadrature out to `search_radius` and checked against the
/// value at half that radius (must agree to 1e-8).
SingularSet singular_values(const FunctionSpec& f, double search_radius);

/// Angles ((2k+1)pi - arg c_q)/d, k = 1..d, in [0, 2pi) and sorted, along which the
/// integrand p e^q decays. Only defined for ErfScaled and PExpQ.
std::vector<double> asymptotic_directions(const FunctionSpec& f);

struct OrderEstimate {
  double rho;
};

OrderEstimate order_of(const FunctionSpec& f);

/// The (p, q, c) form of an integral-family function; ExpLambda is
/// lambda + integral lambda e^t. Throws std::invalid_argument for Cosine.
PExpQ as_integral_form(const FunctionSpec& f);

}  // namespace basindim
