#include "basindim/funcat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "basindim/errors.hpp"

namespace basindim {
namespace {

// log(kOverflowThreshold)
const double kLogOverflow = std::log(kOverflowThreshold);
constexpr double kMaxExponent = 700.0;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Evaluation checked(Complex v) {
  if (!(std::abs(v) <= kOverflowThreshold)) return {v, true};
  return {v, false};
}

// integral_0^z exp(-t^2) dt by Maclaurin series; accurate to ~1e-13 absolute for |z| <= 3.
Complex gauss_integral_series(Complex z) {
  const Complex minus_z2 = -(z * z);
  const double r2 = std::norm(z);
  Complex term = z;  // (-1)^n z^(2n+1) / n!
  Complex sum = z;
  for (int n = 1; n < 200; ++n) {
    term *= minus_z2 / static_cast<double>(n);
    const Complex contribution = term / static_cast<double>(2 * n + 1);
    sum += contribution;
    if (n > r2 && std::abs(contribution) < 1e-17) break;
  }
  return sum;
}

// Large-argument expansion for |z| >= 6; near the imaginary axis the
// constant is negligible against exp(-z^2)/(2z).
Complex gauss_integral_asymptotic(Complex z) {
  const double sign = z.real() > 0.0 ? 1.0 : (z.real() < 0.0 ? -1.0 : 0.0);
  const Complex z2 = z * z;
  const Complex inv_2z2 = 1.0 / (2.0 * z2);
  Complex term{1.0, 0.0};
  Complex series = term;
  double previous = std::abs(term);
  for (int k = 0; k < 200; ++k) {
    const Complex next = term * (-(2.0 * k + 1.0)) * inv_2z2;
    const double size = std::abs(next);
    if (size >= previous) break;  // divergent tail of the asymptotic series
    series += next;
    term = next;
    previous = size;
    if (size < 1e-17) break;
  }
  return sign * (std::sqrt(std::numbers::pi) / 2.0) -
         std::exp(-z2) / (2.0 * z) * series;
}

const Polynomial& unit_polynomial() {
  static const Polynomial p = Polynomial::constant(Complex{1.0, 0.0});
  return p;
}

const Polynomial& minus_square_polynomial() {
  static const Polynomial q({Complex{}, Complex{}, Complex{-1.0, 0.0}});
  return q;
}

Evaluation gauss_integral(Complex z) {
  if (std::abs(z) <= 3.0) return {gauss_integral_series(z), false};
  const Complex z2 = z * z;
  if (-z2.real() > kMaxExponent - 10.0) return {Complex{}, true};
  if (std::abs(z) >= 6.0) {
    return checked(gauss_integral_asymptotic(z));
  }
  const QuadratureResult q = integrate_pexpq(unit_polynomial(), minus_square_polynomial(), Complex{}, z);
  if (q.overflow) return {Complex{}, true};
  return checked(q.value);
}

}  // namespace

FunctionSpec FunctionSpec::exp_lambda(Complex lambda) {
  if (lambda == Complex{}) throw std::invalid_argument("exp_lambda requires lambda != 0");
  return FunctionSpec(ExpLambda{lambda});
}

FunctionSpec FunctionSpec::cosine(Complex a, Complex b) {
  if (a == Complex{}) throw std::invalid_argument("cosine requires a != 0");
  return FunctionSpec(Cosine{a, b});
}

FunctionSpec FunctionSpec::erf_scaled(Complex lambda) {
  if (lambda == Complex{}) throw std::invalid_argument("erf_scaled requires lambda != 0");
  return FunctionSpec(ErfScaled{lambda});
}

FunctionSpec FunctionSpec::pexpq(Polynomial p, Polynomial q, Complex c) {
  if (q.degree() < 1) throw std::invalid_argument("pexpq requires deg q >= 1");
  if (p.is_zero()) throw std::invalid_argument("pexpq requires a nonzero p");
  return FunctionSpec(PExpQ{std::move(p), std::move(q), c});
}

std::string_view FunctionSpec::family() const {
  return std::visit(Overloaded{
                        [](const ExpLambda&) { return std::string_view("exp_lambda"); },
                        [](const Cosine&) { return std::string_view("cosine"); },
                        [](const ErfScaled&) { return std::string_view("erf_scaled"); },
                        [](const PExpQ&) { return std::string_view("pexpq"); },
                    },
                    variant_);
}

QuadratureResult integrate_pexpq(const Polynomial& p, const Polynomial& q, Complex from, Complex to) {
  auto integrand = [&](Complex t, bool& overflow) -> Complex {
    const Complex exponent = q(t);
    if (exponent.real() > kMaxExponent) {
      overflow = true;
      return Complex{};
    }
    return p(t) * std::exp(exponent);
  };
  // Endpoint-dominated growth: the primitive behaves like p e^q / q' there.
  const Complex q_end = q(to);
  const double slope = std::abs(q.derivative()(to));
  const double p_end = std::abs(p(to));
  if (slope > 1.0 && p_end > 0.0 &&
      q_end.real() + std::log(p_end / slope) > kLogOverflow + 10.0) {
    return {Complex{}, 0, true};
  }
  // exp(q) carries a relative roundoff of about |q| ulp
  QuadratureOptions options;
  const double spread = std::max({std::abs(q(from)), std::abs(q_end), std::abs(q(0.5 * (from + to)))});
  options.rel_tol = std::max(options.rel_tol, 8.0 * std::numeric_limits<double>::epsilon() * spread);
  return integrate_segment(integrand, from, to, options);
}

Evaluation evaluate(const FunctionSpec& f, Complex z) {
  return std::visit(
      Overloaded{
          [&](const ExpLambda& e) -> Evaluation {
            if (z.real() + std::log(std::abs(e.lambda)) > kLogOverflow) return {Complex{}, true};
            return {e.lambda * std::exp(z), false};
          },
          [&](const Cosine& c) -> Evaluation {
            if (std::abs(z.imag()) > kMaxExponent) return {Complex{}, true};
            return checked(c.a * std::cos(z) + c.b);
          },
          [&](const ErfScaled& e) -> Evaluation {
            const Evaluation g = gauss_integral(z);
            if (g.overflow) return g;
            return checked(e.lambda * g.value);
          },
          [&](const PExpQ& e) -> Evaluation {
            const QuadratureResult q = integrate_pexpq(e.p, e.q, Complex{}, z);
            if (q.overflow) return {Complex{}, true};
            return checked(e.c + q.value);
          },
      },
      f.variant());
}

Evaluation derivative(const FunctionSpec& f, Complex z) {
  return std::visit(
      Overloaded{
          [&](const ExpLambda& e) -> Evaluation {
            if (z.real() + std::log(std::abs(e.lambda)) > kLogOverflow) return {Complex{}, true};
            return {e.lambda * std::exp(z), false};
          },
          [&](const Cosine& c) -> Evaluation {
            if (std::abs(z.imag()) > kMaxExponent) return {Complex{}, true};
            return checked(-c.a * std::sin(z));
          },
          [&](const ErfScaled& e) -> Evaluation {
            const Complex exponent = -(z * z);
            if (exponent.real() + std::log(std::abs(e.lambda)) > kLogOverflow) return {Complex{}, true};
            return {e.lambda * std::exp(exponent), false};
          },
          [&](const PExpQ& e) -> Evaluation {
            const Complex exponent = e.q(z);
            if (exponent.real() > kMaxExponent) return {Complex{}, true};
            return checked(e.p(z) * std::exp(exponent));
          },
      },
      f.variant());
}

Complex log_derivative(const FunctionSpec& f, Complex z) {
  const Evaluation value = evaluate(f, z);
  const Evaluation slope = derivative(f, z);
  if (value.overflow || slope.overflow) throw OverflowError("log_derivative: f or f' overflowed");
  if (std::abs(value.value) < kZeroThreshold) throw ZeroValueError("log_derivative: f(z) = 0");
  return z * slope.value / value.value;
}

PExpQ as_integral_form(const FunctionSpec& f) {
  return std::visit(
      Overloaded{
          [](const ExpLambda& e) {
            return PExpQ{Polynomial::constant(e.lambda), Polynomial({Complex{}, Complex{1.0, 0.0}}), e.lambda};
          },
          [](const Cosine&) -> PExpQ {
            throw std::invalid_argument("cosine has no integral form");
          },
          [](const ErfScaled& e) {
            return PExpQ{Polynomial::constant(e.lambda), minus_square_polynomial(), Complex{}};
          },
          [](const PExpQ& e) { return e; },
      },
      f.variant());
}

std::vector<double> asymptotic_directions(const FunctionSpec& f) {
  if (!std::holds_alternative<ErfScaled>(f.variant()) && !std::holds_alternative<PExpQ>(f.variant())) {
    throw std::invalid_argument("asymptotic_directions needs an erf_scaled or pexpq function");
  }
  const PExpQ form = as_integral_form(f);
  const int d = form.q.degree();
  const double arg_c = std::arg(form.q.leading());
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> angles;
  angles.reserve(d);
  for (int k = 1; k <= d; ++k) {
    double phi = std::fmod(((2.0 * k + 1.0) * std::numbers::pi - arg_c) / d, two_pi);
    if (phi < 0.0) phi += two_pi;
    if (two_pi - phi < 1e-12) phi = 0.0;
    angles.push_back(phi);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

SingularSet singular_values(const FunctionSpec& f, double search_radius) {
  if (!(search_radius >= 1.0)) throw std::invalid_argument("singular_values: search_radius must be >= 1");
  SingularSet out;
  if (const auto* e = std::get_if<ExpLambda>(&f.variant())) {
    (void)e;
    out.asymptotic_values.push_back(Complex{});
    return out;
  }
  if (const auto* c = std::get_if<Cosine>(&f.variant())) {
    out.critical_values = {c->b + c->a, c->b - c->a};
    return out;
  }

  const PExpQ form = as_integral_form(f);
  if (std::holds_alternative<PExpQ>(f.variant())) {
    for (const Complex root : polynomial_roots(form.p)) {
      const Evaluation v = evaluate(f, root);
      if (v.overflow) throw OverflowError("critical value overflowed");
      out.critical_values.push_back(v.value);
    }
  }

  for (const double phi : asymptotic_directions(f)) {
    const Complex ray = std::polar(1.0, phi);
    const QuadratureResult inner = integrate_pexpq(form.p, form.q, Complex{}, 0.5 * search_radius * ray);
    const QuadratureResult outer = integrate_pexpq(form.p, form.q, Complex{}, search_radius * ray);
    if (inner.overflow || outer.overflow) throw AsymptoticLimitError("integrand overflowed along asymptotic ray");
    if (std::abs(outer.value - inner.value) > 1e-8) {
      throw AsymptoticLimitError("asymptotic limit not settled at the search radius");
    }
    const Complex limit = form.c + outer.value;
    const bool duplicate = std::any_of(out.asymptotic_values.begin(), out.asymptotic_values.end(),
                                       [&](Complex a) { return std::abs(a - limit) < 1e-12; });
    if (!duplicate) out.asymptotic_values.push_back(limit);
  }
  return out;
}

OrderEstimate order_of(const FunctionSpec& f) {
  return std::visit(Overloaded{
                        [](const ExpLambda&) { return OrderEstimate{1.0}; },
                        [](const Cosine&) { return OrderEstimate{1.0}; },
                        [](const ErfScaled&) { return OrderEstimate{2.0}; },
                        [](const PExpQ& e) { return OrderEstimate{static_cast<double>(e.q.degree())}; },
                    },
                    f.variant());
}

}  // namespace basindim
