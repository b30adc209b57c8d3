#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "basindim/errors.hpp"
#include "basindim/funcat.hpp"

using namespace basindim;

namespace {

const double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(std::numbers::pi);

// Composite Simpson in long double along [0, z]; independent of the library
// quadrature and series.
Complex simpson_gauss(Complex z, int n = 20000) {
  using LC = std::complex<long double>;
  const LC zz(z.real(), z.imag());
  const LC h = zz / static_cast<long double>(n);
  LC sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    const LC t = h * static_cast<long double>(k);
    const long double w = (k == 0 || k == n) ? 1.0L : (k % 2 ? 4.0L : 2.0L);
    sum += w * std::exp(-t * t);
  }
  const LC v = sum * h / 3.0L;
  return Complex{static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<FunctionSpec> catalog() {
  return {
      FunctionSpec::exp_lambda(Complex{0.2, 0.0}),
      FunctionSpec::exp_lambda(Complex{-0.5, 1.0}),
      FunctionSpec::cosine(Complex{0.0, -0.15}, Complex{0.0, 4.15}),
      FunctionSpec::cosine(Complex{0.0, -0.1}, Complex{1.3, -3.7}),
      FunctionSpec::erf_scaled(Complex{-2.0, 0.0}),
      FunctionSpec::erf_scaled(Complex{0.5, 0.5}),
      FunctionSpec::pexpq(Polynomial::constant(Complex{-0.14, 0.0}), Polynomial({{}, {}, Complex{-1.0, 0.0}}),
                          Complex{0.0, 1.9}),
      FunctionSpec::pexpq(Polynomial({Complex{1.0, 0.0}, Complex{0.0, 1.0}}),
                          Polynomial({Complex{0.2, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.3}}),
                          Complex{0.5, 0.0}),
  };
}

}  // namespace

TEST_SUITE("funcat") {

TEST_CASE("factories enforce the family invariants") {
  CHECK_THROWS_AS(FunctionSpec::exp_lambda(Complex{}), std::invalid_argument);
  CHECK_THROWS_AS(FunctionSpec::erf_scaled(Complex{}), std::invalid_argument);
  CHECK_THROWS_AS(FunctionSpec::cosine(Complex{}, Complex{1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(FunctionSpec::pexpq(Polynomial::constant(Complex{1, 0}), Polynomial::constant(Complex{1, 0}), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FunctionSpec::pexpq(Polynomial(), Polynomial({{}, Complex{1, 0}}), {}), std::invalid_argument);
  CHECK(FunctionSpec::cosine(Complex{1, 0}, {}).family() == "cosine");
}

TEST_CASE("evaluate: closed-form examples") {
  CHECK(evaluate(FunctionSpec::exp_lambda(Complex{0.2, 0}), Complex{}).value == Complex{0.2, 0.0});
  const Complex c = evaluate(FunctionSpec::cosine(Complex{0, -0.15}, Complex{0, 4.15}), Complex{}).value;
  CHECK(std::abs(c - Complex{0.0, 4.0}) < 1e-15);
}

TEST_CASE("evaluate: f_{-2} maps the cycle point z0 to -z0") {
  const FunctionSpec f = FunctionSpec::erf_scaled(Complex{-2, 0});
  const Complex z0{1.7487, 0.0};
  CHECK(std::abs(evaluate(f, z0).value + z0) < 1e-3);
}

TEST_CASE("evaluate: erf family against independent oracles") {
  const FunctionSpec f = FunctionSpec::erf_scaled(Complex{1.0, 0.0});
  // real axis up to 20 against std::erf, absolute 1e-12
  for (double x = -20.0; x <= 20.0; x += 0.37) {
    const double exact = kSqrtPi / 2.0 * std::erf(x);
    CHECK(std::abs(evaluate(f, Complex{x, 0.0}).value - Complex{exact, 0.0}) < 1e-12);
  }
  // series, quadrature and asymptotic regimes against Simpson
  for (const Complex z : {Complex{0.3, 0.4}, Complex{2.0, 1.0}, Complex{1.0, -2.9}, Complex{3.5, 1.5},
                          Complex{-2.0, 4.0}, Complex{4.2, -4.2}, Complex{0.5, 5.5}, Complex{6.5, 0.5},
                          Complex{-7.0, -2.0}, Complex{0.0, 6.2}}) {
    CAPTURE(z);
    CHECK(rel(evaluate(f, z).value, simpson_gauss(z)) < 1e-10);
  }
}

TEST_CASE("evaluate: ErfScaled agrees with its PExpQ form on |z| <= 5") {
  const Complex lambda{-2.0, 0.3};
  const FunctionSpec e = FunctionSpec::erf_scaled(lambda);
  const FunctionSpec p = FunctionSpec::pexpq(Polynomial::constant(lambda), Polynomial({{}, {}, Complex{-1, 0}}), {});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> radius(0.0, 5.0), angle(0.0, 2.0 * kPi);
  for (int k = 0; k < 60; ++k) {
    const Complex z = std::polar(radius(rng), angle(rng));
    const Complex a = evaluate(e, z).value, b = evaluate(p, z).value;
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("evaluate: overflow is flagged instead of returning huge values") {
  CHECK(evaluate(FunctionSpec::exp_lambda(Complex{1, 0}), Complex{400.0, 0.0}).overflow);
  CHECK(evaluate(FunctionSpec::cosine(Complex{1, 0}, {}), Complex{0.0, 400.0}).overflow);
  CHECK(evaluate(FunctionSpec::erf_scaled(Complex{1, 0}), Complex{0.0, 20.0}).overflow);
  CHECK(evaluate(FunctionSpec::erf_scaled(Complex{1, 0}), Complex{0.0, 40.0}).overflow);
  const FunctionSpec m = FunctionSpec::pexpq(Polynomial::constant(Complex{-0.14, 0}),
                                             Polynomial({{}, {}, Complex{-1, 0}}), Complex{0, 1.9});
  CHECK(evaluate(m, Complex{-234.6, 236.0}).overflow);
  CHECK_FALSE(evaluate(m, Complex{30.0, 1.0}).overflow);
}

TEST_CASE("derivative: closed-form examples") {
  CHECK(derivative(FunctionSpec::erf_scaled(Complex{2, 0}), Complex{}).value == Complex{2.0, 0.0});
  const FunctionSpec e = FunctionSpec::pexpq(Polynomial::constant(Complex{1, 0}), Polynomial({{}, Complex{1, 0}}), {});
  CHECK(std::abs(derivative(e, Complex{1, 0}).value - std::numbers::e) < 1e-15);
  const FunctionSpec c = FunctionSpec::cosine(Complex{2, 0}, Complex{1, 0});
  CHECK(std::abs(derivative(c, Complex{0.3, 0.1}).value + 2.0 * std::sin(Complex{0.3, 0.1})) < 1e-15);
}

TEST_CASE("derivative: f_{-2} at z0 matches a central difference") {
  const FunctionSpec f = FunctionSpec::erf_scaled(Complex{-2, 0});
  const Complex z0{1.7487089650231873, 0.0};
  const double h = 1e-5;
  const Complex fd = (evaluate(f, z0 + h).value - evaluate(f, z0 - h).value) / (2.0 * h);
  CHECK(rel(derivative(f, z0).value, fd) < 1e-6);
}

TEST_CASE("derivative consistency on random points, every family") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> radius(0.0, 3.0), angle(0.0, 2.0 * kPi);
  const double h = 1e-5;
  for (const FunctionSpec& f : catalog()) {
    CAPTURE(f.family());
    for (int k = 0; k < 100; ++k) {
      const Complex z = std::polar(radius(rng), angle(rng));
      const Complex fd = (evaluate(f, z + h).value - evaluate(f, z - h).value) / (2.0 * h);
      const Complex d = derivative(f, z).value;
      CHECK(std::abs(d - fd) <= 1e-5 * std::max(1.0, std::abs(d)));
    }
  }
}

TEST_CASE("PExpQ is path independent") {
  const PExpQ m = as_integral_form(catalog()[7]);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int k = 0; k < 30; ++k) {
    const Complex z{u(rng), u(rng)};
    const Complex direct = integrate_pexpq(m.p, m.q, Complex{}, z).value;
    const Complex corner{z.real(), 0.0};
    const Complex two_leg =
        integrate_pexpq(m.p, m.q, Complex{}, corner).value + integrate_pexpq(m.p, m.q, corner, z).value;
    CHECK(std::abs(direct - two_leg) < 1e-10);
  }
}

TEST_CASE("ErfScaled is odd and flips sign with lambda") {
  const FunctionSpec plus = FunctionSpec::erf_scaled(Complex{2, 0});
  const FunctionSpec minus = FunctionSpec::erf_scaled(Complex{-2, 0});
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int k = 0; k < 100; ++k) {
    const Complex z{u(rng), u(rng)};
    const Complex a = evaluate(plus, z).value;
    const double scale = std::max(1.0, std::abs(a));
    CHECK(std::abs(evaluate(plus, -z).value + a) <= 1e-12 * scale);
    CHECK(std::abs(evaluate(minus, z).value + a) <= 1e-12 * scale);
  }
}

TEST_CASE("log_derivative examples") {
  CHECK(std::abs(log_derivative(FunctionSpec::exp_lambda(Complex{1, 0}), Complex{30.0, 0.0}) - 30.0) < 1e-12);
  const Complex c = log_derivative(FunctionSpec::cosine(Complex{1, 0}, {}), Complex{kPi / 4.0, 0.0});
  CHECK(std::abs(c + kPi / 4.0) < 1e-14);

  const FunctionSpec f = FunctionSpec::erf_scaled(Complex{-2, 0});
  const Complex z{2.0, 1.0};
  const Complex fz = -2.0 * simpson_gauss(z);
  const Complex dz = -2.0 * std::exp(-z * z);
  CHECK(rel(log_derivative(f, z), z * dz / fz) < 1e-8);

  CHECK_THROWS_AS(log_derivative(f, Complex{}), ZeroValueError);
  CHECK_THROWS_AS(log_derivative(FunctionSpec::exp_lambda(Complex{1, 0}), Complex{500.0, 0.0}), OverflowError);
}

TEST_CASE("singular values") {
  SUBCASE("f_{-2}: asymptotic values +-sqrt(pi)") {
    const SingularSet s = singular_values(FunctionSpec::erf_scaled(Complex{-2, 0}), 12.0);
    CHECK(s.critical_values.empty());
    REQUIRE(s.asymptotic_values.size() == 2);
    std::vector<double> re{s.asymptotic_values[0].real(), s.asymptotic_values[1].real()};
    std::sort(re.begin(), re.end());
    CHECK(std::abs(re[0] + kSqrtPi) < 1e-10);
    CHECK(std::abs(re[1] - kSqrtPi) < 1e-10);
    for (const Complex v : s.asymptotic_values) CHECK(std::abs(v.imag()) < 1e-10);
  }
  SUBCASE("cosine: b +- a exactly") {
    const Complex a{0, -0.1}, b{1.3, -3.7};
    const SingularSet s = singular_values(FunctionSpec::cosine(a, b), 10.0);
    REQUIRE(s.critical_values.size() == 2);
    CHECK(std::find(s.critical_values.begin(), s.critical_values.end(), b + a) != s.critical_values.end());
    CHECK(std::find(s.critical_values.begin(), s.critical_values.end(), b - a) != s.critical_values.end());
    CHECK(s.asymptotic_values.empty());
  }
  SUBCASE("exp: omitted value 0") {
    const SingularSet s = singular_values(FunctionSpec::exp_lambda(Complex{0.2, 0}), 10.0);
    REQUIRE(s.asymptotic_values.size() == 1);
    CHECK(s.asymptotic_values[0] == Complex{});
    CHECK(s.critical_values.empty());
  }
  SUBCASE("PExpQ with p of degree 1: one critical value, two asymptotic values") {
    // p = t - 1, q = -t^2: critical point 1, limits c +- integral
    const FunctionSpec f = FunctionSpec::pexpq(Polynomial({Complex{-1, 0}, Complex{1, 0}}),
                                               Polynomial({{}, {}, Complex{-1, 0}}), Complex{0, 1});
    const SingularSet s = singular_values(f, 12.0);
    REQUIRE(s.critical_values.size() == 1);
    CHECK(std::abs(s.critical_values[0] - evaluate(f, Complex{1, 0}).value) < 1e-14);
    // along +R: integral (t-1)e^{-t^2} = 1/2 - sqrt(pi)/2
    REQUIRE(s.asymptotic_values.size() == 2);
    const Complex expect_plus = Complex{0, 1} + (0.5 - kSqrtPi / 2.0);
    const Complex expect_minus = Complex{0, 1} + (0.5 + kSqrtPi / 2.0);
    const bool found_plus = std::any_of(s.asymptotic_values.begin(), s.asymptotic_values.end(),
                                        [&](Complex v) { return std::abs(v - expect_plus) < 1e-10; });
    const bool found_minus = std::any_of(s.asymptotic_values.begin(), s.asymptotic_values.end(),
                                         [&](Complex v) { return std::abs(v - expect_minus) < 1e-10; });
    CHECK(found_plus);
    CHECK(found_minus);
    CHECK_FALSE(s.truncated);
  }
  SUBCASE("too small a radius fails the limit check") {
    CHECK_THROWS_AS(singular_values(FunctionSpec::erf_scaled(Complex{1, 0}), 2.0), AsymptoticLimitError);
  }
}

TEST_CASE("asymptotic directions") {
  const auto erf_dirs = asymptotic_directions(FunctionSpec::erf_scaled(Complex{1, 0}));
  REQUIRE(erf_dirs.size() == 2);
  CHECK(erf_dirs[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(erf_dirs[1] == doctest::Approx(kPi));

  const FunctionSpec lin = FunctionSpec::pexpq(Polynomial::constant(Complex{1, 0}), Polynomial({{}, Complex{1, 0}}), {});
  const auto lin_dirs = asymptotic_directions(lin);
  REQUIRE(lin_dirs.size() == 1);
  CHECK(lin_dirs[0] == doctest::Approx(kPi));

  // q = i t^3: brute-force fan of 3600 rays, directions where Re q(e^{i phi}) is most negative
  const Polynomial q({{}, {}, {}, Complex{0, 1}});
  const FunctionSpec cubic = FunctionSpec::pexpq(Polynomial::constant(Complex{1, 0}), q, {});
  const auto dirs = asymptotic_directions(cubic);
  REQUIRE(dirs.size() == 3);
  std::vector<double> minima;
  const int rays = 3600;
  auto re_q = [&](int k) { return q(std::polar(1.0, 2.0 * kPi * k / rays)).real(); };
  for (int k = 0; k < rays; ++k) {
    const double here = re_q(k);
    if (here < re_q((k + rays - 1) % rays) && here <= re_q((k + 1) % rays)) minima.push_back(2.0 * kPi * k / rays);
  }
  REQUIRE(minima.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(dirs[k] - minima[k]) < 2e-3);

  CHECK_THROWS_AS(asymptotic_directions(FunctionSpec::cosine(Complex{1, 0}, {})), std::invalid_argument);
}

TEST_CASE("order of growth") {
  CHECK(order_of(FunctionSpec::exp_lambda(Complex{1, 0})).rho == 1.0);
  CHECK(order_of(FunctionSpec::cosine(Complex{1, 0}, {})).rho == 1.0);
  CHECK(order_of(FunctionSpec::erf_scaled(Complex{1, 0})).rho == 2.0);
  CHECK(order_of(catalog()[7]).rho == 3.0);
}

TEST_CASE("integral form of the exponential and erf families") {
  const PExpQ e = as_integral_form(FunctionSpec::exp_lambda(Complex{0.2, 0}));
  const FunctionSpec back = FunctionSpec::pexpq(e.p, e.q, e.c);
  for (const Complex z : {Complex{0.5, 0.5}, Complex{-1, 2}, Complex{2, -1}}) {
    CHECK(rel(evaluate(back, z).value, 0.2 * std::exp(z)) < 1e-12);
  }
  CHECK_THROWS_AS(as_integral_form(FunctionSpec::cosine(Complex{1, 0}, {})), std::invalid_argument);
}

}  // TEST_SUITE
