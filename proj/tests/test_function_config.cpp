#include <doctest.h>

#include <stdexcept>
#include <string>

#include "basindim/function_config.hpp"
#include "basindim/presets.hpp"

using namespace basindim;

TEST_SUITE("function_config") {

TEST_CASE("parses each family") {
  const FunctionSpec e = parse_function_config_text("family=erf_scaled\nlambda_re=-2\nlambda_im=0\n");
  REQUIRE(std::holds_alternative<ErfScaled>(e.variant()));
  CHECK(std::get<ErfScaled>(e.variant()).lambda == Complex{-2.0, 0.0});

  const FunctionSpec x = parse_function_config_text("family=exp_lambda\nlambda_re=0.2\n");
  CHECK(std::get<ExpLambda>(x.variant()).lambda == Complex{0.2, 0.0});

  const FunctionSpec c = parse_function_config_text(
      "# cosine map\nfamily = cosine\n a_re=0\na_im=-0.15   # trailing comment\nb_re=0\nb_im=4.15\n\n");
  CHECK(std::get<Cosine>(c.variant()).a == Complex{0.0, -0.15});
  CHECK(std::get<Cosine>(c.variant()).b == Complex{0.0, 4.15});

  const FunctionSpec m = parse_function_config_text("family=pexpq\np=-0.14:0\nq=0:0,0:0,-1:0\nc_im=1.9\n");
  const PExpQ& g = std::get<PExpQ>(m.variant());
  CHECK(g.p == Polynomial::constant(Complex{-0.14, 0.0}));
  CHECK(g.q.degree() == 2);
  CHECK(g.q.leading() == Complex{-1.0, 0.0});
  CHECK(g.c == Complex{0.0, 1.9});
}

TEST_CASE("rejects malformed configs") {
  CHECK_THROWS_AS(parse_function_config_text("lambda_re=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=bessel\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=exp_lambda\nlambda_re=1\ncolour=red\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=exp_lambda\nlambda_re=1\na_re=2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=exp_lambda\nlambda_re=1\nlambda_re=2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=exp_lambda\nlambda_re=one\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=exp_lambda\nlambda_im=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=exp_lambda\nlambda_re=0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=cosine\nno equals sign\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=pexpq\np=1:0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=pexpq\np=1:0\nq=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function_config_text("family=pexpq\np=1:0\nq=1:0\n"), std::invalid_argument);
}

TEST_CASE("serialization round-trips every preset exactly") {
  for (const Preset& p : presets()) {
    CAPTURE(p.name);
    const std::string text = serialize_function_config(p.function);
    const FunctionSpec back = parse_function_config_text(text);
    CHECK(serialize_function_config(back) == text);
    CHECK(evaluate(back, Complex{0.3, -0.7}).value == evaluate(p.function, Complex{0.3, -0.7}).value);
  }
}

TEST_CASE("coefficient lists") {
  const Polynomial p = parse_coefficient_list(" 1:0 , 0:2,-3.5:1e-3 ");
  REQUIRE(p.degree() == 2);
  CHECK(p.coefficients()[1] == Complex{0.0, 2.0});
  CHECK(p.coefficients()[2] == Complex{-3.5, 1e-3});
  CHECK(parse_coefficient_list(format_coefficient_list(p)) == p);
  CHECK_THROWS_AS(parse_coefficient_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_coefficient_list("1:0,,2:0"), std::invalid_argument);
}

}  // TEST_SUITE
