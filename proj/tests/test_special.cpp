#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hrvnl/errors.hpp"
#include "hrvnl/special.hpp"

using namespace hrvnl;

TEST_CASE("digamma reference values") {
  // psi(1) = -gamma, psi(2) = 1 - gamma, psi(1/2) = -gamma - 2 ln 2.
  const double gamma = 0.57721566490153286;
  CHECK(digamma(1.0) == doctest::Approx(-gamma).epsilon(1e-12));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - gamma).epsilon(1e-12));
  CHECK(digamma(0.5) == doctest::Approx(-gamma - 2.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(digamma(10.0) == doctest::Approx(2.2517525890667212).epsilon(1e-12));
  CHECK(digamma(100.0) == doctest::Approx(4.6001618527380874).epsilon(1e-12));
}

TEST_CASE("digamma recurrence psi(x+1) = psi(x) + 1/x") {
  for (double x : {0.1, 0.7, 1.3, 3.9, 25.0}) {
    CHECK(digamma(x + 1.0) == doctest::Approx(digamma(x) + 1.0 / x).epsilon(1e-12));
  }
}

TEST_CASE("digamma domain") {
  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-1.5), DomainError);
}

TEST_CASE("normal cdf and quantile") {
  CHECK(norm_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(norm_cdf(1.0) == doctest::Approx(0.84134474606854293).epsilon(1e-12));
  CHECK(norm_cdf(-1.959963984540054) == doctest::Approx(0.025).epsilon(1e-10));
  CHECK(norm_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(norm_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-9));
  // Round trip across the usable range.
  for (double p : {1e-10, 1e-4, 0.01, 0.3, 0.5, 0.77, 0.99, 1.0 - 1e-9}) {
    CHECK(norm_cdf(norm_quantile(p)) == doctest::Approx(p).epsilon(1e-9));
  }
  CHECK_THROWS_AS(norm_quantile(0.0), DomainError);
  CHECK_THROWS_AS(norm_quantile(1.0), DomainError);
}

TEST_CASE("chi-square survival function") {
  // 1 df: SF(x) = 2 (1 - Phi(sqrt(x))).
  for (double x : {0.5, 1.0, 3.84, 10.0}) {
    CHECK(chi2_sf(x, 1.0) ==
          doctest::Approx(2.0 * (1.0 - norm_cdf(std::sqrt(x)))).epsilon(1e-10));
  }
  // 2 df: SF(x) = exp(-x/2).
  for (double x : {0.1, 1.0, 5.99, 20.0}) {
    CHECK(chi2_sf(x, 2.0) == doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-12));
  }
  CHECK(chi2_sf(0.0, 3.0) == doctest::Approx(1.0));
}

TEST_CASE("log_choose") {
  CHECK(log_choose(10, 0) == doctest::Approx(0.0));
  CHECK(log_choose(10, 3) == doctest::Approx(std::log(120.0)).epsilon(1e-12));
  CHECK(log_choose(52, 5) == doctest::Approx(std::log(2598960.0)).epsilon(1e-12));
}
