#pragma once

#include <cstddef>

namespace hrvnl {

// Digamma function, accurate to better than 1e-12 for x > 0.
// Throws DomainError for x <= 0.
double digamma(double x);

// Standard normal CDF.
double norm_cdf(double x);

// Standard normal quantile function (inverse CDF), p in (0, 1).
double norm_quantile(double p);

// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi2_sf(double x, double df);

// log of the binomial coefficient C(n, k).
double log_choose(std::size_t n, std::size_t k);

}  // namespace hrvnl
