#pragma once

namespace prognosis::survival {

// Regularized incomplete gamma functions, absolute tolerance 1e-12
// (series expansion for x < a + 1, continued fraction otherwise).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Upper tail of the chi-squared distribution with df degrees of freedom.
double chi2_sf(double x, int df = 1);

// Two-sided normal p-value for a z statistic.
double normal_two_sided_p(double z);

}  // namespace prognosis::survival
