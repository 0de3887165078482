#pragma once

#include <complex>

namespace cgmy::bs {

double norm_cdf(double x);
double norm_pdf(double x);

// Zero rate, S0 = 1, strike exp(kappa).
double call(double sigma, double t, double kappa);
double vega(double sigma, double t, double kappa);

std::complex<double> char_fn(double Sigma, double t, std::complex<double> u);

// Throws std::domain_error for prices outside the no-arbitrage band,
// cgmy::NumericalError if the bracket [1e-8, 10] does not contain the root.
double implied_vol(double price, double t, double kappa);

} // namespace cgmy::bs
