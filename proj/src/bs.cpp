#include "cgmy/bs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cgmy/model.hpp"

namespace cgmy::bs {

double norm_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double norm_pdf(double x)
{
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double call(double sigma, double t, double kappa)
{
    const double v = sigma * std::sqrt(t);
    if (kappa == 0.0) return std::erf(0.5 * v / std::numbers::sqrt2);
    const double d1 = -kappa / v + 0.5 * v;
    const double d2 = d1 - v;
    return norm_cdf(d1) - std::exp(kappa) * norm_cdf(d2);
}

double vega(double sigma, double t, double kappa)
{
    const double v = sigma * std::sqrt(t);
    const double d1 = -kappa / v + 0.5 * v;
    return norm_pdf(d1) * std::sqrt(t);
}

std::complex<double> char_fn(double Sigma, double t, std::complex<double> u)
{
    const std::complex<double> i(0.0, 1.0);
    return std::exp(-0.5 * Sigma * Sigma * t * (u * u + i * u));
}

double implied_vol(double price, double t, double kappa)
{
    const double lower = std::max(1.0 - std::exp(kappa), 0.0);
    if (!(price > lower && price < 1.0))
        throw std::domain_error("implied_vol: price " + std::to_string(price)
                                + " outside the no-arbitrage band");

    double lo = 1e-8, hi = 10.0;
    double flo = call(lo, t, kappa) - price, fhi = call(hi, t, kappa) - price;
    if (flo > 0 || fhi < 0) throw NumericalError("implied_vol: root not bracketed in [1e-8, 10]");

    // start from the ATM small-time guess
    double s = std::clamp(price * std::sqrt(2.0 * std::numbers::pi / t), lo, hi);
    for (int it = 0; it < 200; ++it) {
        const double f = call(s, t, kappa) - price;
        if (std::abs(f) <= 1e-14 * price && it > 0) return s;
        if (f > 0) hi = s; else lo = s;

        const double vg = vega(s, t, kappa);
        double next = vg > 0 ? s - f / vg : lo - 1.0;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - s) < 1e-15 * s || hi - lo < 1e-15 * hi) return next;
        s = next;
    }
    if (std::abs(call(s, t, kappa) - price) <= 1e-10 * price) return s;
    throw NumericalError("implied_vol: no convergence");
}

} // namespace cgmy::bs
