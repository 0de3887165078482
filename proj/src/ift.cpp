#include "cgmy/ift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>
#include <cstdio>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cgmy/bs.hpp"

namespace cgmy::ift {

using cd = std::complex<double>;

void QuadratureConfig::validate() const
{
    if (!(v_max > 0)) throw std::invalid_argument("v_max must be > 0");
    if (!(rel_tol > 0 && rel_tol <= 1e-2)) throw std::invalid_argument("rel_tol must lie in (0, 1e-2]");
    if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
}

double default_control_vol(const CgmyParams& p, double t)
{
    const double jump = std::sqrt(p.derived().c_hat) * std::pow(t, 1.0 / p.Y() - 0.5);
    return std::clamp(p.sigma() + jump, 0.05, 1.0);
}

namespace {

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

struct Panel {
    double a, b, value, error, imag;
    bool operator<(const Panel& o) const { return error < o.error; }
};

} // namespace

IftResult ift_price_detailed(const CgmyParams& p, double t, double kappa,
                             std::optional<double> Sigma, const QuadratureConfig& q)
{
    q.validate();
    if (!(t > 0)) throw std::invalid_argument("ift_price: t must be > 0");
    const double S = Sigma.value_or(default_control_vol(p, t));
    if (!(S > 0)) throw std::invalid_argument("ift_price: Sigma must be > 0");

    const cd i(0.0, 1.0);
    auto zeta = [&](double v) {
        const cd w(v, -1.0);
        const cd num = std::exp(t * char_exponent(p, w)) - bs::char_fn(S, t, w);
        return std::exp(-i * v * kappa) * num / (i * v * (1.0 + i * v));
    };
    auto modulus_at = [&](double v) {
        const cd w(v, -1.0);
        return std::abs(std::exp(t * char_exponent(p, w))) + std::abs(bs::char_fn(S, t, w));
    };

    const double bs_price = bs::call(S, t, kappa);
    const double scale = std::max(std::abs(bs_price), 1e-300);

    // truncation point: double until the tail bound is small relative to the price scale
    double V = 1.0;
    while (V < q.v_max && modulus_at(V) / V > 0.1 * q.rel_tol * scale) V = std::min(2.0 * V, q.v_max);

    using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
    auto integrate = [&](double a, double b) {
        double err_re = 0, err_im = 0;
        const double re = GK::integrate([&](double v) { return zeta(v).real(); }, a, b, 0, 0, &err_re);
        // imaginary part over [-b,-a] u [a,b]; zero for a real-valued law
        const double im = GK::integrate([&](double v) { return (zeta(v) + zeta(-v)).imag(); }, a, b, 0, 0, &err_im);
        return Panel{a, b, re, err_re, im};
    };

    // fixed doubling schedule of initial panels, then global adaptive bisection
    std::priority_queue<Panel> heap;
    std::vector<Panel> initial;
    for (double a = 0.0, b = std::min(1.0, V); a < V; a = b, b = std::min(2.0 * b, V))
        initial.push_back(integrate(a, b));
    for (const auto& pn : initial) heap.push(pn);

    auto totals = [&](double& val, double& err, double& im) {
        val = err = im = 0;
        auto copy = heap;
        while (!copy.empty()) {
            val += copy.top().value;
            err += copy.top().error;
            im += copy.top().imag;
            copy.pop();
        }
    };

    int subdivisions = static_cast<int>(initial.size());
    double val, err, im;
    totals(val, err, im);
    while (subdivisions > q.max_subdivisions
           || err / std::numbers::pi > 0.5 * q.rel_tol * std::abs(bs_price + val / std::numbers::pi)) {
        if (subdivisions >= q.max_subdivisions)
            throw ToleranceError("ift_price: subdivision cap reached before rel_tol (t = "
                                 + sci(t) + ")");
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel l = integrate(worst.a, mid), r = integrate(mid, worst.b);
        heap.push(l);
        heap.push(r);
        val += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        im += l.imag + r.imag - worst.imag;
        ++subdivisions;
    }
    // resum in a fixed order so the value does not depend on the refinement history
    totals(val, err, im);

    IftResult res;
    res.Sigma = S;
    res.v_end = V;
    res.subdivisions = subdivisions;
    res.price = bs_price + val / std::numbers::pi;
    res.error = err / std::numbers::pi;
    res.imag_part = im / (2.0 * std::numbers::pi);
    res.tail_bound = modulus_at(V) / V / std::numbers::pi;

    const double target = q.rel_tol * std::abs(res.price);
    const double last = std::abs(initial.back().value) / std::numbers::pi;
    if (res.tail_bound > target || (initial.size() > 1 && last > 0.1 * target && V >= q.v_max))
        throw ToleranceError("ift_price: truncation at v_max = " + sci(q.v_max)
                             + " leaves tail bound " + sci(res.tail_bound)
                             + " above rel_tol * price (t = " + sci(t) + ")");
    return res;
}

double ift_price(const CgmyParams& p, double t, double kappa, std::optional<double> Sigma,
                 const QuadratureConfig& q)
{
    return ift_price_detailed(p, t, kappa, Sigma, q).price;
}

} // namespace cgmy::ift
