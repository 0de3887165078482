#include "cgmy/stable.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace cgmy::stable {

namespace {

using std::numbers::pi;
using cd = std::complex<double>;
namespace bq = boost::math::quadrature;

constexpr double kTol = 1e-13;

bq::tanh_sinh<double>& tanh_sinh()
{
    thread_local bq::tanh_sinh<double> q;
    return q;
}

bq::exp_sinh<double>& exp_sinh()
{
    thread_local bq::exp_sinh<double> q;
    return q;
}

// exp(a) - 1 without cancellation for small |a|
cd cexpm1(cd a)
{
    const double x = a.real(), y = a.imag();
    const double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

// |u| beyond which exp(-|u|^Y) < 1e-16
double u_max(double Y)
{
    return std::pow(36.9, 1.0 / Y);
}

// standardized symmetric law, CF exp(-|u|^Y)
double pdf1(double Y, double z)
{
    z = std::abs(z);
    if (z == 0.0) return std::tgamma(1.0 + 1.0 / Y) / pi;
    if (z <= 1.0) {
        auto f = [&](double u) { return std::cos(u * z) * std::exp(-std::pow(u, Y)); };
        return tanh_sinh().integrate(f, 0.0, u_max(Y), kTol) / pi;
    }
    // ray u = (r/z) e^{i th}; the unit term integrates to a purely imaginary value
    const double th = pi / (3.0 * Y);
    const cd rot = std::polar(1.0, th), rotY = std::polar(1.0, Y * th);
    auto f = [&](double r) {
        const cd e = std::exp(cd(0, 1) * r * rot);
        return std::real(rot * e * cexpm1(-std::pow(r / z, Y) * rotY));
    };
    return exp_sinh().integrate(f, kTol) / (pi * z);
}

double sf1(double Y, double z)
{
    if (z == 0.0) return 0.5;
    if (z <= 1.0) {
        auto f = [&](double u) {
            return u == 0.0 ? z : std::sin(u * z) * std::exp(-std::pow(u, Y)) / u;
        };
        return 0.5 - tanh_sinh().integrate(f, 0.0, u_max(Y), kTol) / pi;
    }
    const double th = pi / (3.0 * Y);
    const cd rot = std::polar(1.0, th), rotY = std::polar(1.0, Y * th);
    auto f = [&](double r) {
        const cd e = std::exp(cd(0, 1) * r * rot);
        return std::imag(e * cexpm1(-std::pow(r / z, Y) * rotY)) / r;
    };
    return -exp_sinh().integrate(f, kTol) / pi;
}

// standardized one-sided law, c = 1
double sf1_one_sided(double Y, double x)
{
    const double tau = std::tan(pi * Y / 2.0);
    const cd skew(1.0, -tau);
    if (x <= 1.0) {
        auto f = [&](double u) {
            if (u == 0.0) return -x;
            const cd v = std::exp(cd(0, -u * x) - std::pow(u, Y) * skew);
            return v.imag() / u;
        };
        return 0.5 + tanh_sinh().integrate(f, 0.0, u_max(Y), kTol) / pi;
    }
    // ray u = (r/x) e^{-i th} in the lower half plane
    const double omega = std::atan(-tau);
    const double th = std::min((omega + pi / 6.0) / Y, pi / 2.0);
    const cd rot = std::polar(1.0, -th), rotY = std::polar(1.0, -Y * th) * skew;
    auto f = [&](double r) {
        const cd e = std::exp(cd(0, -1) * r * rot);
        return std::imag(e * cexpm1(-std::pow(r / x, Y) * rotY)) / r;
    };
    return exp_sinh().integrate(f, kTol) / pi;
}

// second-order tail coefficients for Levy density C x^{-Y-1}
double sym_pdf_b(double C, double Y)
{
    const double g = gamma_neg(Y), cs = std::cos(pi * Y / 2.0);
    return -(2.0 * C * C / pi) * std::sin(pi * Y) * cs * cs * std::tgamma(2.0 * Y + 1.0) * g * g;
}

double one_sided_sf_b(double C, double Y)
{
    const double g = gamma_neg(Y);
    return -(C * C / (2.0 * pi)) * std::sin(2.0 * pi * Y) * std::tgamma(2.0 * Y) * g * g;
}

} // namespace

double SymStableLaw::jump_intensity() const
{
    return c_hat / (2.0 * std::abs(std::cos(pi * Y / 2.0)) * gamma_neg(Y));
}

double SymStableLaw::scale() const { return std::pow(c_hat, 1.0 / Y); }

double OneSidedStableLaw::jump_intensity() const
{
    return c_one / (std::abs(std::cos(pi * Y / 2.0)) * gamma_neg(Y));
}

double OneSidedStableLaw::scale() const { return std::pow(c_one, 1.0 / Y); }

double pdf_sym_quadrature(const SymStableLaw& law, double z)
{
    const double s = law.scale();
    return pdf1(law.Y, z / s) / s;
}

double sf_sym_quadrature(const SymStableLaw& law, double z)
{
    return sf1(law.Y, z / law.scale());
}

double pdf_sym_tail(const SymStableLaw& law, double z)
{
    z = std::abs(z);
    const double C = law.jump_intensity(), Y = law.Y;
    return C * std::pow(z, -Y - 1.0) + sym_pdf_b(C, Y) * std::pow(z, -2.0 * Y - 1.0);
}

double sf_sym_tail(const SymStableLaw& law, double z)
{
    const double C = law.jump_intensity(), Y = law.Y;
    return (C / Y) * std::pow(z, -Y) + sym_pdf_b(C, Y) / (2.0 * Y) * std::pow(z, -2.0 * Y);
}

double pdf_crossover(const SymStableLaw& law)
{
    const double C = law.jump_intensity();
    return std::pow(std::abs(sym_pdf_b(C, law.Y)) / C / 1e-8, 1.0 / law.Y);
}

double sf_crossover(const SymStableLaw& law)
{
    const double C = law.jump_intensity();
    return std::pow(std::abs(sym_pdf_b(C, law.Y)) / (2.0 * C) / 1e-8, 1.0 / law.Y);
}

double pdf_sym(const SymStableLaw& law, double z)
{
    return std::abs(z) > pdf_crossover(law) ? pdf_sym_tail(law, z) : pdf_sym_quadrature(law, z);
}

double sf_sym(const SymStableLaw& law, double z)
{
    return z > sf_crossover(law) ? sf_sym_tail(law, z) : sf_sym_quadrature(law, z);
}

std::complex<double> cf_one_sided(const OneSidedStableLaw& law, double u)
{
    const double tau = std::tan(pi * law.Y / 2.0);
    const double sgn = (u > 0) - (u < 0);
    return std::exp(-law.c_one * std::pow(std::abs(u), law.Y) * cd(1.0, -tau * sgn));
}

double sf_one_sided(const OneSidedStableLaw& law, double x)
{
    return sf1_one_sided(law.Y, x / law.scale());
}

double sf_one_sided_tail(const OneSidedStableLaw& law, double x)
{
    const double C = law.jump_intensity(), Y = law.Y;
    return (C / Y) * std::pow(x, -Y) + one_sided_sf_b(C, Y) * std::pow(x, -2.0 * Y);
}

OneSidedSampler::OneSidedSampler(const OneSidedStableLaw& law)
    : Y_(law.Y), inv_y_(1.0 / law.Y)
{
    const double tau = std::tan(pi * Y_ / 2.0);
    B_ = std::atan(tau) / Y_;
    S_ = std::pow(1.0 + tau * tau, 0.5 / Y_);
    expo_ = (1.0 - Y_) / Y_;
    scale_ = law.scale();
}

double OneSidedSampler::operator()(rng::Engine& g) const
{
    const double V = pi * (rng::uniform_open(g) - 0.5);
    const double W = rng::exponential(g);
    const double a = Y_ * (V + B_);
    return scale_ * S_ * std::sin(a) / std::pow(std::cos(V), inv_y_)
           * std::pow(std::cos(V - a) / W, expo_);
}

std::vector<double> sample_one_sided(const OneSidedStableLaw& law, std::size_t n, std::uint64_t seed)
{
    OneSidedSampler draw(law);
    auto g = rng::make_engine(seed, 0);
    std::vector<double> out(n);
    for (auto& x : out) x = draw(g);
    return out;
}

std::vector<JumpPair> sample_z_pair(const CgmyParams& p, std::size_t n, std::uint64_t seed)
{
    OneSidedSampler draw(OneSidedStableLaw::of(p));
    auto g = rng::make_engine(seed, 0);
    std::vector<JumpPair> out(n);
    for (auto& z : out) {
        z.up = draw(g);
        z.un = -draw(g);
    }
    return out;
}

double e_z_plus(const CgmyParams& p)
{
    const double Y = p.Y();
    return std::tgamma(1.0 - 1.0 / Y) / pi * std::pow(p.derived().c_hat, 1.0 / Y);
}

double pdf_sym_at_zero(const SymStableLaw& law)
{
    return std::tgamma(1.0 + 1.0 / law.Y) / pi * std::pow(law.c_hat, -1.0 / law.Y);
}

double regularized_tail_moment(const OneSidedStableLaw& law)
{
    // Mellin transform of the one-sided law continued to order 2:
    // int x [S(x) - (C/Y) x^{-Y}] dx = -Im(Gamma(-2/Y) k^{2/Y}) / (Y pi), k = c (1 - i tan)
    const double Y = law.Y;
    const cd k = law.c_one * cd(1.0, -std::tan(pi * Y / 2.0));
    return -std::imag(std::tgamma(-2.0 / Y) * std::pow(k, 2.0 / Y)) / (Y * pi);
}

double min_pair_second_moment(const OneSidedStableLaw& law)
{
    // standardized law; K scales with c^{2/Y}
    const double Y = law.Y;
    const double C = OneSidedStableLaw{Y, 1.0}.jump_intensity();
    const double a = C / Y, b = one_sided_sf_b(C, Y);

    auto f = [&](double r) {
        const double s = sf1_one_sided(Y, r);
        return 2.0 * r * s * s;
    };
    double total = 0.0, lo = 0.0, hi = 0.5;
    const double R = 1e4;
    while (lo < R) {
        total += bq::gauss_kronrod<double, 31>::integrate(f, lo, hi, 12, 1e-12);
        lo = hi;
        hi *= 2.0;
        if (hi > R) hi = R;
    }
    // 2 int_R^inf r (a r^-Y + b r^-2Y)^2 dr
    total += 2.0 * (a * a * std::pow(R, 2.0 - 2.0 * Y) / (2.0 * Y - 2.0)
                    + 2.0 * a * b * std::pow(R, 2.0 - 3.0 * Y) / (3.0 * Y - 2.0)
                    + b * b * std::pow(R, 2.0 - 4.0 * Y) / (4.0 * Y - 2.0));
    return total * std::pow(law.c_one, 2.0 / Y);
}

} // namespace cgmy::stable
