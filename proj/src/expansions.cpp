#include "cgmy/expansions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cgmy/stable.hpp"

namespace cgmy::expansions {

namespace {

using std::numbers::pi;

void check_order(int order)
{
    if (order < 1 || order > 3) throw std::invalid_argument("order must be 1, 2 or 3");
}

void require_pure(const CgmyParams& p)
{
    if (p.sigma() != 0) throw InvalidParams("sigma = 0", "pure-jump coefficients need sigma = 0");
}

} // namespace

std::array<double, 4> pure_jump_exponents(double Y)
{
    return {1.0 / Y, 1.0, 2.0 - 1.0 / Y, 2.0 / Y};
}

std::array<double, 4> mixed_exponents(double Y)
{
    return {0.5, (3.0 - Y) / 2.0, 1.0, 2.5 - Y};
}

ExpansionCoeffs pure_jump_coeffs_closed_form(const CgmyParams& p, const MoneynessSchedule& s)
{
    require_pure(p);
    const auto& d = p.derived();
    const double C = p.C(), G = p.G(), M = p.M(), Y = p.Y();

    ExpansionCoeffs c;
    c.model = ModelFamily::pure_jump;
    c.exponents = pure_jump_exponents(Y);
    c.Y = Y;
    c.e1 = s.e1;
    c.e2 = s.e2;
    c.d1 = stable::e_z_plus(p);
    c.d2 = 0.5 * C * d.gamma_neg_y
               * (std::pow(M - 1, Y) - std::pow(M, Y) - std::pow(G + 1, Y) + std::pow(G, Y))
           - 0.5 * s.e1;
    const double gap = d.gamma_tilde - s.e1;
    c.d31 = 0.5 * gap * gap * stable::pdf_sym_at_zero(stable::SymStableLaw::of(p)) - 0.5 * s.e2;
    return c;
}

ExpansionCoeffs pure_jump_coeffs(const CgmyParams& p, const MoneynessSchedule& s,
                                 const mc::McConfig& mc, D32Method method)
{
    auto c = pure_jump_coeffs_closed_form(p, s);
    const auto est = d32_pure_mc(p, mc, method);
    c.d32 = est.mean;
    c.d32_se = est.se;
    return c;
}

double half_normal_integrand(const CgmyParams& p, double u, double w)
{
    const double Y = p.Y();
    const double k = p.C() * (std::pow(p.M(), Y) + std::pow(p.G() + 1, Y)) / Y;
    return w * ((u >= w ? 1.0 : 0.0) - k * std::pow(w, -Y));
}

D32Parts d32_parts(const CgmyParams& p, const mc::McConfig& mc)
{
    require_pure(p);
    mc.validate();
    const double M = p.M(), G = p.G();
    const auto law = stable::OneSidedStableLaw::of(p);
    stable::OneSidedSampler draw(law);

    // With x = U^(p), y = U^(n) and U = Z^+ + U~, U^2 1{U<=0} splits into
    // contributions from x < 0 and y > 0 whose mixed and both-large parts
    // reduce to the two deterministic constants below.
    auto sample = [=](rng::Engine& g) {
        const double x = draw(g);
        const double y = -draw(g);
        const bool up = x + y >= 0;
        const double xm = x < 0 ? -x : 0.0;
        const double yp = y > 0 ? y : 0.0;
        const double a = up ? M : M - 1;
        const double b = up ? G : G + 1;
        return a * a * xm * xm + b * b * yp * yp;
    };
    D32Parts parts;
    parts.quadratic = mc::run(mc.n_paths, mc.seed, mc.n_chunks, mc::Exec::parallel, sample);
    parts.min_pair = stable::min_pair_second_moment(law);
    parts.tail_moment = stable::regularized_tail_moment(law);
    return parts;
}

mc::McEstimate d32_pure_mc(const CgmyParams& p, const mc::McConfig& mc, D32Method method)
{
    require_pure(p);
    mc.validate();
    const double M = p.M(), G = p.G();

    if (method == D32Method::decomposed) {
        const auto parts = d32_parts(p, mc);
        mc::McEstimate e = parts.quadratic;
        e.mean = -0.5 * parts.quadratic.mean + 0.5 * (M + G) * parts.min_pair
                 - (M * M + (G + 1) * (G + 1)) * parts.tail_moment;
        e.se = 0.5 * parts.quadratic.se;
        return e;
    }

    const auto& d = p.derived();
    stable::OneSidedSampler draw(stable::OneSidedStableLaw::of(p));
    const double Y = p.Y();
    const double k = p.C() * (std::pow(M, Y) + std::pow(G + 1, Y)) / Y;
    const double norm = std::sqrt(2.0 / pi);
    auto sample = [=](rng::Engine& g) {
        const double x = draw(g);
        const double y = -draw(g);
        const double z = x + y;
        const double u = (z > 0 ? z : 0.0) + d.m_star * x - d.g_star * y;
        const double v = std::abs(rng::normal(g));
        const double gval = v * ((u >= v ? 1.0 : 0.0) - k * std::pow(v, -Y));
        const double f = norm * std::exp(-0.5 * v * v);
        return -0.5 * (u <= 0 ? u * u : 0.0) - gval / f;
    };
    return mc::run(mc.n_paths, mc.seed, mc.n_chunks, mc::Exec::parallel, sample);
}

ExpansionCoeffs mixed_coeffs(const CgmyParams& p, const MoneynessSchedule& s)
{
    if (!(p.sigma() > 0)) throw InvalidParams("sigma > 0", "mixed coefficients need sigma > 0");
    const auto& d = p.derived();
    const double C = p.C(), G = p.G(), M = p.M(), Y = p.Y(), sg = p.sigma();
    const double g = d.gamma_neg_y, cs = d.cos_half;

    ExpansionCoeffs c;
    c.model = ModelFamily::mixed;
    c.exponents = mixed_exponents(Y);
    c.Y = Y;
    c.sigma = sg;
    c.e1 = s.e1;
    c.e2 = s.e2;
    c.d1 = sg / std::sqrt(2.0 * pi);
    c.d2 = C * std::pow(2.0, (1.0 - Y) / 2.0) * std::pow(sg, 1.0 - Y) * std::tgamma(1.0 - Y / 2.0)
           / (std::sqrt(pi) * Y * (Y - 1.0));
    c.d31 = 0.5 * C * g * (std::pow(M - 1, Y) - std::pow(M, Y) - std::pow(G + 1, Y) + std::pow(G, Y))
            - 0.5 * s.e1;
    c.d32 = -(1.0 / pi) * std::pow(sg, 1.0 - 2.0 * Y) * C * C * cs * cs * g * g
                * std::pow(2.0, Y - 0.5) * std::tgamma(Y - 0.5)
            - 0.5 * s.e2;
    return c;
}

double mixed_d31_printed_form(const CgmyParams& p, const MoneynessSchedule& s)
{
    const double Y = p.Y();
    return -p.C() * p.derived().gamma_neg_y * (std::pow(p.G() + 1, Y) - std::pow(p.G(), Y))
           + 0.5 * (p.derived().gamma_tilde - s.e1);
}

double mixed_d32_alternate(const CgmyParams& p)
{
    const double C = p.C(), Y = p.Y(), sg = p.sigma();
    const double g = p.derived().gamma_neg_y, cs = p.derived().cos_half;
    const double w_moment = std::pow(2.0, Y - 1.0) * std::tgamma(Y - 0.5) / std::sqrt(pi);
    const double base = C * C * cs * cs * g * g * w_moment / (std::sqrt(2.0 * pi) * std::pow(sg, 2.0 * Y - 1.0));
    const double d31p = -2.0 * Y * base;
    const double d32p = -(2.0 * Y - 1.0) * base;
    return 2.0 * (d31p - d32p);
}

double price_expansion(const ExpansionCoeffs& c, double t, int order)
{
    check_order(order);
    if (!(t > 0)) throw std::invalid_argument("price_expansion: t must be > 0");
    const auto& a = c.exponents;
    double v = c.d1 * std::pow(t, a[0]);
    if (order >= 2) v += c.d2 * std::pow(t, a[1]);
    if (order >= 3) v += c.d31 * std::pow(t, a[2]) + c.d32 * std::pow(t, a[3]);
    return v;
}

PriceBand price_expansion_band(const ExpansionCoeffs& c, double t, int order)
{
    const double v = price_expansion(c, t, order);
    const double w = order >= 3 ? c.d32_se * std::pow(t, c.exponents[3]) : 0.0;
    return {v, v - w, v + w};
}

namespace {

void require_atm(const ExpansionCoeffs& c)
{
    if (c.e1 != 0 || c.e2 != 0)
        throw std::invalid_argument("implied-vol expansion requires the ATM schedule (e1 = e2 = 0)");
}

// third-order iv coefficient: d31 below the transition, d32 above, their sum at Y = 3/2
double d3_iv(const ExpansionCoeffs& c)
{
    if (c.Y == 1.5) return c.d31 + c.d32;
    return c.Y < 1.5 ? c.d31 : c.d32;
}

} // namespace

double iv_expansion_pure(const ExpansionCoeffs& c, double t, int order)
{
    check_order(order);
    if (c.model != ModelFamily::pure_jump) throw std::invalid_argument("iv_expansion_pure: mixed coefficients");
    require_atm(c);
    if (!(t > 0)) throw std::invalid_argument("iv_expansion_pure: t must be > 0");
    const double Y = c.Y;
    double v = c.d1 * std::pow(t, 1.0 / Y - 0.5);
    if (order >= 2) v += c.d2 * std::sqrt(t);
    if (order >= 3) {
        const double q = Y <= 1.5 ? 1.5 - 1.0 / Y : 2.0 / Y - 0.5;
        v += d3_iv(c) * std::pow(t, q);
    }
    return std::sqrt(2.0 * pi) * v;
}

double iv_expansion_mixed(const ExpansionCoeffs& c, double t, int order)
{
    check_order(order);
    if (c.model != ModelFamily::mixed) throw std::invalid_argument("iv_expansion_mixed: pure-jump coefficients");
    require_atm(c);
    if (!(t > 0)) throw std::invalid_argument("iv_expansion_mixed: t must be > 0");
    const double Y = c.Y;
    double v = c.sigma;
    if (order >= 2) v += std::sqrt(2.0 * pi) * c.d2 * std::pow(t, 1.0 - Y / 2.0);
    if (order >= 3) {
        const double q = Y <= 1.5 ? 0.5 : 2.0 - Y;
        v += std::sqrt(2.0 * pi) * d3_iv(c) * std::pow(t, q);
    }
    return v;
}

double iv_expansion(const ExpansionCoeffs& c, double t, int order)
{
    return c.model == ModelFamily::mixed ? iv_expansion_mixed(c, t, order)
                                         : iv_expansion_pure(c, t, order);
}

} // namespace cgmy::expansions
