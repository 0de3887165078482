#include "cgmy/model.hpp"

#include <cmath>
#include <numbers>

namespace cgmy {

const char* to_string(ModelFamily m)
{
    return m == ModelFamily::mixed ? "mixed" : "pure_jump";
}

InvalidParams::InvalidParams(std::string constraint, const std::string& detail)
    : std::invalid_argument("invalid parameters: " + constraint + " (" + detail + ")"),
      constraint_(std::move(constraint))
{
}

double gamma_neg(double Y)
{
    return std::tgamma(2.0 - Y) / ((-Y) * (1.0 - Y));
}

CgmyParams CgmyParams::validate(double C, double G, double M, double Y, double sigma)
{
    auto fail = [](const char* rule, const char* name, double v) {
        throw InvalidParams(rule, std::string(name) + " = " + std::to_string(v));
    };
    if (!std::isfinite(C) || !(C > 0)) fail("C > 0", "C", C);
    if (!std::isfinite(G) || !(G > 0)) fail("G > 0", "G", G);
    if (!std::isfinite(M) || !(M > 1)) fail("M > 1", "M", M);
    if (!std::isfinite(Y) || !(Y > 1 && Y < 2)) fail("1 < Y < 2", "Y", Y);
    if (!std::isfinite(sigma) || !(sigma >= 0)) fail("sigma >= 0", "sigma", sigma);
    return CgmyParams(C, G, M, Y, sigma);
}

CgmyParams::CgmyParams(double C, double G, double M, double Y, double sigma)
    : C_(C), G_(G), M_(M), Y_(Y), sigma_(sigma)
{
    d_ = derived_constants(*this);
}

DerivedConstants derived_constants(const CgmyParams& p)
{
    const double C = p.C(), G = p.G(), M = p.M(), Y = p.Y(), s = p.sigma();
    DerivedConstants d;
    d.m_star = M - 1.0;
    d.g_star = G + 1.0;
    d.gamma_neg_y = gamma_neg(Y);
    d.cos_half = std::cos(std::numbers::pi * Y / 2.0);

    const double cg = C * d.gamma_neg_y;
    const double shifted = std::pow(d.m_star, Y) + std::pow(d.g_star, Y);
    const double plain = std::pow(M, Y) + std::pow(G, Y);

    d.eta = cg * shifted;
    d.gamma_tilde = -cg * (shifted - plain) + 0.5 * s * s;
    d.c = -cg * (shifted - plain) - 0.5 * s * s;
    d.c_one = C * std::abs(d.cos_half) * d.gamma_neg_y;
    d.c_hat = 2.0 * d.c_one;
    return d;
}

cplx char_exponent(const CgmyParams& p, cplx u)
{
    const auto& d = p.derived();
    const double Y = p.Y();
    const cplx i(0.0, 1.0);
    const cplx jump = std::pow(p.M() - i * u, Y) + std::pow(p.G() + i * u, Y)
                      - std::pow(p.M(), Y) - std::pow(p.G(), Y);
    return i * d.c * u - 0.5 * p.sigma() * p.sigma() * u * u + p.C() * d.gamma_neg_y * jump;
}

cplx char_fn(const CgmyParams& p, double t, cplx u)
{
    if (u.imag() < -1.0 || u.imag() > p.G())
        throw std::domain_error("char_fn: Im(u) = " + std::to_string(u.imag())
                                + " outside the strip [-1, G]");
    if (t == 0.0) return 1.0;
    return std::exp(t * char_exponent(p, u));
}

double MoneynessSchedule::sub_exponent() const
{
    return model == ModelFamily::pure_jump ? 2.0 - 1.0 / Y : 2.5 - Y;
}

MoneynessSchedule schedule_for(const CgmyParams& p, double e1, double e2)
{
    return MoneynessSchedule{e1, e2, p.family(), p.Y()};
}

double kappa_at(const MoneynessSchedule& s, double t)
{
    if (t <= 0.0) return 0.0;
    return s.e1 * t + s.e2 * std::pow(t, s.sub_exponent());
}

} // namespace cgmy
