#include "cgmy/mc.hpp"

#include <string>

#include "cgmy/stable.hpp"

namespace cgmy::mc {

void McConfig::validate() const
{
    if (n_paths < 1000) throw std::invalid_argument("n_paths must be >= 1000");
    if (n_chunks < 1) throw std::invalid_argument("n_chunks must be >= 1");
}

namespace {

struct PricePath {
    stable::OneSidedSampler draw;
    double ts, m_star, g_star, eta_t, drift, kappa, vol;

    double operator()(rng::Engine& g) const
    {
        const double up = ts * draw(g);
        const double un = -ts * draw(g);
        double x = up + un + drift;
        if (vol > 0) x += vol * rng::normal(g);
        const double payoff = -std::expm1(kappa - x);
        if (payoff <= 0) return 0.0;
        return std::exp(-m_star * up + g_star * un - eta_t) * payoff;
    }
};

PricePath make_price_path(const CgmyParams& p, double t, double kappa)
{
    if (!(t > 0)) throw std::invalid_argument("mc_price: t must be > 0, got " + std::to_string(t));
    const auto& d = p.derived();
    return PricePath{stable::OneSidedSampler(stable::OneSidedStableLaw::of(p)),
                     std::pow(t, 1.0 / p.Y()),
                     d.m_star,
                     d.g_star,
                     d.eta * t,
                     d.gamma_tilde * t,
                     kappa,
                     p.sigma() * std::sqrt(t)};
}

} // namespace

McEstimate mc_price(const CgmyParams& p, double t, double kappa, const McConfig& cfg)
{
    cfg.validate();
    return run(cfg.n_paths, cfg.seed, cfg.n_chunks, Exec::parallel, make_price_path(p, t, kappa));
}

McEstimate mc_price_serial(const CgmyParams& p, double t, double kappa, const McConfig& cfg)
{
    cfg.validate();
    return run(cfg.n_paths, cfg.seed, 1, Exec::serial, make_price_path(p, t, kappa));
}

McEstimate mc_weight_identity_check(const CgmyParams& p, double t, std::size_t n, std::uint64_t seed)
{
    if (!(t > 0)) throw std::invalid_argument("mc_weight_identity_check: t must be > 0");
    const auto& d = p.derived();
    stable::OneSidedSampler draw(stable::OneSidedStableLaw::of(p));
    const double ts = std::pow(t, 1.0 / p.Y());
    auto sample = [=](rng::Engine& g) {
        const double up = ts * draw(g);
        const double un = -ts * draw(g);
        return std::exp(-d.m_star * up + d.g_star * un);
    };
    return run(n, seed, 1, Exec::parallel, sample);
}

} // namespace cgmy::mc
