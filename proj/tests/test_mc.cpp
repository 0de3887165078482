#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cgmy/bs.hpp"
#include "cgmy/ift.hpp"
#include "cgmy/mc.hpp"
#include "oracles.hpp"
#include "params.hpp"

using namespace cgmy;

TEST_CASE("McConfig validation")
{
    CHECK_THROWS_AS((mc::McConfig{999, 1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((mc::McConfig{1000, 1, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS(mc::mc_price(sets::schoutens(), 0.0, 0.0, {1000, 1, 1}), std::invalid_argument);
}

TEST_CASE("determinism across chunk counts and against the serial reference")
{
    const auto p = sets::al_mixed();
    const std::size_t n = 50000 + 123;  // last block takes a remainder
    const auto ref = mc::mc_price_serial(p, 1.0 / 52, 0.0, {n, 99, 1});
    for (int k : {1, 4, 16}) {
        const auto e = mc::mc_price(p, 1.0 / 52, 0.0, {n, 99, k});
        CHECK(e.mean == ref.mean);
        CHECK(e.se == ref.se);
        CHECK(e.n == n);
        CHECK(e.seed == 99);
    }
    CHECK(mc::mc_price(p, 1.0 / 52, 0.0, {n, 100, 1}).mean != ref.mean);
}

TEST_CASE("deep out of the money and positivity")
{
    const auto p = sets::schoutens();
    const auto e = mc::mc_price(p, 1.0 / 12, 20.0, {100000, 1, 1});
    CHECK(e.mean >= 0);
    CHECK(e.mean <= e.se + 1e-12);
    const auto m = mc::mc_price(p, 1.0 / 12, 0.0, {100000, 1, 1});
    CHECK(m.mean > 0);
    CHECK(m.se > 0);
}

TEST_CASE("Black-Scholes limit")
{
    const auto p = CgmyParams::validate(1e-8, 0.4087, 1.932, 1.5, 0.2);
    const auto e = mc::mc_price(p, 0.25, 0.0, {400000, 5, 1});
    const double target = 2 * bs::norm_cdf(0.2 * 0.5 / 2) - 1;
    CHECK(std::abs(e.mean - target) < 3 * e.se);
}

TEST_CASE("agrees with Fourier prices")
{
    const auto p = sets::schoutens();
    const auto e = mc::mc_price(p, 1.0 / 12, 0.0, {100000, 8, 1});
    CHECK(std::abs(e.mean - ift::ift_price(p, 1.0 / 12, 0.0)) < std::max(3 * e.se, 1e-4));
    // short maturity: the Lewis formula still resolves where the control-variate integral is slow
    for (const auto& q : {sets::schoutens(), sets::al_pure(), sets::al_mixed()}) {
        const auto s = mc::mc_price(q, 1.0 / 252, 0.003, {200000, 12, 1});
        CHECK(std::abs(s.mean - oracle::lewis_price(q, 1.0 / 252, 0.003)) < 3.5 * s.se);
    }
}

TEST_CASE("monotone in strike")
{
    const auto p = sets::al_pure();
    const auto a = mc::mc_price(p, 1.0 / 12, -0.02, {100000, 3, 1});
    const auto b = mc::mc_price(p, 1.0 / 12, 0.0, {100000, 3, 1});
    const auto c = mc::mc_price(p, 1.0 / 12, 0.02, {100000, 3, 1});
    CHECK(a.mean - b.mean > 3 * std::hypot(a.se, b.se));
    CHECK(b.mean - c.mean > 3 * std::hypot(b.se, c.se));
}

TEST_CASE("SE scales as n^-1/2")
{
    const auto p = sets::schoutens();
    const auto a = mc::mc_price(p, 1.0 / 12, 0.0, {100000, 21, 1});
    const auto b = mc::mc_price(p, 1.0 / 12, 0.0, {400000, 22, 1});
    const double r = b.se / a.se;
    CHECK(r > 0.45);
    CHECK(r < 0.55);
}

TEST_CASE("measure-change weight identity")
{
    const auto p = sets::schoutens();
    const double eta = p.derived().eta;
    const auto a = mc::mc_weight_identity_check(p, 1.0 / 12, 1000000, 4);
    CHECK(std::abs(a.mean - std::exp(eta / 12)) < 3 * a.se);
    const auto z = mc::mc_weight_identity_check(p, 1e-6, 1000000, 4);
    CHECK(std::abs(z.mean - std::exp(eta * 1e-6)) < 3 * z.se);
    const auto lo = mc::mc_weight_identity_check(p, 0.1, 1000000, 5);
    const auto hi = mc::mc_weight_identity_check(p, 0.5, 1000000, 6);
    CHECK(hi.mean - lo.mean > 3 * std::hypot(hi.se, lo.se));
}
