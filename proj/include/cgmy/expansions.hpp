#pragma once

#include <array>

#include "cgmy/mc.hpp"
#include "cgmy/model.hpp"

namespace cgmy::expansions {

struct ExpansionCoeffs {
    ModelFamily model = ModelFamily::pure_jump;
    double d1 = 0, d2 = 0, d31 = 0, d32 = 0;
    std::array<double, 4> exponents{};
    double d32_se = 0;
    // echo of the inputs the coefficients were built from
    double Y = 0, sigma = 0, e1 = 0, e2 = 0;
};

enum class D32Method {
    decomposed,   // default: finite-variance rewrite with deterministic tail constants
    half_normal,  // literal half-normal importance-sampling estimator
};

std::array<double, 4> pure_jump_exponents(double Y);
std::array<double, 4> mixed_exponents(double Y);

ExpansionCoeffs pure_jump_coeffs(const CgmyParams& p, const MoneynessSchedule& s,
                                 const mc::McConfig& mc,
                                 D32Method method = D32Method::decomposed);
// d1, d2, d31 only; d32 left at 0
ExpansionCoeffs pure_jump_coeffs_closed_form(const CgmyParams& p, const MoneynessSchedule& s);

mc::McEstimate d32_pure_mc(const CgmyParams& p, const mc::McConfig& mc,
                           D32Method method = D32Method::decomposed);

// pieces of the decomposed estimator
struct D32Parts {
    mc::McEstimate quadratic;  // MC mean of the light-tailed squared remainder
    double min_pair = 0;       // E[(min(X,X')^+)^2]
    double tail_moment = 0;    // regularized int x [P(X>=x) - (C/Y)x^{-Y}] dx
};
D32Parts d32_parts(const CgmyParams& p, const mc::McConfig& mc);

// g(u, w) = w [1{u >= w} - C (M^Y + (G+1)^Y) / (Y w^Y)]
double half_normal_integrand(const CgmyParams& p, double u, double w);

ExpansionCoeffs mixed_coeffs(const CgmyParams& p, const MoneynessSchedule& s);
// d31 exactly as printed in the source: -C Gamma(-Y)[(G+1)^Y - G^Y] + (gamma~ - e1)/2
double mixed_d31_printed_form(const CgmyParams& p, const MoneynessSchedule& s);
// 2 (d31' - d32') route for the mixed d32 (e2 = 0)
double mixed_d32_alternate(const CgmyParams& p);

double price_expansion(const ExpansionCoeffs& c, double t, int order);

struct PriceBand {
    double value, lo, hi;
};
// d32 standard error carried as a +-1 SE band (point value unchanged)
PriceBand price_expansion_band(const ExpansionCoeffs& c, double t, int order);

// ATM implied-volatility expansions; require e1 = e2 = 0
double iv_expansion_pure(const ExpansionCoeffs& c, double t, int order);
double iv_expansion_mixed(const ExpansionCoeffs& c, double t, int order);
double iv_expansion(const ExpansionCoeffs& c, double t, int order);

} // namespace cgmy::expansions
