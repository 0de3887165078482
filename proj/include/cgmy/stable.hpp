#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cgmy/model.hpp"
#include "cgmy/rng.hpp"

namespace cgmy::stable {

// Symmetric law with CF exp(-c_hat |u|^Y).
struct SymStableLaw {
    double Y;
    double c_hat;

    static SymStableLaw of(const CgmyParams& p) { return {p.Y(), p.derived().c_hat}; }
    // Levy density is C |x|^{-Y-1} on both sides
    double jump_intensity() const;
    double scale() const;  // c_hat^{1/Y}
};

// Totally skewed (beta = 1) law with CF exp(-c_one |u|^Y (1 - i tan(pi Y/2) sgn u)).
struct OneSidedStableLaw {
    double Y;
    double c_one;

    static OneSidedStableLaw of(const CgmyParams& p) { return {p.Y(), p.derived().c_one}; }
    double jump_intensity() const;
    double scale() const;  // c_one^{1/Y}
};

double pdf_sym(const SymStableLaw& law, double z);
double sf_sym(const SymStableLaw& law, double z);

// the two branches, exposed for cross-checks
double pdf_sym_quadrature(const SymStableLaw& law, double z);
double pdf_sym_tail(const SymStableLaw& law, double z);
double sf_sym_quadrature(const SymStableLaw& law, double z);
double sf_sym_tail(const SymStableLaw& law, double z);
// |z| above which the two-term tail series is used
double pdf_crossover(const SymStableLaw& law);
double sf_crossover(const SymStableLaw& law);

std::complex<double> cf_one_sided(const OneSidedStableLaw& law, double u);
double sf_one_sided(const OneSidedStableLaw& law, double x);
double sf_one_sided_tail(const OneSidedStableLaw& law, double x);

class OneSidedSampler {
public:
    explicit OneSidedSampler(const OneSidedStableLaw& law);
    double operator()(rng::Engine& g) const;

private:
    double Y_, inv_y_, B_, S_, expo_, scale_;
};

std::vector<double> sample_one_sided(const OneSidedStableLaw& law, std::size_t n, std::uint64_t seed);

struct JumpPair {
    double up;  // U^(p)
    double un;  // U^(n) = -(independent one-sided draw)
};

std::vector<JumpPair> sample_z_pair(const CgmyParams& p, std::size_t n, std::uint64_t seed);

// E(Z_1^+), closed form
double e_z_plus(const CgmyParams& p);
// p_Z(1, 0), closed form
double pdf_sym_at_zero(const SymStableLaw& law);

// int_0^inf x [P(X >= x) - (C/Y) x^{-Y}] dx, closed form by analytic continuation
double regularized_tail_moment(const OneSidedStableLaw& law);
// E[(min(X, X')^+)^2] for independent X, X' by quadrature of 2 int r P(X > r)^2 dr
double min_pair_second_moment(const OneSidedStableLaw& law);

} // namespace cgmy::stable
