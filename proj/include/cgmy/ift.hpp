#pragma once

#include <optional>

#include "cgmy/model.hpp"

namespace cgmy::ift {

struct QuadratureConfig {
    double v_max = 2e4;
    double rel_tol = 1e-6;
    int max_subdivisions = 4000; // total panel budget, initial panels included

    void validate() const;
};

// Signaled when the Fourier integral cannot be resolved to rel_tol.
class ToleranceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

struct IftResult {
    double price = 0;
    double error = 0;       // quadrature error estimate
    double tail_bound = 0;  // bound on the integral beyond the truncation point
    double v_end = 0;       // truncation point actually used
    double imag_part = 0;   // imaginary part of the folded integral (should vanish)
    double Sigma = 0;
    int subdivisions = 0;
};

// sigma + sqrt(c_hat) t^{1/Y - 1/2}, clamped to [0.05, 1]
double default_control_vol(const CgmyParams& p, double t);

IftResult ift_price_detailed(const CgmyParams& p, double t, double kappa,
                             std::optional<double> Sigma = std::nullopt,
                             const QuadratureConfig& q = {});

double ift_price(const CgmyParams& p, double t, double kappa,
                 std::optional<double> Sigma = std::nullopt, const QuadratureConfig& q = {});

} // namespace cgmy::ift
