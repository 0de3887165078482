#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cgmy {

using cplx = std::complex<double>;

enum class ModelFamily { pure_jump, mixed };

const char* to_string(ModelFamily m);

// Thrown by validation; constraint() names the violated rule, e.g. "1 < Y < 2".
class InvalidParams : public std::invalid_argument {
public:
    InvalidParams(std::string constraint, const std::string& detail);
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

// Raised when a numerical routine cannot meet its tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DerivedConstants {
    double m_star = 0;       // M - 1
    double g_star = 0;       // G + 1
    double gamma_neg_y = 0;  // Gamma(-Y) > 0
    double cos_half = 0;     // cos(pi Y / 2) < 0
    double gamma_tilde = 0;
    double eta = 0;
    double c = 0;            // risk-neutral drift
    double c_hat = 0;        // scale of symmetric Z
    double c_one = 0;        // scale of one-sided U
};

class CgmyParams {
public:
    // Throws InvalidParams.
    static CgmyParams validate(double C, double G, double M, double Y, double sigma);

    double C() const { return C_; }
    double G() const { return G_; }
    double M() const { return M_; }
    double Y() const { return Y_; }
    double sigma() const { return sigma_; }

    const DerivedConstants& derived() const { return d_; }
    ModelFamily family() const { return sigma_ > 0 ? ModelFamily::mixed : ModelFamily::pure_jump; }
    bool is_transition() const { return Y_ == 1.5; }

private:
    CgmyParams(double C, double G, double M, double Y, double sigma);

    double C_, G_, M_, Y_, sigma_;
    DerivedConstants d_;
};

// Gamma(-Y) for Y in (1,2) via Gamma(2-Y) / ((-Y)(1-Y)).
double gamma_neg(double Y);

DerivedConstants derived_constants(const CgmyParams& p);

// psi(u) with phi_t(u) = exp(t psi(u)); no strip check.
cplx char_exponent(const CgmyParams& p, cplx u);

// Throws std::domain_error when Im(u) is outside [-1, G].
cplx char_fn(const CgmyParams& p, double t, cplx u);

struct MoneynessSchedule {
    double e1 = 0;
    double e2 = 0;
    ModelFamily model = ModelFamily::pure_jump;
    double Y = 1.5;

    bool is_atm() const { return e1 == 0 && e2 == 0; }
    // exponent of the e2 term
    double sub_exponent() const;
};

MoneynessSchedule schedule_for(const CgmyParams& p, double e1, double e2);

double kappa_at(const MoneynessSchedule& s, double t);

} // namespace cgmy
