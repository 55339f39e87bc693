// model.hpp: physical parameters, the analytic form factor and the laser strength B.
//
// Natural units (hbar = c = 1). Frequencies are usually expressed in units of
// the level splitting omega0.

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace zeno {

using cplx = std::complex<double>;

inline constexpr double kFineStructure = 7.2973525693e-3;

enum class TransitionKind { Electric, Magnetic };

std::string to_string(TransitionKind kind);
TransitionKind parse_transition_kind(const std::string& text);

/// Low-frequency exponent 2j - 1 (electric) or 2j + 1 (magnetic).
int low_frequency_exponent(int j, TransitionKind kind);

/// chi2(w) = (w/L)^p / (1 + (w/L)^2)^n.
///
/// Behaves as w^p below the cutoff and as w^-(2n-p) above it. It is rational,
/// so it continues to the whole complex plane with poles only at w = +-iL.
struct FormFactor {
    int p{1};
    int n{2};
    double lambda_cutoff{10.0};

    double beta() const { return 2.0 * n - p; }
};

cplx chi2(const FormFactor& ff, cplx omega);
double chi2(const FormFactor& ff, double omega);
/// d chi2 / d omega.
cplx chi2_derivative(const FormFactor& ff, cplx omega);

struct SystemParams {
    double omega0{1.0};          // level #2 above level #1
    double lambda_cutoff{10.0};  // form-factor cutoff
    int j{1};                    // photon angular momentum
    TransitionKind kind{TransitionKind::Electric};
    double beta{3.0};            // high-frequency tail exponent
    double g2{1e-3};             // squared coupling

    /// Throws ConfigError on hard violations; returns soft warnings.
    std::vector<std::string> validate() const;

    /// Throws ConfigError unless beta has the parity of 2j -+ 1.
    FormFactor form_factor() const;
};

/// g^2 = alpha (omega0/Lambda)^(2j+1-+1). Ignores params.g2.
double coupling_g2(const SystemParams& params, double alpha = kFineStructure);

struct LaserSpec {
    double omega_laser{1.0};  // laser frequency, resonant with 1-3
    double n0{0.0};           // photon number density
    double dipole_sq{0.0};    // |eps* . x13|^2
    double alpha_fs{kFineStructure};
};

/// B = sqrt(2 pi alpha Omega0 |eps* . x13|^2 n0).
double laser_strength_B(const LaserSpec& spec);

/// theta(x) with theta(0) = 1/2.
inline double step(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? 0.0 : 0.5); }

} // namespace zeno
