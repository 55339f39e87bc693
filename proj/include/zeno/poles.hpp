// poles.hpp: the resonance pole s_pole(B) and the decay-rate laws gamma(B).
//
// The pole is written s_pole = -i omega0 + i dE - gamma/2. For B < omega0 it
// sits under both cuts (third sheet), for B > omega0 under the upper cut only
// (second sheet).

#pragma once

#include <optional>

#include "zeno/selfenergy.hpp"

namespace zeno {

enum class SheetCase { CaseA_ThirdSheet, CaseB_SecondSheet };
enum class PoleMethod { Perturbative, Newton };

std::string to_string(SheetCase c);
std::string to_string(PoleMethod m);

struct PoleResult {
    cplx s_pole{};
    double delta_E{0.0};
    double gamma{0.0};
    double lifetime{0.0};
    SheetCase sheet_case{SheetCase::CaseA_ThirdSheet};
    PoleMethod method{PoleMethod::Perturbative};
    double validity_margin{0.0};  // |B - omega0| / (g2 omega0); trust needs > 1
    double B{0.0};
    int iterations{0};            // Newton only
    double residual{0.0};         // |s + i omega0 + Q(B, s)|, Newton only

    bool trustworthy() const { return validity_margin > 1.0; }
};

SheetCase sheet_case_for(double B, double omega0);

/// Sheet tags of the determination that carries the pole.
SheetPoint pole_sheet_point(cplx s, double B, double omega0);

/// Laser-off pole to O(g2): gamma = 2 pi g2 omega0 chi2(omega0),
/// dE = g2 omega0 P Int chi2(w)/(w - omega0) dw.
PoleResult fermi_golden_rule(const SystemParams& params, const FormFactor& ff);

/// gamma(B) = (gamma/2) [chi2(omega0 + B) + chi2(omega0 - B) theta(omega0 - B)] / chi2(omega0).
double gamma_of_B(const SystemParams& params, const FormFactor& ff, double B);

/// gamma(B)/gamma for B << Lambda:
/// (1/2) [(1 + B/omega0)^p + (1 - B/omega0)^p theta(omega0 - B)], p = 2j -+ 1.
double gamma_dipole_approx(const SystemParams& params, double B);

/// Pole from the boundary values of q at -i(omega0 +- B) + 0+.
PoleResult pole_perturbative(const SystemParams& params, const FormFactor& ff, double B);

struct NewtonOptions {
    int max_iterations{50};
    double residual_tol{1e-12};  // in units of omega0
    quad::Tolerance quadrature{1e-14, 1e-13, 8000};
};

/// Newton iteration on F(s) = s + i omega0 + Q(B, s) on the sheet fixed by B.
/// The seed defaults to the perturbative pole. Throws ConvergenceError when
/// the iteration stalls or leaves the disk |s + i omega0| < |B - omega0|.
PoleResult pole_newton(const SystemParams& params, const FormFactor& ff, double B,
                       std::optional<cplx> seed = std::nullopt,
                       const NewtonOptions& options = {});

/// |s + i omega0 + Q(B, s)| on the pole's sheet.
double pole_residual(const SystemParams& params, const FormFactor& ff, double B, cplx s,
                     const quad::Tolerance& tol = {1e-14, 1e-13, 8000});

} // namespace zeno
