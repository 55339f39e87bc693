#include "zeno/poles.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zeno/errors.hpp"

namespace zeno {
namespace {

constexpr double kPi = std::numbers::pi;

PoleResult from_pole(cplx s, const SystemParams& params, double B, PoleMethod method) {
    PoleResult r;
    r.s_pole = s;
    r.B = B;
    r.gamma = -2.0 * s.real();
    r.delta_E = s.imag() + params.omega0;
    r.lifetime = 1.0 / r.gamma;
    r.method = method;
    r.sheet_case = sheet_case_for(B, params.omega0);
    r.validity_margin = std::abs(B - params.omega0) / (params.g2 * params.omega0);
    return r;
}

} // namespace

std::string to_string(SheetCase c) {
    return c == SheetCase::CaseA_ThirdSheet ? "CaseA_ThirdSheet" : "CaseB_SecondSheet";
}

std::string to_string(PoleMethod m) {
    return m == PoleMethod::Perturbative ? "perturbative" : "newton";
}

SheetCase sheet_case_for(double B, double omega0) {
    return std::abs(B) < omega0 ? SheetCase::CaseA_ThirdSheet : SheetCase::CaseB_SecondSheet;
}

SheetPoint pole_sheet_point(cplx s, double B, double omega0) {
    // -i omega0 always lies on the upper cut; it lies on the lower cut only
    // when the branch point -iB is above it.
    const Sheet lower =
        sheet_case_for(B, omega0) == SheetCase::CaseA_ThirdSheet ? Sheet::Continued : Sheet::First;
    return SheetPoint{s, Sheet::Continued, lower};
}

PoleResult fermi_golden_rule(const SystemParams& params, const FormFactor& ff) {
    const double w0 = params.omega0;
    const double gamma = 2.0 * kPi * params.g2 * w0 * chi2(ff, w0);
    const double shift = params.g2 * w0 * principal_value(ff, w0).value.real();
    return from_pole(cplx(-0.5 * gamma, -w0 + shift), params, 0.0, PoleMethod::Perturbative);
}

double gamma_of_B(const SystemParams& params, const FormFactor& ff, double B) {
    if (!(B >= 0.0)) throw ConfigError("gamma_of_B: B must be nonnegative");
    const double w0 = params.omega0;
    const double gamma0 = 2.0 * kPi * params.g2 * w0 * chi2(ff, w0);
    const double lower = w0 - B;
    const double lower_term = lower >= 0.0 ? chi2(ff, lower) * step(lower) : 0.0;
    return 0.5 * gamma0 * (chi2(ff, w0 + B) + lower_term) / chi2(ff, w0);
}

double gamma_dipole_approx(const SystemParams& params, double B) {
    if (!(B >= 0.0)) throw ConfigError("gamma_dipole_approx: B must be nonnegative");
    const int p = low_frequency_exponent(params.j, params.kind);
    const double b = B / params.omega0;
    return 0.5 * (std::pow(1.0 + b, p) + std::pow(1.0 - b, p) * step(1.0 - b));
}

PoleResult pole_perturbative(const SystemParams& params, const FormFactor& ff, double B) {
    if (!(B >= 0.0)) throw ConfigError("pole_perturbative: B must be nonnegative");
    const double w0 = params.omega0;
    const cplx upper = q_boundary(ff, w0 + B).value();
    const cplx lower = B == 0.0 ? upper : q_boundary(ff, w0 - B).value();
    const cplx s = cplx(0.0, -w0) - 0.5 * params.g2 * w0 * (upper + lower);
    return from_pole(s, params, B, PoleMethod::Perturbative);
}

double pole_residual(const SystemParams& params, const FormFactor& ff, double B, cplx s,
                     const quad::Tolerance& tol) {
    const SheetPoint pt = pole_sheet_point(s, B, params.omega0);
    return std::abs(s + cplx(0.0, params.omega0) + dressed_self_energy(params, ff, B, pt, tol));
}

PoleResult pole_newton(const SystemParams& params, const FormFactor& ff, double B,
                       std::optional<cplx> seed, const NewtonOptions& options) {
    if (!(B >= 0.0)) throw ConfigError("pole_newton: B must be nonnegative");
    const double w0 = params.omega0;
    const cplx centre(0.0, -w0);
    // For B = 0 the disk is bounded by the branch point at the origin.
    const double radius = B == 0.0 ? w0 : std::abs(B - w0);

    cplx s = seed ? *seed : pole_perturbative(params, ff, B).s_pole;
    if (!(std::abs(s - centre) < radius)) {
        std::ostringstream msg;
        msg << "pole_newton: seed " << s << " outside the convergence disk of radius " << radius;
        throw ConvergenceError(msg.str());
    }

    auto F = [&](cplx z) {
        const SheetPoint pt = pole_sheet_point(z, B, w0);
        return z - centre + dressed_self_energy(params, ff, B, pt, options.quadrature);
    };

    cplx f = F(s);
    int it = 0;
    while (std::abs(f) >= options.residual_tol * w0) {
        if (it == options.max_iterations) {
            std::ostringstream msg;
            msg << "pole_newton: no convergence after " << it << " iterations, |F| = "
                << std::abs(f);
            throw ConvergenceError(msg.str());
        }
        const SheetPoint pt = pole_sheet_point(s, B, w0);
        const cplx df =
            1.0 + dressed_self_energy_derivative(params, ff, B, pt, options.quadrature);
        s -= f / df;
        ++it;
        if (!(std::abs(s - centre) < radius)) {
            std::ostringstream msg;
            msg << "pole_newton: iterate " << s << " left the convergence disk of radius "
                << radius;
            throw ConvergenceError(msg.str());
        }
        f = F(s);
    }

    PoleResult r = from_pole(s, params, B, PoleMethod::Newton);
    r.iterations = it;
    r.residual = std::abs(f);
    return r;
}

} // namespace zeno
