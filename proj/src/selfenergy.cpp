#include "zeno/selfenergy.hpp"

#include <cmath>
#include <numbers>

#include "zeno/errors.hpp"

namespace zeno {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

template <class F>
quad::Result cauchy_impl(const F& f, cplx w0, double scale, const quad::Tolerance& tol) {
    const double a = w0.real();
    auto kernel = [&](double w) { return f(cplx(w)) / (w - w0); };
    if (a <= 0.0) return quad::integrate_to_infinity(kernel, 0.0, scale, tol);
    if (w0.imag() == 0.0) {
        throw CutError("Cauchy transform evaluated on the positive real axis");
    }
    const cplx f0 = f(w0);
    auto subtracted = [&](double w) { return (f(cplx(w)) - f0) / (w - w0); };
    quad::Result r = quad::integrate(subtracted, 0.0, a, tol);
    r += quad::integrate(subtracted, a, 2.0 * a, tol);
    r += quad::integrate_to_infinity(kernel, 2.0 * a, scale, tol);
    // Int_0^{2a} dw/(w - w0); Im(w - w0) has a fixed sign along the path, so
    // the principal logarithm is continuous there.
    r.value += f0 * (std::log(2.0 * a - w0) - std::log(-w0));
    return r;
}

template <class F>
quad::Result principal_value_impl(const F& f, double eta, double scale,
                                  const quad::Tolerance& tol) {
    auto kernel = [&](double w) { return f(cplx(w)) / (w - eta); };
    if (eta <= 0.0) return quad::integrate_to_infinity(kernel, 0.0, scale, tol);
    const cplx f0 = f(cplx(eta));
    auto subtracted = [&](double w) { return (f(cplx(w)) - f0) / (w - eta); };
    quad::Result r = quad::integrate(subtracted, 0.0, eta, tol);
    r += quad::integrate(subtracted, eta, 2.0 * eta, tol);
    r += quad::integrate_to_infinity(kernel, 2.0 * eta, scale, tol);
    return r;
}

void check_not_branch_point(cplx s) {
    if (s == cplx(0.0)) throw SingularityError("q evaluated at its branch point s = 0");
}

} // namespace

std::string to_string(Sheet sheet) { return sheet == Sheet::First ? "I" : "II"; }

quad::Result cauchy_transform(const FormFactor& ff, cplx w0, const quad::Tolerance& tol) {
    return cauchy_impl([&](cplx w) { return chi2(ff, w); }, w0, ff.lambda_cutoff, tol);
}

quad::Result cauchy_transform_derivative(const FormFactor& ff, cplx w0,
                                         const quad::Tolerance& tol) {
    return cauchy_impl([&](cplx w) { return chi2_derivative(ff, w); }, w0, ff.lambda_cutoff,
                       tol);
}

quad::Result principal_value(const FormFactor& ff, double eta, const quad::Tolerance& tol) {
    return principal_value_impl([&](cplx w) { return chi2(ff, w); }, eta, ff.lambda_cutoff, tol);
}

bool on_cut(cplx s) { return s.real() == 0.0 && s.imag() <= 0.0; }

cplx q_first_sheet(const FormFactor& ff, cplx s, const quad::Tolerance& tol) {
    if (on_cut(s)) {
        throw CutError("q_first_sheet: s lies on the cut {Re s = 0, Im s <= 0}; use q_boundary");
    }
    return -kI * cauchy_transform(ff, kI * s, tol).value;
}

BoundaryValue q_boundary(const FormFactor& ff, double eta, const quad::Tolerance& tol) {
    if (!std::isfinite(eta)) throw NumericError("q_boundary: eta must be finite");
    BoundaryValue bv;
    bv.eta = eta;
    bv.re_part = eta > 0.0 ? kPi * chi2(ff, eta) * step(eta) : 0.0;
    const quad::Result pv = principal_value(ff, eta, tol);
    bv.im_part = -pv.value.real();
    bv.error = pv.error;
    return bv;
}

cplx q_second_sheet(const FormFactor& ff, cplx s, const quad::Tolerance& tol) {
    check_not_branch_point(s);
    if (on_cut(s)) return q_boundary(ff, -s.imag(), tol).value();
    return q_first_sheet(ff, s, tol) + 2.0 * kPi * chi2(ff, kI * s);
}

cplx q_on_sheet(const FormFactor& ff, cplx s, Sheet sheet, const quad::Tolerance& tol) {
    return sheet == Sheet::First ? q_first_sheet(ff, s, tol) : q_second_sheet(ff, s, tol);
}

cplx q_derivative(const FormFactor& ff, cplx s, Sheet sheet, const quad::Tolerance& tol) {
    // q'(s) = Int chi2'(w)/(w - i s) dw after integrating by parts (chi2(0) = 0).
    check_not_branch_point(s);
    if (on_cut(s)) {
        if (sheet == Sheet::First) throw CutError("q_derivative: first sheet on the cut");
        const double eta = -s.imag();
        const quad::Result pv = principal_value_impl(
            [&](cplx w) { return chi2_derivative(ff, w); }, eta, ff.lambda_cutoff, tol);
        return pv.value.real() + kI * kPi * chi2_derivative(ff, cplx(eta)).real();
    }
    cplx d = cauchy_transform_derivative(ff, kI * s, tol).value;
    if (sheet == Sheet::Continued) d += 2.0 * kPi * kI * chi2_derivative(ff, kI * s);
    return d;
}

cplx self_energy(const SystemParams& params, const FormFactor& ff, cplx s, Sheet sheet,
                 const quad::Tolerance& tol) {
    return params.g2 * params.omega0 * q_on_sheet(ff, s, sheet, tol);
}

namespace {

template <class Eval>
cplx dressed_combination(const SystemParams& params, double B, const SheetPoint& pt,
                         const Eval& eval) {
    B = std::abs(B);
    if (B == 0.0) {
        if (pt.sheet_upper != pt.sheet_lower) {
            throw ConfigError("SheetPoint: for B = 0 the two cuts coincide and the sheet tags "
                              "must agree");
        }
        return params.g2 * params.omega0 * eval(pt.s, pt.sheet_upper);
    }
    const cplx lower_arg = pt.s + cplx(0.0, B);  // cut from -iB downward
    const cplx upper_arg = pt.s - cplx(0.0, B);  // cut from +iB downward
    if (lower_arg == cplx(0.0) || upper_arg == cplx(0.0)) {
        throw SingularityError("Q(B, s) evaluated at a branch point s = -+iB");
    }
    return 0.5 * params.g2 * params.omega0 *
           (eval(lower_arg, pt.sheet_lower) + eval(upper_arg, pt.sheet_upper));
}

} // namespace

cplx dressed_self_energy(const SystemParams& params, const FormFactor& ff, double B,
                         const SheetPoint& pt, const quad::Tolerance& tol) {
    return dressed_combination(params, B, pt,
                               [&](cplx z, Sheet sh) { return q_on_sheet(ff, z, sh, tol); });
}

cplx dressed_self_energy_derivative(const SystemParams& params, const FormFactor& ff, double B,
                                    const SheetPoint& pt, const quad::Tolerance& tol) {
    return dressed_combination(params, B, pt,
                               [&](cplx z, Sheet sh) { return q_derivative(ff, z, sh, tol); });
}

} // namespace zeno
