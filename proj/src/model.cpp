#include "zeno/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "zeno/errors.hpp"

namespace zeno {
namespace {

template <class T>
T ipow(T base, int exponent) {
    T result(1.0);
    for (; exponent > 0; exponent >>= 1) {
        if (exponent & 1) result *= base;
        base *= base;
    }
    return result;
}

} // namespace

std::string to_string(TransitionKind kind) {
    return kind == TransitionKind::Electric ? "electric" : "magnetic";
}

TransitionKind parse_transition_kind(const std::string& text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "electric" || lower == "e") return TransitionKind::Electric;
    if (lower == "magnetic" || lower == "m") return TransitionKind::Magnetic;
    throw ConfigError("kind must be 'electric' or 'magnetic', got '" + text + "'");
}

int low_frequency_exponent(int j, TransitionKind kind) {
    return kind == TransitionKind::Electric ? 2 * j - 1 : 2 * j + 1;
}

cplx chi2(const FormFactor& ff, cplx omega) {
    const cplx u = omega / ff.lambda_cutoff;
    const cplx denom = 1.0 + u * u;
    if (std::abs(denom) < 1e-14) {
        throw SingularityError("chi2 evaluated at its pole omega = +-i*Lambda");
    }
    return ipow(u, ff.p) / ipow(denom, ff.n);
}

double chi2(const FormFactor& ff, double omega) {
    const double u = omega / ff.lambda_cutoff;
    return ipow(u, ff.p) / ipow(1.0 + u * u, ff.n);
}

cplx chi2_derivative(const FormFactor& ff, cplx omega) {
    const cplx u = omega / ff.lambda_cutoff;
    const cplx denom = 1.0 + u * u;
    if (std::abs(denom) < 1e-14) {
        throw SingularityError("chi2' evaluated at its pole omega = +-i*Lambda");
    }
    const cplx up = ipow(u, ff.p - 1);
    return up * (static_cast<double>(ff.p) * denom - 2.0 * ff.n * u * u) /
           (ipow(denom, ff.n + 1) * ff.lambda_cutoff);
}

std::vector<std::string> SystemParams::validate() const {
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw ConfigError("omega0 must be positive");
    if (!(lambda_cutoff > 0.0) || !std::isfinite(lambda_cutoff))
        throw ConfigError("lambda must be positive");
    if (j < 1) throw ConfigError("j must be a positive integer");
    if (!(beta > 1.0)) throw ConfigError("beta must exceed 1");
    if (!(g2 > 0.0) || !std::isfinite(g2)) throw ConfigError("g2 must be positive");

    std::vector<std::string> warnings;
    if (g2 >= 0.05) warnings.push_back("g2 >= 0.05: outside the perturbative regime");
    if (lambda_cutoff <= omega0) warnings.push_back("lambda <= omega0: cutoff below the transition");
    return warnings;
}

FormFactor SystemParams::form_factor() const {
    validate();
    const int p = low_frequency_exponent(j, kind);
    const double half = 0.5 * (p + beta);
    const double n = std::round(half);
    if (std::abs(half - n) > 1e-12) {
        throw ConfigError("beta must have the parity of 2j-+1 (p = " + std::to_string(p) +
                          ") so that (p + beta)/2 is an integer");
    }
    return FormFactor{p, static_cast<int>(n), lambda_cutoff};
}

double coupling_g2(const SystemParams& params, double alpha) {
    if (!(params.omega0 > 0.0) || !(params.lambda_cutoff > 0.0)) {
        throw ConfigError("coupling_g2 needs positive omega0 and lambda");
    }
    if (params.j < 1) throw ConfigError("j must be a positive integer");
    const int exponent =
        params.kind == TransitionKind::Electric ? 2 * params.j : 2 * params.j + 2;
    return alpha * std::pow(params.omega0 / params.lambda_cutoff, exponent);
}

double laser_strength_B(const LaserSpec& spec) {
    if (spec.omega_laser < 0.0 || spec.n0 < 0.0 || spec.dipole_sq < 0.0 || spec.alpha_fs < 0.0) {
        throw ConfigError("laser parameters must be nonnegative");
    }
    return std::sqrt(2.0 * std::numbers::pi * spec.alpha_fs * spec.omega_laser *
                     spec.dipole_sq * spec.n0);
}

} // namespace zeno
