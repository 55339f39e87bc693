// quadrature.hpp: globally adaptive Gauss-Kronrod (7/15) integration of
// complex-valued integrands on finite and semi-infinite intervals.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "zeno/errors.hpp"

namespace zeno::quad {

struct Tolerance {
    double abs{1e-10};
    double rel{1e-9};
    int max_intervals{4000};

    Tolerance halved() const { return {abs / 2.0, rel / 2.0, max_intervals}; }
};

struct Result {
    std::complex<double> value{};
    double error{0.0};
    int evaluations{0};

    Result& operator+=(const Result& other) {
        value += other.value;
        error += other.error;
        evaluations += other.evaluations;
        return *this;
    }
};

namespace detail {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    std::complex<double> value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const std::complex<double> fc = f(center);
    std::complex<double> kronrod = kWgk[7] * fc;
    std::complex<double> gauss = kWg[3] * fc;
    for (int k = 0; k < 7; ++k) {
        const double dx = half * kXgk[k];
        const std::complex<double> pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[k] * pair;
        if (k % 2 == 1) gauss += kWg[k / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Integral of f over [a, b]. Throws QuadratureError when the tolerance is
/// not reached within tol.max_intervals panels.
template <class F>
Result integrate(const F& f, double a, double b, const Tolerance& tol = {}) {
    Result out;
    if (a == b) return out;
    std::priority_queue<detail::Panel> panels;
    detail::Panel first = detail::gk15(f, a, b);
    std::complex<double> total = first.value;
    double total_error = first.error;
    panels.push(first);
    int evaluations = 15;

    while (total_error > std::max(tol.abs, tol.rel * std::abs(total))) {
        if (static_cast<int>(panels.size()) >= tol.max_intervals) {
            std::ostringstream msg;
            msg << "adaptive quadrature on [" << a << ", " << b << "] reached "
                << tol.max_intervals << " panels with error " << total_error;
            throw QuadratureError(msg.str(), total_error,
                                  std::max(tol.abs, tol.rel * std::abs(total)));
        }
        const detail::Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Panel width at machine resolution; keep what we have.
            panels.push(worst);
            break;
        }
        const detail::Panel left = detail::gk15(f, worst.a, mid);
        const detail::Panel right = detail::gk15(f, mid, worst.b);
        evaluations += 30;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed the drift of the running updates.
    total = 0.0;
    total_error = 0.0;
    while (!panels.empty()) {
        total += panels.top().value;
        total_error += panels.top().error;
        panels.pop();
    }
    out.value = total;
    out.error = total_error;
    out.evaluations = evaluations;
    return out;
}

/// Integral of f over [a, inf) through the map w = a + scale * t / (1 - t).
template <class F>
Result integrate_to_infinity(const F& f, double a, double scale, const Tolerance& tol = {}) {
    auto mapped = [&](double t) -> std::complex<double> {
        const double one_minus = 1.0 - t;
        const double w = a + scale * t / one_minus;
        return f(w) * (scale / (one_minus * one_minus));
    };
    return integrate(mapped, 0.0, 1.0, tol);
}

} // namespace zeno::quad
