#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "zeno/bath.hpp"
#include "zeno/errors.hpp"
#include "zeno/poles.hpp"
#include "zeno/quadrature.hpp"

using namespace zeno;
using namespace zeno::bath;

namespace {
const FormFactor kFF{1, 2, 10.0};

double coupling_integral(const SystemParams& p, double omega_max) {
    auto f = [&](double w) { return p.g2 * p.omega0 * chi2(kFF, w); };
    return quad::integrate(f, 0.0, omega_max).value.real();
}

double sum_sq(const std::vector<double>& c) {
    double s = 0.0;
    for (double x : c) s += x * x;
    return s;
}

// Exponential trace with optional ripple, shaped like an evolve() result.
SurvivalTrace synthetic(double gamma, double t_final, double ripple) {
    SurvivalTrace tr;
    const int n = 4001;
    for (int i = 0; i < n; ++i) {
        const double t = t_final * i / (n - 1);
        tr.times.push_back(t);
        tr.p_survival.push_back(std::exp(-gamma * t) * (1.0 + ripple * std::cos(40.0 * gamma * t)));
        tr.norm_drift.push_back(0.0);
    }
    tr.short_time_cutoff = 0.0;
    return tr;
}
}

TEST_CASE("discretization") {
    SystemParams p;
    for (auto [N, tol] : {std::pair<std::size_t, double>{100, 1e-2}, {4000, 1e-3}}) {
        const BathDiscretization b = discretize(p, kFF, 0.0, N, 50.0);
        CHECK(b.size() == N);
        CHECK(b.omegas.front() == doctest::Approx(b.d_omega / 2).epsilon(1e-14));
        CHECK(b.d_omega == doctest::Approx(50.0 / N).epsilon(1e-14));
        CHECK(sum_sq(b.couplings) == doctest::Approx(coupling_integral(p, 50.0)).epsilon(tol));
        CHECK(b.recurrence_time() == doctest::Approx(2 * std::numbers::pi / b.d_omega));
    }
    const BathDiscretization b0 = discretize(p, kFF, 0.0, 500, 20.0);
    const BathDiscretization b1 = discretize(p, kFF, 3.0, 500, 20.0);
    CHECK(b0.couplings == b1.couplings);
    CHECK(b0.omegas == b1.omegas);

    CHECK_THROWS_AS(discretize(p, kFF, 0.0, 99, 50.0), ConfigError);
    CHECK_THROWS_AS(discretize(p, kFF, 2.0, 500, 3.0), ConfigError);
    CHECK_THROWS_AS(discretize(p, kFF, -1.0, 500, 50.0), ConfigError);
    CHECK(minimum_omega_max(1.0, 2.0) == doctest::Approx(3.1));
}

TEST_CASE("recommended band edge") {
    SystemParams p;
    CHECK(recommended_omega_max(p, 0.0, 100000, 100.0) == doctest::Approx(50.0));
    CHECK(recommended_omega_max(p, 30.0, 100000, 100.0) == doctest::Approx(91.0));
    const double shrunk = recommended_omega_max(p, 0.0, 2000, 3.0 / 6.1594e-4);
    CHECK(shrunk < 50.0);
    const BathDiscretization b = discretize(p, kFF, 0.0, 2000, shrunk);
    CHECK(3.0 / 6.1594e-4 <= 0.9 * b.recurrence_time() * (1 + 1e-12));
}

TEST_CASE("evolution basics") {
    SystemParams p;
    p.g2 = 1e-2;
    const BathDiscretization b = discretize(p, kFF, 0.5, 200, 20.0);
    const SurvivalTrace tr = evolve(b, 20.0, 0.05 / 20.0);
    CHECK(tr.times.front() == 0.0);
    CHECK(tr.p_survival.front() == 1.0);
    CHECK(tr.max_norm_drift() < 1e-8);
    CHECK(tr.times.back() == doctest::Approx(20.0));
    for (double v : tr.p_survival) CHECK(v <= 1.0 + 1e-8);

    SystemParams silent = p;
    silent.g2 = 0.0;
    const BathDiscretization quiet = discretize(silent, kFF, 0.5, 200, 20.0);
    const SurvivalTrace flat = evolve(quiet, 5.0, 1e-3);
    for (double v : flat.p_survival) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evolution is reversible") {
    SystemParams p;
    p.g2 = 1e-2;
    const BathDiscretization b = discretize(p, kFF, 0.7, 150, 15.0);
    SectorPropagator prop(b, p.omega0);
    SectorState s = SectorState::excited(b.size());
    const SectorState start = s;
    const double dt = 2e-3;
    for (int i = 0; i < 2000; ++i) prop.step(s, dt);
    CHECK(s.survival() < 1.0);
    for (int i = 0; i < 2000; ++i) prop.step(s, -dt);
    double dev = 0.0;
    for (std::size_t k = 0; k < s.re.size(); ++k) {
        dev = std::max(dev, std::hypot(s.re[k] - start.re[k], s.im[k] - start.im[k]));
    }
    CHECK(dev < 1e-6);
}

TEST_CASE("short-time decay is quadratic") {
    SystemParams p;
    const BathDiscretization b = discretize(p, kFF, 0.0, 2000, 50.0);
    EvolveOptions opt;
    opt.record_every = 1;
    const double dt = 1e-4;
    const SurvivalTrace tr = evolve(b, 2e-3, dt, opt);
    // 1 - p ~ t^2 well below 1/omega_max
    std::vector<double> lx, ly;
    for (std::size_t i = 1; i < tr.times.size(); ++i) {
        lx.push_back(std::log(tr.times[i]));
        ly.push_back(std::log(1.0 - tr.p_survival[i]));
    }
    const double n = lx.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("evolve guards") {
    SystemParams p;
    const BathDiscretization b = discretize(p, kFF, 0.0, 200, 20.0);
    CHECK_THROWS_AS(evolve(b, 1.0, 0.2 / 20.0), ConfigError);
    EvolveOptions strict;
    strict.abort_drift = 1e-30;
    CHECK_THROWS_AS(evolve(b, 1.0, 0.09 / 20.0, strict), NumericError);
}

TEST_CASE("decay fit") {
    const double gamma = 0.01;
    const SurvivalTrace clean = synthetic(gamma, 3.0 / gamma, 0.0);
    const DecayFit f = fit_decay(clean, gamma);
    CHECK(f.gamma == doctest::Approx(gamma).epsilon(1e-9));
    CHECK(f.t_lo == doctest::Approx(0.5 / gamma).epsilon(1e-3));
    CHECK(f.t_hi == doctest::Approx(2.5 / gamma).epsilon(1e-3));
    CHECK(f.points > 100);

    const SurvivalTrace wavy = synthetic(gamma, 3.0 / gamma, 0.005);
    CHECK(fit_decay_rate(wavy, gamma) == doctest::Approx(gamma).epsilon(0.01));
    // A 20% wrong hint only moves the window.
    CHECK(fit_decay_rate(clean, 1.2 * gamma) == doctest::Approx(gamma).epsilon(1e-9));

    CHECK_THROWS_AS(fit_decay(synthetic(gamma, 2.0 / gamma, 0.0), gamma), FitError);
    CHECK_THROWS_AS(fit_decay(synthetic(-gamma, 3.0 / gamma, 0.0), gamma), FitError);
    SurvivalTrace guarded = clean;
    guarded.recurrence_time = 2.0 / gamma;
    CHECK_THROWS_AS(fit_decay(guarded, gamma), FitError);
}

TEST_CASE("slow: oracle reproduces the golden rule") {
    SystemParams p;
    const double gamma = fermi_golden_rule(p, kFF).gamma;
    const double B0[] = {0.0};
    OracleSettings s;
    const ComparisonReport r = compare_rates(p, kFF, B0, s);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].gamma_formula == doctest::Approx(gamma).epsilon(1e-14));
    CHECK(r.rows[0].rel_dev < 0.05);
    CHECK(r.pass);

    OracleSettings doubled = s;
    doubled.modes *= 2;
    const ComparisonReport r2 = compare_rates(p, kFF, B0, doubled);
    CHECK(std::abs(r2.rows[0].gamma_oracle - r.rows[0].gamma_oracle) / r.rows[0].gamma_oracle < 0.02);
}
