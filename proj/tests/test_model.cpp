#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zeno/errors.hpp"
#include "zeno/model.hpp"

using namespace zeno;

namespace {
const FormFactor kDefaultFF{1, 2, 10.0};
}

TEST_CASE("chi2 reference values") {
    CHECK(chi2(kDefaultFF, 0.0) == 0.0);
    CHECK(chi2(kDefaultFF, 10.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(chi2(kDefaultFF, 1.0) == doctest::Approx(0.1 / (1.01 * 1.01)).epsilon(1e-15));
    CHECK(chi2(kDefaultFF, 1.0) == doctest::Approx(0.0980296).epsilon(1e-6));
}

TEST_CASE("chi2 continues analytically off the real axis") {
    for (double w : {0.3, 1.0, 7.5, 42.0}) {
        CHECK(std::abs(chi2(kDefaultFF, cplx(w)) - chi2(kDefaultFF, w)) < 1e-16);
    }
    CHECK_THROWS_AS(chi2(kDefaultFF, cplx(0.0, 10.0)), SingularityError);
    CHECK_THROWS_AS(chi2(kDefaultFF, cplx(0.0, -10.0)), SingularityError);
    CHECK_THROWS_AS(chi2_derivative(kDefaultFF, cplx(0.0, 10.0)), SingularityError);
}

TEST_CASE("chi2 derivative matches central differences") {
    for (const FormFactor& ff : {kDefaultFF, FormFactor{3, 3, 10.0}, FormFactor{5, 4, 3.0}}) {
        for (cplx z : {cplx(0.7, 0.0), cplx(2.0, -0.3), cplx(-1.0, 4.0), cplx(0.0, 0.5)}) {
            const double h = 1e-5;
            const cplx fd = (chi2(ff, z + h) - chi2(ff, z - h)) / (2.0 * h);
            CHECK(std::abs(chi2_derivative(ff, z) - fd) < 1e-8 * (1.0 + std::abs(fd)));
        }
    }
}

TEST_CASE("chi2 is nonnegative and unimodal on the positive axis") {
    for (const FormFactor& ff : {kDefaultFF, FormFactor{3, 3, 10.0}, FormFactor{3, 4, 5.0}}) {
        int direction_changes = 0;
        double prev = chi2(ff, 0.0);
        bool rising = true;
        for (int i = 1; i <= 20000; ++i) {
            const double w = 1e-3 * i * ff.lambda_cutoff;
            const double v = chi2(ff, w);
            REQUIRE(v >= 0.0);
            const bool up = v > prev;
            if (up != rising) {
                ++direction_changes;
                rising = up;
            }
            prev = v;
        }
        CHECK(direction_changes == 1);
    }
}

TEST_CASE("chi2 asymptotic log-log slopes") {
    for (const FormFactor& ff : {kDefaultFF, FormFactor{3, 3, 10.0}, FormFactor{3, 4, 10.0}}) {
        const double L = ff.lambda_cutoff;
        auto f = [&](double w) { return chi2(ff, w); };
        const double low = oracle::loglog_slope(f, 1e-4 * L, 1e-3 * L);
        const double high = oracle::loglog_slope(f, 1e3 * L, 1e4 * L);
        CHECK(std::abs(low - ff.p) < 0.01 * ff.p);
        CHECK(std::abs(high + ff.beta()) < 0.01 * ff.beta());
    }
}

TEST_CASE("form factor exponents from the transition") {
    SystemParams p;
    CHECK(p.form_factor().p == 1);
    CHECK(p.form_factor().n == 2);
    p.j = 2;
    p.beta = 3.0;
    CHECK(p.form_factor().p == 3);
    CHECK(p.form_factor().n == 3);
    p.kind = TransitionKind::Magnetic;
    p.j = 1;
    CHECK(p.form_factor().p == 3);
    p.beta = 4.0;  // wrong parity
    CHECK_THROWS_AS(p.form_factor(), ConfigError);
    p.beta = 1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("validate warns on soft violations") {
    SystemParams p;
    CHECK(p.validate().empty());
    p.g2 = 0.1;
    p.lambda_cutoff = 0.5;
    CHECK(p.validate().size() == 2);
    p.omega0 = -1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("coupling_g2") {
    const double alpha = 1.0 / 137.036;
    SystemParams p;
    p.lambda_cutoff = 10.0;
    CHECK(coupling_g2(p, alpha) == doctest::Approx(alpha * 0.01).epsilon(1e-14));
    CHECK(coupling_g2(p, alpha) == doctest::Approx(7.2974e-5).epsilon(1e-4));
    p.j = 2;
    CHECK(coupling_g2(p, alpha) == doctest::Approx(alpha * 1e-4).epsilon(1e-14));

    SystemParams m;
    m.kind = TransitionKind::Magnetic;
    m.lambda_cutoff = m.omega0;
    CHECK(coupling_g2(m, alpha) == alpha);

    // Doubling both scales leaves g2 alone.
    for (int j = 1; j <= 3; ++j) {
        SystemParams a;
        a.j = j;
        a.omega0 = 0.7;
        a.lambda_cutoff = 9.0;
        SystemParams b = a;
        b.omega0 *= 2.0;
        b.lambda_cutoff *= 2.0;
        CHECK(coupling_g2(a) == doctest::Approx(coupling_g2(b)).epsilon(1e-14));
    }
}

TEST_CASE("laser strength B") {
    LaserSpec spec;
    spec.omega_laser = 1.0;
    spec.dipole_sq = 1.0;
    spec.alpha_fs = 1.0 / 137.036;
    spec.n0 = 0.0;
    CHECK(laser_strength_B(spec) == 0.0);
    spec.n0 = 1.0;
    CHECK(laser_strength_B(spec) == doctest::Approx(0.21415).epsilon(1e-4));
    const double b1 = laser_strength_B(spec);
    spec.n0 = 4.0;
    CHECK(laser_strength_B(spec) == doctest::Approx(2.0 * b1).epsilon(1e-15));

    // B^2 linear in n0.
    spec.n0 = 1.0;
    const double slope = laser_strength_B(spec) * laser_strength_B(spec);
    for (double n0 : {1e-6, 0.37, 3.0, 250.0, 1e9}) {
        spec.n0 = n0;
        const double b = laser_strength_B(spec);
        CHECK(std::abs(b * b - slope * n0) <= 1e-12 * slope * n0);
    }
    spec.n0 = -1.0;
    CHECK_THROWS_AS(laser_strength_B(spec), ConfigError);
}

TEST_CASE("theta convention") {
    CHECK(step(0.0) == 0.5);
    CHECK(step(1e-300) == 1.0);
    CHECK(step(-1e-300) == 0.0);
}
