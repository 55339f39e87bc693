#include "zeno/bath.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

#include "zeno/errors.hpp"
#include "zeno/poles.hpp"

namespace zeno::bath {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void axpy(const SectorState& base, double h, const SectorState& k, SectorState& out) {
    const std::size_t n = base.re.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.re[i] = base.re[i] + h * k.re[i];
        out.im[i] = base.im[i] + h * k.im[i];
    }
}

} // namespace

double BathDiscretization::recurrence_time() const { return kTwoPi / d_omega; }

double minimum_omega_max(double omega0, double B) { return omega0 + std::abs(B) + 0.1 * omega0; }

double recommended_omega_max(const SystemParams& params, double B, std::size_t N, double t_final,
                             double recurrence_fraction) {
    const double full = std::max(5.0 * params.lambda_cutoff, params.omega0 + 3.0 * std::abs(B));
    const double guard = recurrence_fraction * static_cast<double>(N) * kTwoPi / t_final;
    return std::min(full, guard);
}

BathDiscretization discretize(const SystemParams& params, const FormFactor& ff, double B,
                              std::size_t N, double omega_max) {
    if (N < 100) throw ConfigError("discretize: need at least 100 modes");
    if (!(B >= 0.0)) throw ConfigError("discretize: B must be nonnegative");
    if (!(omega_max >= minimum_omega_max(params.omega0, B))) {
        std::ostringstream msg;
        msg << "discretize: omega_max = " << omega_max << " does not contain the dressed "
            << "resonance omega0 + B = " << params.omega0 + B << " (need >= "
            << minimum_omega_max(params.omega0, B) << ")";
        throw ConfigError(msg.str());
    }
    BathDiscretization bath;
    bath.B = B;
    bath.omega0 = params.omega0;
    bath.omega_max = omega_max;
    bath.d_omega = omega_max / static_cast<double>(N);
    bath.omegas.resize(N);
    bath.couplings.resize(N);
    for (std::size_t n = 0; n < N; ++n) {
        const double w = (static_cast<double>(n) + 0.5) * bath.d_omega;
        bath.omegas[n] = w;
        bath.couplings[n] = std::sqrt(params.g2 * params.omega0 * chi2(ff, w) * bath.d_omega);
    }
    return bath;
}

SectorState SectorState::excited(std::size_t modes) {
    SectorState s;
    s.re.assign(2 * modes + 1, 0.0);
    s.im.assign(2 * modes + 1, 0.0);
    s.re[0] = 1.0;
    return s;
}

double SectorState::norm_squared() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < re.size(); ++i) sum += re[i] * re[i] + im[i] * im[i];
    return sum;
}

SectorPropagator::SectorPropagator(const BathDiscretization& bath, double frame)
    : omegas_(bath.omegas),
      couplings_(bath.couplings),
      x_energy_(bath.omega0 - frame),
      B_(bath.B) {
    for (double& w : omegas_) w -= frame;
    const std::size_t modes = omegas_.size();
    for (SectorState* s : {&k1_, &k2_, &k3_, &k4_, &tmp_}) *s = SectorState::excited(modes);
}

void SectorPropagator::apply_hamiltonian(std::span<const double> in, std::span<double> out) const {
    const std::size_t n = omegas_.size();
    const double x = in[0];
    const double* y = in.data() + 1;
    const double* z = in.data() + 1 + n;
    double* hy = out.data() + 1;
    double* hz = out.data() + 1 + n;
    double hx = x_energy_ * x;
    for (std::size_t k = 0; k < n; ++k) {
        hx += couplings_[k] * y[k];
        hy[k] = omegas_[k] * y[k] + couplings_[k] * x + B_ * z[k];
        hz[k] = omegas_[k] * z[k] + B_ * y[k];
    }
    out[0] = hx;
}

void SectorPropagator::derivative(const SectorState& s, SectorState& ds) const {
    // psi = u + i v, H real: u' = H v, v' = -H u.
    apply_hamiltonian(s.im, ds.re);
    apply_hamiltonian(s.re, ds.im);
    for (double& v : ds.im) v = -v;
}

void SectorPropagator::step(SectorState& state, double dt) {
    derivative(state, k1_);
    axpy(state, 0.5 * dt, k1_, tmp_);
    derivative(tmp_, k2_);
    axpy(state, 0.5 * dt, k2_, tmp_);
    derivative(tmp_, k3_);
    axpy(state, dt, k3_, tmp_);
    derivative(tmp_, k4_);
    const double h6 = dt / 6.0;
    const std::size_t n = state.re.size();
    for (std::size_t i = 0; i < n; ++i) {
        state.re[i] += h6 * (k1_.re[i] + 2.0 * (k2_.re[i] + k3_.re[i]) + k4_.re[i]);
        state.im[i] += h6 * (k1_.im[i] + 2.0 * (k2_.im[i] + k3_.im[i]) + k4_.im[i]);
    }
}

double SurvivalTrace::max_norm_drift() const {
    double m = 0.0;
    for (double d : norm_drift) m = std::max(m, d);
    return m;
}

SurvivalTrace evolve(const BathDiscretization& bath, double t_final, double dt,
                     const EvolveOptions& options) {
    if (!(dt > 0.0)) throw ConfigError("evolve: dt must be positive");
    if (!(t_final >= 0.0)) throw ConfigError("evolve: t_final must be nonnegative");
    if (dt > 0.1 / bath.omega_max * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "evolve: dt = " << dt << " exceeds the stability limit 0.1/omega_max = "
            << 0.1 / bath.omega_max;
        throw ConfigError(msg.str());
    }

    const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt * (1.0 - 1e-12)));
    const std::size_t every =
        options.record_every > 0 ? options.record_every : std::max<std::size_t>(1, steps / 4000);

    SectorPropagator propagator(bath, options.rotating_frame ? bath.omega0 : 0.0);
    SectorState state = SectorState::excited(bath.size());

    SurvivalTrace trace;
    trace.short_time_cutoff = 10.0 / bath.omega_max;
    trace.recurrence_time = bath.recurrence_time();
    auto record = [&](std::size_t i) {
        const double drift = std::abs(state.norm_squared() - 1.0);
        trace.times.push_back(static_cast<double>(i) * dt);
        trace.p_survival.push_back(state.survival());
        trace.norm_drift.push_back(drift);
        if (drift > options.abort_drift) {
            std::ostringstream msg;
            msg << "evolve: norm drift " << drift << " at t = " << static_cast<double>(i) * dt
                << " exceeds " << options.abort_drift << "; reduce dt";
            throw NumericError(msg.str());
        }
    };

    record(0);
    for (std::size_t i = 1; i <= steps; ++i) {
        propagator.step(state, dt);
        if (i % every == 0 || i == steps) record(i);
    }
    return trace;
}

DecayFit fit_decay(const SurvivalTrace& trace, double gamma_hint) {
    if (!(gamma_hint > 0.0)) throw FitError("fit_decay: gamma_hint must be positive");
    if (trace.times.empty() || trace.times.back() < 3.0 / gamma_hint * (1.0 - 1e-9)) {
        throw FitError("fit_decay: trace shorter than 3/gamma_hint");
    }
    DecayFit fit;
    fit.t_lo = std::max(0.5 / gamma_hint, trace.short_time_cutoff);
    fit.t_hi = 2.5 / gamma_hint;
    if (trace.recurrence_time > 0.0 && fit.t_hi >= trace.recurrence_time) {
        throw FitError("fit_decay: fit window reaches the recurrence time of the bath");
    }

    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        const double t = trace.times[i];
        if (t < fit.t_lo || t > fit.t_hi) continue;
        const double p = trace.p_survival[i];
        if (!(p > 0.0)) throw FitError("fit_decay: nonpositive survival probability in window");
        const double y = -std::log(p);
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
        ++count;
    }
    if (count < 2) throw FitError("fit_decay: fewer than two samples in the fit window");
    const double n = static_cast<double>(count);
    const double denom = n * stt - st * st;
    if (!(denom > 0.0)) throw FitError("fit_decay: degenerate fit window");
    fit.gamma = (n * sty - st * sy) / denom;
    fit.points = count;
    if (!(fit.gamma > 0.0)) throw FitError("fit_decay: no decay (nonpositive slope)");
    return fit;
}

double fit_decay_rate(const SurvivalTrace& trace, double gamma_hint) {
    return fit_decay(trace, gamma_hint).gamma;
}

namespace {

RateComparison run_one(const SystemParams& params, const FormFactor& ff, double B,
                       const OracleSettings& settings) {
    RateComparison row;
    row.B = B;
    row.gamma_formula = gamma_of_B(params, ff, B);
    row.trustworthy = std::abs(B - params.omega0) > params.g2 * params.omega0;

    const double t_final = settings.t_final.value_or(settings.duration_factor / row.gamma_formula);
    const double omega_max = settings.omega_max.value_or(recommended_omega_max(
        params, B, settings.modes, t_final, settings.recurrence_fraction));
    const BathDiscretization bath = discretize(params, ff, B, settings.modes, omega_max);
    if (!(t_final < bath.recurrence_time())) {
        throw ConfigError("compare_rates: run length exceeds the recurrence time 2 pi/d_omega");
    }
    const SurvivalTrace trace = evolve(bath, t_final, settings.dt.value_or(settings.dt_factor / omega_max));

    row.omega_max = omega_max;
    row.max_norm_drift = trace.max_norm_drift();
    row.gamma_oracle = fit_decay_rate(trace, row.gamma_formula);
    row.rel_dev = std::abs(row.gamma_oracle - row.gamma_formula) / row.gamma_formula;
    row.pass = row.rel_dev < settings.tolerance;
    return row;
}

} // namespace

ComparisonReport compare_rates(const SystemParams& params, const FormFactor& ff,
                               std::span<const double> B_list, const OracleSettings& settings) {
    ComparisonReport report;
    if (settings.parallel) {
        std::vector<std::future<RateComparison>> jobs;
        for (double B : B_list) {
            jobs.push_back(std::async(std::launch::async, run_one, std::cref(params),
                                      std::cref(ff), B, std::cref(settings)));
        }
        for (auto& job : jobs) report.rows.push_back(job.get());
    } else {
        for (double B : B_list) report.rows.push_back(run_one(params, ff, B, settings));
    }
    report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const RateComparison& r) { return r.pass; });
    return report;
}

} // namespace zeno::bath
