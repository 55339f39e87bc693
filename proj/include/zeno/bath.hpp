// bath.hpp: brute-force check of the decay rates. The photon continuum is
// replaced by N modes on a uniform midpoint grid and the one-excitation
// sector
//
//   i x'   = omega0 x   + sum_n phi_n y_n
//   i y_n' = omega_n y_n + phi_n x + B z_n
//   i z_n' = omega_n z_n + B y_n
//
// is integrated with fixed-step RK4 from x = 1, y = z = 0.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zeno/model.hpp"

namespace zeno::bath {

struct BathDiscretization {
    std::vector<double> omegas;     // (n - 1/2) d_omega, n = 1..N
    std::vector<double> couplings;  // sqrt(g2 omega0 chi2(omega_n) d_omega)
    double B{0.0};
    double omega0{1.0};
    double d_omega{0.0};
    double omega_max{0.0};

    std::size_t size() const { return omegas.size(); }
    /// 2 pi / d_omega; the discrete bath stops imitating a continuum here.
    double recurrence_time() const;
};

/// Smallest band edge accepted by discretize: the dressed resonance
/// omega0 + B plus a margin of 0.1 omega0.
double minimum_omega_max(double omega0, double B);

/// Band edge for a run up to t_final with N modes: the full band
/// max(5 Lambda, omega0 + 3B), shrunk so that t_final stays below
/// recurrence_fraction of the recurrence time.
double recommended_omega_max(const SystemParams& params, double B, std::size_t N, double t_final,
                             double recurrence_fraction = 0.9);

BathDiscretization discretize(const SystemParams& params, const FormFactor& ff, double B,
                              std::size_t N, double omega_max);

/// Amplitudes of the sector, laid out as [x, y_1..y_N, z_1..z_N] and split
/// into real and imaginary parts.
struct SectorState {
    std::vector<double> re;
    std::vector<double> im;

    static SectorState excited(std::size_t modes);
    double survival() const { return re[0] * re[0] + im[0] * im[0]; }
    double norm_squared() const;
};

/// RK4 stepper for the sector equations in a frame rotating at `frame`
/// (a global phase; populations do not depend on it).
class SectorPropagator {
public:
    SectorPropagator(const BathDiscretization& bath, double frame);

    void step(SectorState& state, double dt);
    std::size_t modes() const { return omegas_.size(); }

private:
    void apply_hamiltonian(std::span<const double> in, std::span<double> out) const;
    void derivative(const SectorState& s, SectorState& ds) const;

    std::vector<double> omegas_;  // shifted by -frame
    std::vector<double> couplings_;
    double x_energy_;
    double B_;
    SectorState k1_, k2_, k3_, k4_, tmp_;
};

struct SurvivalTrace {
    std::vector<double> times;
    std::vector<double> p_survival;  // |x(t)|^2
    std::vector<double> norm_drift;  // | ||psi||^2 - 1 |
    double fitted_gamma{0.0};
    std::pair<double, double> fit_window{0.0, 0.0};
    double short_time_cutoff{0.0};   // 10 / omega_max; excluded from fits
    double recurrence_time{0.0};     // 0 = no recurrence guard

    double max_norm_drift() const;
};

struct EvolveOptions {
    std::size_t record_every{0};  // 0 = about 4000 records
    bool rotating_frame{true};    // rotate at omega0
    double abort_drift{1e-6};
};

/// Throws ConfigError for dt > 0.1 / omega_max and NumericError when the
/// norm drifts by more than options.abort_drift.
SurvivalTrace evolve(const BathDiscretization& bath, double t_final, double dt,
                     const EvolveOptions& options = {});

struct DecayFit {
    double gamma{0.0};
    double t_lo{0.0};
    double t_hi{0.0};
    std::size_t points{0};
};

/// Least-squares slope of -ln p over [0.5/gamma_hint, 2.5/gamma_hint],
/// skipping t < short_time_cutoff.
DecayFit fit_decay(const SurvivalTrace& trace, double gamma_hint);
double fit_decay_rate(const SurvivalTrace& trace, double gamma_hint);

struct OracleSettings {
    std::size_t modes{2000};
    double dt_factor{0.05};           // dt = dt_factor / omega_max
    double duration_factor{3.0};      // t_final = duration_factor / gamma(B)
    double recurrence_fraction{0.9};
    double tolerance{0.05};
    bool parallel{true};
    // Overrides of the automatic choices above.
    std::optional<double> omega_max;
    std::optional<double> t_final;
    std::optional<double> dt;
};

struct RateComparison {
    double B{0.0};
    double gamma_formula{0.0};
    double gamma_oracle{0.0};
    double rel_dev{0.0};
    bool pass{false};
    bool trustworthy{true};  // |B - omega0| > g2 omega0
    double omega_max{0.0};
    double max_norm_drift{0.0};
};

struct ComparisonReport {
    std::vector<RateComparison> rows;
    bool pass{false};
};

/// One oracle run per B; rows keep the order of B_list.
ComparisonReport compare_rates(const SystemParams& params, const FormFactor& ff,
                               std::span<const double> B_list, const OracleSettings& settings = {});

} // namespace zeno::bath
