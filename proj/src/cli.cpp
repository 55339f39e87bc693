#include "zeno/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "zeno/bath.hpp"
#include "zeno/errors.hpp"
#include "zeno/poles.hpp"
#include "zeno/version.hpp"

namespace zeno::cli {
namespace {

const std::vector<double> kDefaultCompareB = {0.0, 0.5, 1.5};

std::string fmt(double v) { return format_double(v); }

void write_header(std::ostream& out, const RunConfig& run, const EffectiveConfig& cfg,
                  const std::vector<std::string>& options) {
    out << "# zeno " << kVersion << ' ' << to_string(run.command) << '\n';
    out << "# config begin\n";
    for (const auto& line : echo_lines(cfg)) out << "# " << line << '\n';
    out << "# config end\n";
    for (const auto& line : options) out << "# " << line << '\n';
}

double gamma0(const EffectiveConfig& cfg, const FormFactor& ff) {
    return gamma_of_B(cfg.params, ff, 0.0);
}

} // namespace

std::string to_string(Command command) {
    switch (command) {
    case Command::GammaCurve: return "gamma-curve";
    case Command::Pole: return "pole";
    case Command::Survival: return "survival";
    case Command::SelfEnergyTable: return "selfenergy-table";
    case Command::Compare: return "compare";
    }
    return "?";
}

Grid Grid::parse(const std::string& text) {
    Grid g;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':' ||
        !(in >> std::ws).eof()) {
        throw ConfigError("grid must be start:stop:count, got '" + text + "'");
    }
    if (g.count < 1) throw ConfigError("grid count must be at least 1");
    if (g.count > 1 && !(g.stop >= g.start)) throw ConfigError("grid stop must be >= start");
    return g;
}

std::vector<double> Grid::points() const {
    std::vector<double> pts(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        pts[static_cast<std::size_t>(i)] =
            count == 1 ? start : start + (stop - start) * static_cast<double>(i) / (count - 1);
    }
    return pts;
}

std::string Grid::to_string() const { return fmt(start) + ":" + fmt(stop) + ":" + std::to_string(count); }

EffectiveConfig load_config(const RunConfig& run) {
    ParameterSet set = run.params_file.empty() ? ParameterSet{} : ParameterSet::parse_file(run.params_file);
    for (const auto& o : run.overrides) set.set_assignment(o);
    return resolve(set);
}

void run_gamma_curve(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out) {
    const FormFactor ff = cfg.params.form_factor();
    const double w0 = cfg.params.omega0;
    const Grid grid = run.b_grid.value_or(Grid{0.0, 5.0, 51});
    const auto bs = grid.points();
    for (double b : bs) {
        if (b < 0.0 || b * w0 > 1e4 * cfg.params.lambda_cutoff) {
            throw ConfigError("b-grid must lie within [0, 1e4 lambda]");
        }
    }
    write_header(out, run, cfg, {"b_grid = " + grid.to_string(), "units: B in omega0, gamma in gamma(0)"});
    out << "B_over_omega0,gamma_over_gamma0,gamma_dipole_over_gamma0,method,sheet_case,validity_margin\n";
    const double g0 = gamma0(cfg, ff);
    for (double b : bs) {
        const double B = b * w0;
        out << fmt(b) << ',' << fmt(gamma_of_B(cfg.params, ff, B) / g0) << ','
            << fmt(gamma_dipole_approx(cfg.params, B)) << ',' << to_string(PoleMethod::Perturbative)
            << ',' << to_string(sheet_case_for(B, w0)) << ','
            << fmt(std::abs(B - w0) / (cfg.params.g2 * w0)) << '\n';
    }
}

void run_pole(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out) {
    const FormFactor ff = cfg.params.form_factor();
    const double w0 = cfg.params.omega0;
    PoleResult r;
    if (run.method == "fgr") {
        if (cfg.B != 0.0) throw ConfigError("--method fgr requires B = 0");
        r = fermi_golden_rule(cfg.params, ff);
    } else if (run.method == "perturbative") {
        r = pole_perturbative(cfg.params, ff, cfg.B);
    } else if (run.method == "newton") {
        r = pole_newton(cfg.params, ff, cfg.B);
    } else {
        throw ConfigError("--method must be fgr, perturbative or newton");
    }
    const double rate_unit = run.normalize ? gamma0(cfg, ff) : w0;
    write_header(out, run, cfg,
                 {"method = " + run.method,
                  std::string("units: frequencies in omega0, rates in ") +
                      (run.normalize ? "gamma(0)" : "omega0")});
    out << "B_over_omega0 = " << fmt(cfg.B / w0) << '\n'
        << "method = " << to_string(r.method) << '\n'
        << "sheet_case = " << to_string(r.sheet_case) << '\n'
        << "s_pole_re = " << fmt(r.s_pole.real() / w0) << '\n'
        << "s_pole_im = " << fmt(r.s_pole.imag() / w0) << '\n'
        << "delta_E = " << fmt(r.delta_E / w0) << '\n'
        << "gamma = " << fmt(r.gamma / rate_unit) << '\n'
        << "lifetime = " << fmt(r.lifetime * rate_unit) << '\n'
        << "validity_margin = " << fmt(r.validity_margin) << '\n'
        << "iterations = " << r.iterations << '\n'
        << "residual = " << fmt(r.residual / w0) << '\n';
}

void run_survival(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out) {
    const FormFactor ff = cfg.params.form_factor();
    const double gamma_B = gamma_of_B(cfg.params, ff, cfg.B);
    const double t_final = run.t_final.value_or(3.0 / gamma_B);
    const double omega_max =
        run.omega_max.value_or(bath::recommended_omega_max(cfg.params, cfg.B, run.modes, t_final));
    const bath::BathDiscretization b = bath::discretize(cfg.params, ff, cfg.B, run.modes, omega_max);
    if (!(t_final < b.recurrence_time())) {
        throw ConfigError("survival: t_final = " + fmt(t_final) + " reaches the recurrence time " +
                          fmt(b.recurrence_time()) + "; use more --modes or a shorter --t-final");
    }
    const double dt = run.dt.value_or(0.05 / omega_max);
    const bath::SurvivalTrace trace = bath::evolve(b, t_final, dt);
    write_header(out, run, cfg,
                 {"modes = " + std::to_string(run.modes), "omega_max = " + fmt(omega_max),
                  "t_final = " + fmt(t_final), "dt = " + fmt(dt),
                  "recurrence_time = " + fmt(b.recurrence_time())});
    out << "t,p_survival,norm_drift\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        out << fmt(trace.times[i]) << ',' << fmt(trace.p_survival[i]) << ','
            << fmt(trace.norm_drift[i]) << '\n';
    }
}

void run_selfenergy_table(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out) {
    const FormFactor ff = cfg.params.form_factor();
    const double w0 = cfg.params.omega0;
    const Grid grid = run.eta_grid.value_or(Grid{-1.0, 4.0, 51});
    write_header(out, run, cfg,
                 {"eta_grid = " + grid.to_string(),
                  "rows: sheet I = q(-i eta + 0+), sheet II = q_II(-i eta + 0+)"});
    out << "eta,re_q,im_q,sheet\n";
    for (double e : grid.points()) {
        const double eta = e * w0;
        const cplx first = q_boundary(ff, eta).value();
        const cplx second = first + 2.0 * std::numbers::pi * chi2(ff, eta);
        out << fmt(e) << ',' << fmt(first.real()) << ',' << fmt(first.imag()) << ",I\n";
        out << fmt(e) << ',' << fmt(second.real()) << ',' << fmt(second.imag()) << ",II\n";
    }
}

bool run_compare(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out) {
    const FormFactor ff = cfg.params.form_factor();
    const double w0 = cfg.params.omega0;
    std::vector<double> bs = run.b_grid ? run.b_grid->points() : kDefaultCompareB;
    for (double& b : bs) b *= w0;

    bath::OracleSettings settings;
    settings.modes = run.modes;
    settings.omega_max = run.omega_max;
    settings.t_final = run.t_final;
    settings.dt = run.dt;
    const bath::ComparisonReport report = bath::compare_rates(cfg.params, ff, bs, settings);

    const double rate_unit = run.normalize ? gamma0(cfg, ff) : w0;
    write_header(out, run, cfg,
                 {"modes = " + std::to_string(run.modes),
                  "b_list = " + (run.b_grid ? run.b_grid->to_string() : std::string("0,0.5,1.5")),
                  "tolerance = " + fmt(settings.tolerance),
                  std::string("units: B in omega0, rates in ") + (run.normalize ? "gamma(0)" : "omega0")});
    out << "B,gamma_formula,gamma_oracle,rel_dev,pass\n";
    for (const auto& row : report.rows) {
        out << fmt(row.B / w0) << ',' << fmt(row.gamma_formula / rate_unit) << ','
            << fmt(row.gamma_oracle / rate_unit) << ',' << fmt(row.rel_dev) << ','
            << (row.pass ? "PASS" : "FAIL") << '\n';
    }
    out << "# overall = " << (report.pass ? "PASS" : "FAIL") << '\n';
    return report.pass;
}

int run(const RunConfig& run, std::ostream& out, std::ostream& err) {
    try {
        const EffectiveConfig cfg = load_config(run);
        for (const auto& w : cfg.warnings) err << "warning: " << w << '\n';

        std::ofstream file;
        std::ostream* sink = &out;
        if (run.output != "-") {
            file.open(run.output);
            if (!file) throw ConfigError("cannot open output file '" + run.output + "'");
            sink = &file;
        }
        // Render fully before writing so failures leave no partial output.
        std::ostringstream buffer;
        bool pass = true;
        switch (run.command) {
        case Command::GammaCurve: run_gamma_curve(run, cfg, buffer); break;
        case Command::Pole: run_pole(run, cfg, buffer); break;
        case Command::Survival: run_survival(run, cfg, buffer); break;
        case Command::SelfEnergyTable: run_selfenergy_table(run, cfg, buffer); break;
        case Command::Compare: pass = run_compare(run, cfg, buffer); break;
        }
        *sink << buffer.str();
        sink->flush();
        return pass ? kExitOk : kExitCompareFail;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

int main(int argc, char** argv) {
    CLI::App app{"Decay of a laser-dressed three-level emitter: self-energy, poles, bath oracle"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    std::string b_grid, eta_grid;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--params", cfg.params_file, "key = value parameter file");
        sub->add_option("--set", cfg.overrides, "override one parameter, key=value (repeatable)");
        sub->add_flag("--normalize", cfg.normalize, "report rates in units of gamma(0)");
        sub->add_option("--out", cfg.output, "output path, '-' for standard output");
    };
    auto add_oracle = [&](CLI::App* sub) {
        sub->add_option("--modes", cfg.modes, "number of bath modes")->check(CLI::Range(100, 10000000));
        sub->add_option("--omega-max", cfg.omega_max, "bath band edge (omega0)");
        sub->add_option("--t-final", cfg.t_final, "run length (1/omega0)");
        sub->add_option("--dt", cfg.dt, "RK4 step (1/omega0)");
    };

    auto* gamma_curve = app.add_subcommand("gamma-curve", "gamma(B)/gamma over a B grid");
    add_common(gamma_curve);
    gamma_curve->add_option("--b-grid", b_grid, "start:stop:count in units of omega0");

    auto* pole = app.add_subcommand("pole", "resonance pole at the configured B");
    add_common(pole);
    pole->add_option("--method", cfg.method, "fgr | perturbative | newton");

    auto* survival = app.add_subcommand("survival", "survival probability from the mode-bath oracle");
    add_common(survival);
    add_oracle(survival);

    auto* table = app.add_subcommand("selfenergy-table", "boundary values of q on the cut");
    add_common(table);
    table->add_option("--eta-grid", eta_grid, "start:stop:count in units of omega0");

    auto* compare = app.add_subcommand("compare", "oracle decay rates against gamma(B)");
    add_common(compare);
    add_oracle(compare);
    compare->add_option("--b-grid", b_grid, "start:stop:count in units of omega0 (default 0,0.5,1.5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*gamma_curve) cfg.command = Command::GammaCurve;
    else if (*pole) cfg.command = Command::Pole;
    else if (*survival) cfg.command = Command::Survival;
    else if (*table) cfg.command = Command::SelfEnergyTable;
    else cfg.command = Command::Compare;

    try {
        if (!b_grid.empty()) cfg.b_grid = Grid::parse(b_grid);
        if (!eta_grid.empty()) cfg.eta_grid = Grid::parse(eta_grid);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    return run(cfg, std::cout, std::cerr);
}

} // namespace zeno::cli
