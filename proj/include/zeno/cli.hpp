// cli.hpp: the `zeno` command-line workflows. Every output starts with a
// `#` header (version line, effective configuration, run options) followed
// by CSV or key = value data. Numbers carry 17 significant digits.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zeno/params_io.hpp"

namespace zeno::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitCompareFail = 4;

enum class Command { GammaCurve, Pole, Survival, SelfEnergyTable, Compare };

std::string to_string(Command command);

/// start:stop:count, inclusive on both ends.
struct Grid {
    double start{0.0};
    double stop{0.0};
    int count{1};

    static Grid parse(const std::string& text);
    std::vector<double> points() const;
    std::string to_string() const;
};

struct RunConfig {
    Command command{Command::GammaCurve};
    std::string params_file;              // empty = defaults only
    std::vector<std::string> overrides;   // key=value, applied after the file
    std::optional<Grid> b_grid;           // units of omega0
    std::optional<Grid> eta_grid;         // units of omega0
    bool normalize{false};
    std::string output{"-"};
    std::string method{"perturbative"};   // pole: fgr | perturbative | newton
    std::size_t modes{2000};
    std::optional<double> omega_max;
    std::optional<double> t_final;
    std::optional<double> dt;
};

EffectiveConfig load_config(const RunConfig& run);

void run_gamma_curve(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out);
void run_pole(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out);
void run_survival(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out);
void run_selfenergy_table(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out);
/// Returns true when every row passes.
bool run_compare(const RunConfig& run, const EffectiveConfig& cfg, std::ostream& out);

/// Executes one command; maps failures to exit codes (2 config, 3 numeric,
/// 4 comparison FAIL) and reports them on err.
int run(const RunConfig& run, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

} // namespace zeno::cli
