// params_io.hpp: flat `key = value` parameter files.
//
// Recognised keys: omega0, lambda, j, kind, beta, g2, B, n0, dipole_sq,
// alpha, omega_laser. Lines starting with '#' and text after a '#' are
// comments. Unknown or repeated keys are errors.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zeno/model.hpp"

namespace zeno {

class ParameterSet {
public:
    static const std::vector<std::string>& known_keys();

    static ParameterSet parse(std::istream& in, const std::string& source = "<input>");
    static ParameterSet parse_file(const std::string& path);

    /// Adds or overrides one key. Throws ConfigError for unknown keys.
    void set(const std::string& key, const std::string& value);
    /// Parses "key=value" (as given to --set).
    void set_assignment(const std::string& assignment);

    std::optional<std::string> get(const std::string& key) const;
    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

/// Parameters after defaults, g2 from alpha and B from the laser are applied.
struct EffectiveConfig {
    SystemParams params;
    double B{0.0};
    double alpha{kFineStructure};
    std::optional<LaserSpec> laser;
    std::vector<std::string> warnings;

    bool operator==(const EffectiveConfig& other) const;
};

/// Defaults: omega0 = 1, lambda = 10, j = 1, kind = electric, beta = 3,
/// alpha = 7.2973525693e-3. Missing g2 is computed from alpha; missing B is
/// computed from (omega_laser, n0, dipole_sq) when n0 is given, else 0.
EffectiveConfig resolve(const ParameterSet& set);

/// `key = value` lines (17 significant digits) that parse back to `config`.
std::vector<std::string> echo_lines(const EffectiveConfig& config);

/// Extracts the block between "# config begin" and "# config end" from an
/// output header and parses it.
ParameterSet parse_config_echo(std::istream& in);

std::string format_double(double value);

} // namespace zeno
