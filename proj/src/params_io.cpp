#include "zeno/params_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "zeno/errors.hpp"

namespace zeno {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ConfigError("parameter '" + key + "': not a number: '" + text + "'");
    }
    return value;
}

int to_int(const std::string& key, const std::string& text) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("parameter '" + key + "': not an integer: '" + text + "'");
    }
    return value;
}

} // namespace

const std::vector<std::string>& ParameterSet::known_keys() {
    static const std::vector<std::string> keys = {"omega0", "lambda",    "j",     "kind",
                                                  "beta",   "g2",        "B",     "n0",
                                                  "dipole_sq", "alpha", "omega_laser"};
    return keys;
}

ParameterSet ParameterSet::parse(std::istream& in, const std::string& source) {
    ParameterSet set;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = source + ":" + std::to_string(number);
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        if (set.values_.count(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
        try {
            set.set(key, trim(line.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    return set;
}

ParameterSet ParameterSet::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open parameter file '" + path + "'");
    return parse(in, path);
}

void ParameterSet::set(const std::string& key, const std::string& value) {
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw ConfigError("unknown parameter key '" + key + "'");
    }
    if (value.empty()) throw ConfigError("parameter '" + key + "' has no value");
    values_[key] = value;
}

void ParameterSet::set_assignment(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("--set expects key=value, got '" + assignment + "'");
    }
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

std::optional<std::string> ParameterSet::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

bool EffectiveConfig::operator==(const EffectiveConfig& o) const {
    const auto& a = params;
    const auto& b = o.params;
    const bool same_laser =
        laser.has_value() == o.laser.has_value() &&
        (!laser || (laser->omega_laser == o.laser->omega_laser && laser->n0 == o.laser->n0 &&
                    laser->dipole_sq == o.laser->dipole_sq && laser->alpha_fs == o.laser->alpha_fs));
    return a.omega0 == b.omega0 && a.lambda_cutoff == b.lambda_cutoff && a.j == b.j &&
           a.kind == b.kind && a.beta == b.beta && a.g2 == b.g2 && B == o.B &&
           alpha == o.alpha && same_laser;
}

EffectiveConfig resolve(const ParameterSet& set) {
    EffectiveConfig cfg;
    auto num = [&](const char* key, double fallback) {
        const auto v = set.get(key);
        return v ? to_double(key, *v) : fallback;
    };
    SystemParams& p = cfg.params;
    p.omega0 = num("omega0", 1.0);
    p.lambda_cutoff = num("lambda", 10.0);
    if (const auto v = set.get("j")) p.j = to_int("j", *v);
    if (const auto v = set.get("kind")) p.kind = parse_transition_kind(*v);
    p.beta = num("beta", 3.0);
    cfg.alpha = num("alpha", kFineStructure);
    if (!(cfg.alpha > 0.0)) throw ConfigError("alpha must be positive");

    p.g2 = set.get("g2") ? num("g2", 0.0) : coupling_g2(p, cfg.alpha);

    if (set.get("n0") || set.get("dipole_sq") || set.get("omega_laser")) {
        if (!set.get("n0") || !set.get("dipole_sq") || !set.get("omega_laser")) {
            throw ConfigError("laser parameters need all of n0, dipole_sq and omega_laser");
        }
        LaserSpec laser;
        laser.omega_laser = num("omega_laser", 0.0);
        laser.n0 = num("n0", 0.0);
        laser.dipole_sq = num("dipole_sq", 0.0);
        laser.alpha_fs = cfg.alpha;
        cfg.laser = laser;
    }
    if (set.get("B")) {
        cfg.B = num("B", 0.0);
    } else if (cfg.laser) {
        cfg.B = laser_strength_B(*cfg.laser);
    }
    if (!(cfg.B >= 0.0)) throw ConfigError("B must be nonnegative");

    cfg.warnings = p.validate();
    p.form_factor();  // parity check
    return cfg;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::vector<std::string> echo_lines(const EffectiveConfig& c) {
    std::vector<std::string> lines = {
        "omega0 = " + format_double(c.params.omega0),
        "lambda = " + format_double(c.params.lambda_cutoff),
        "j = " + std::to_string(c.params.j),
        "kind = " + to_string(c.params.kind),
        "beta = " + format_double(c.params.beta),
        "g2 = " + format_double(c.params.g2),
        "B = " + format_double(c.B),
        "alpha = " + format_double(c.alpha),
    };
    if (c.laser) {
        lines.push_back("omega_laser = " + format_double(c.laser->omega_laser));
        lines.push_back("n0 = " + format_double(c.laser->n0));
        lines.push_back("dipole_sq = " + format_double(c.laser->dipole_sq));
    }
    return lines;
}

ParameterSet parse_config_echo(std::istream& in) {
    std::string line;
    std::ostringstream block;
    bool inside = false;
    bool closed = false;
    while (std::getline(in, line)) {
        if (line == "# config begin") {
            inside = true;
            continue;
        }
        if (line == "# config end") {
            closed = inside;
            break;
        }
        if (inside) {
            if (line.rfind("# ", 0) != 0) throw ConfigError("malformed config echo line: " + line);
            block << line.substr(2) << '\n';
        }
    }
    if (!closed) throw ConfigError("no '# config begin' ... '# config end' block found");
    std::istringstream body(block.str());
    return ParameterSet::parse(body, "<config echo>");
}

} // namespace zeno
