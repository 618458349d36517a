#include "ecsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ecsim/errors.hpp"

namespace ecsim::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for '" + key + "': " + text);
    }
}

int parse_int(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value for '" + key + "': " + text);
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

const std::vector<std::string> kSweepKeys = {"lambda", "kind",  "alpha", "eta",
                                             "omega_c", "kappa", "n"};

} // namespace

std::complex<double> parse_complex(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw ConfigError("empty complex value");
    if (s.back() == 'i' || s.back() == 'I') {
        // find the sign splitting real and imaginary parts (skip a leading sign
        // and signs inside exponents)
        std::size_t split = std::string::npos;
        for (std::size_t k = s.size() - 1; k > 0; --k) {
            const char c = s[k];
            if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos) {
            // purely imaginary, e.g. "0.5i"
            std::string im = s.substr(0, s.size() - 1);
            if (im.empty() || im == "+" || im == "-") im += "1";
            return {0.0, parse_double(im, "alpha")};
        }
        std::string im = s.substr(split, s.size() - split - 1);
        if (im == "+" || im == "-") im += "1";
        return {parse_double(s.substr(0, split), "alpha"), parse_double(im, "alpha")};
    }
    return {parse_double(s, "alpha"), 0.0};
}

void RunConfig::validate() const {
    system.validate();
    spectral.validate();
    grid.validate();
    state.validate();
    if (workers < 1) throw ConfigError("workers must be >= 1");
    if (fock_cutoff < 1) throw ConfigError("verify.cutoff must be >= 1");
    if (!(verify_t_max > 0.0)) throw ConfigError("verify.t_max must be > 0");
    if (sweep_target != "concurrence" && sweep_target != "coeffs") {
        throw ConfigError("sweep.target must be 'concurrence' or 'coeffs'");
    }
}

void apply_override(RunConfig& cfg, const std::string& dotted_key,
                    const std::string& value) {
    const auto dot = dotted_key.find('.');
    const std::string section = dot == std::string::npos ? "" : dotted_key.substr(0, dot);
    const std::string key = dot == std::string::npos ? dotted_key : dotted_key.substr(dot + 1);

    if (section == "system") {
        if (key == "kappa") { cfg.system.kappa = parse_double(value, dotted_key); return; }
        if (key == "lambda") {
            cfg.system.lambda = parse_int(value, dotted_key);
            return;
        }
        if (key == "omega0") {
            if (parse_double(value, dotted_key) != 1.0) {
                throw ConfigError("omega0 is fixed to 1 (internal units)");
            }
            return;
        }
    } else if (section == "spectral") {
        if (key == "eta") { cfg.spectral.eta = parse_double(value, dotted_key); return; }
        if (key == "omega_c") { cfg.spectral.omega_c = parse_double(value, dotted_key); return; }
        if (key == "n") { cfg.spectral.n = parse_double(value, dotted_key); return; }
    } else if (section == "grid") {
        if (key == "t_max") { cfg.grid.t_max = parse_double(value, dotted_key); return; }
        if (key == "dt") { cfg.grid.dt = parse_double(value, dotted_key); return; }
    } else if (section == "state") {
        if (key == "kind") { cfg.state.kind = states::kind_from_string(value); return; }
        if (key == "alpha") { cfg.state.alpha = parse_complex(value); return; }
    } else if (section == "output") {
        if (key == "path") { cfg.out_path = value; return; }
        if (key == "workers") { cfg.workers = parse_int(value, dotted_key); return; }
    } else if (section == "verify") {
        if (key == "cutoff") { cfg.fock_cutoff = parse_int(value, dotted_key); return; }
        if (key == "t_max") { cfg.verify_t_max = parse_double(value, dotted_key); return; }
    } else if (section == "sweep") {
        if (key == "target") { cfg.sweep_target = value; return; }
        if (std::find(kSweepKeys.begin(), kSweepKeys.end(), key) != kSweepKeys.end()) {
            cfg.sweep[key] = split_list(value);
            return;
        }
    }
    throw ConfigError("unknown configuration key: " + dotted_key);
}

RunConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());

    RunConfig cfg;
    std::string line;
    std::string section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << path.string() << ":" << lineno << ": expected 'key = value'";
            throw ConfigError(msg.str());
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (section.empty()) {
            throw ConfigError("key '" + key + "' appears before any [section] header");
        }
        apply_override(cfg, section + "." + key, value);
    }
    return cfg;
}

} // namespace ecsim::cli
