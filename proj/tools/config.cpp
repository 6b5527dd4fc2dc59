#include "config.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "zwire/errors.hpp"

namespace zwire::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string where(int line) { return line > 0 ? "line " + std::to_string(line) + ": " : ""; }

double parse_number(const std::string& t) {
    double v = 0.0;
    const char* b = t.data();
    const char* e = b + t.size();
    if (b != e && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e) throw ConfigError("not a number: '" + t + "'");
    return v;
}

int parse_int(const std::string& t, int min_value) {
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty())
        throw ConfigError("not an integer: '" + t + "'");
    if (v < min_value) throw ConfigError("value " + t + " below minimum " + std::to_string(min_value));
    return v;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : v) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

}  // namespace

double parse_real(const std::string& raw) {
    const std::string t = trim(raw);
    const auto pos = t.find("pi");
    if (pos == std::string::npos) return parse_number(t);
    std::string coef = t.substr(0, pos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double c = 1.0;
    if (coef == "-")
        c = -1.0;
    else if (!coef.empty() && coef != "+")
        c = parse_number(coef);
    double d = 1.0;
    const std::string rest = t.substr(pos + 2);
    if (!rest.empty()) {
        if (rest[0] != '/') throw ConfigError("cannot parse angle '" + t + "'");
        d = parse_number(rest.substr(1));
        if (d == 0.0) throw ConfigError("division by zero in '" + t + "'");
    }
    return c * std::numbers::pi / d;
}

void apply_key(SweepConfig& cfg, const std::string& key, const std::string& value, int line,
               const std::string& base_dir) {
    try {
        if (key == "scheme") {
            if (value.rfind("tabulated:", 0) == 0) {
                std::filesystem::path p(value.substr(10));
                if (p.empty()) throw ConfigError("tabulated scheme needs a path");
                if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
                cfg.scheme = "tabulated";
                cfg.tabulated_path = p.string();
            } else if (value == "scheme1" || value == "scheme2" || value == "wall" || value == "uniform") {
                cfg.scheme = value;
            } else {
                throw ConfigError("unknown scheme '" + value + "'");
            }
        } else if (key == "q1") {
            cfg.q1 = parse_int(value, 0);
        } else if (key == "q2") {
            cfg.q2 = parse_int(value, 0);
        } else if (key == "L") {
            cfg.L = parse_real(value);
        } else if (key == "theta") {
            cfg.theta = parse_real(value);
        } else if (key == "theta_left") {
            cfg.theta_left = parse_real(value);
        } else if (key == "theta_right") {
            cfg.theta_right = parse_real(value);
        } else if (key == "E_min") {
            cfg.E_min = parse_real(value);
        } else if (key == "E_max") {
            cfg.E_max = parse_real(value);
        } else if (key == "points") {
            cfg.points = parse_int(value, 1);
        } else if (key == "segments") {
            cfg.segments = parse_int(value, 1);
        } else if (key == "threads") {
            cfg.threads = parse_int(value, 0);
        } else if (key == "lattice_divisions") {
            cfg.lattice_divisions = parse_int(value, 2);
        } else if (key == "tolerance") {
            cfg.tolerance = parse_real(value);
        } else if (key == "validate_energies") {
            cfg.validate_energies.clear();
            for (const auto& item : split_list(value)) cfg.validate_energies.push_back(parse_real(item));
            if (cfg.validate_energies.empty()) throw ConfigError("validate_energies is empty");
        } else if (key == "outputs") {
            cfg.out_probabilities = cfg.out_distances = cfg.out_conductance = false;
            for (const auto& item : split_list(value)) {
                if (item == "probabilities")
                    cfg.out_probabilities = true;
                else if (item == "distances")
                    cfg.out_distances = true;
                else if (item == "conductance")
                    cfg.out_conductance = true;
                else if (item == "all")
                    cfg.out_probabilities = cfg.out_distances = cfg.out_conductance = true;
                else
                    throw ConfigError("unknown output group '" + item + "'");
            }
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    } catch (const ConfigError& e) {
        throw ConfigError(where(line) + e.what());
    }
}

SweepConfig parse_config(std::istream& in, const std::string& base_dir) {
    SweepConfig cfg;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError(where(line) + "expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty()) throw ConfigError(where(line) + "missing key");
        apply_key(cfg, key, value, line, base_dir);
    }
    return cfg;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    return parse_config(in, std::filesystem::path(path).parent_path().string());
}

PlanarField build_field(const SweepConfig& cfg) {
    if (cfg.scheme.empty()) throw ConfigError("config does not set 'scheme'");
    try {
        if (cfg.scheme == "scheme1") return scheme1_field(cfg.q1, cfg.q2, cfg.L);
        if (cfg.scheme == "scheme2") return scheme2_field(cfg.q1, cfg.q2, cfg.L);
        if (cfg.scheme == "wall") return magnetic_wall_field(cfg.theta_left, cfg.theta_right, cfg.L);
        if (cfg.scheme == "uniform") return uniform_field(cfg.theta, cfg.L);
        return load_tabulated(cfg.tabulated_path);
    } catch (const ProfileError& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace zwire::cli
