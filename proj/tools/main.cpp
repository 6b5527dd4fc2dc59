#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "zwire/errors.hpp"

namespace {

using namespace zwire::cli;

SweepConfig resolve(const std::string& path, const std::vector<std::string>& overrides) {
    SweepConfig cfg = load_config(path);
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        apply_key(cfg, trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)), 0, "");
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-resolved scattering in a 1D wire with a planar Zeeman texture"};
    app.require_subcommand(1);
    app.footer(std::string("\nExit codes: 0 success/PASS, 1 usage error, 2 validation FAIL, 3 numeric failure.\n\n") +
               kColumnHelp);

    std::string config_path, out_path, against;
    std::vector<std::string> overrides;
    double mu_left = 0.0, mu_right = 0.0, temperature = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Configuration file (key = value)")->required();
        sub->add_option("--set", overrides, "Override a config key, e.g. --set points=400")->take_all();
    };

    CLI::App* sweep = app.add_subcommand("sweep", "Energy sweep to CSV");
    add_common(sweep);
    sweep->add_option("--out", out_path, "Write CSV here instead of stdout");
    sweep->footer(kColumnHelp);

    CLI::App* validate = app.add_subcommand("validate", "Cross-check against an independent reference");
    add_common(validate);
    validate->add_option("--against", against, "Reference to compare with")
        ->required()
        ->check(CLI::IsMember({"oracle", "wall", "delta", "berry", "convergence"}));

    CLI::App* dump = app.add_subcommand("dump-profile", "Print y b1 b3 theta |B| for the configured profile");
    add_common(dump);

    CLI::App* current = app.add_subcommand("current", "Landauer current over the configured energy grid");
    add_common(current);
    current->add_option("--mu-left", mu_left, "Left chemical potential")->required();
    current->add_option("--mu-right", mu_right, "Right chemical potential")->required();
    current->add_option("--temp", temperature, "Temperature in units of E_Z")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const SweepConfig cfg = resolve(config_path, overrides);
        if (sweep->parsed()) {
            if (out_path.empty()) return run_sweep(cfg, std::cout, std::cerr);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw ConfigError("cannot write '" + out_path + "'");
            return run_sweep(cfg, out, std::cerr);
        }
        if (validate->parsed()) return run_validate(cfg, against, std::cout, std::cerr);
        if (dump->parsed()) return run_dump_profile(cfg, std::cout, std::cerr);
        return run_current(cfg, mu_left, mu_right, temperature, std::cout, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const zwire::ProfileError& e) {
        std::cerr << "profile error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    }
}
