#include "koopspin/errors.hpp"
#include "koopspin/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

koopspin::RunConfig make_config(const std::string& config_path, const std::string& output_dir,
                                const std::vector<std::string>& overrides) {
    koopspin::RunConfig config;
    if (!config_path.empty()) config = koopspin::load_config(config_path);
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw koopspin::config_error("--set expects key=value, got '" + kv + "'");
        koopspin::apply_override(config, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!output_dir.empty()) config.output_dir = output_dir;
    config.validate();
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lindblad spin-chain simulation and reduced-rank Koopman analysis"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    std::string config_path;
    std::string output_dir;
    std::vector<std::string> overrides;
    app.add_option("--config", config_path, "Key-value config file");
    app.add_option("--output-dir", output_dir, "Artifact directory (overrides config)");
    app.add_option("--set", overrides, "Override a config key, e.g. --set rank=19");

    auto* simulate = app.add_subcommand("simulate", "Integrate the Lindblad equation");
    auto* fit = app.add_subcommand("fit", "Fit the reduced-rank Koopman estimator");
    auto* forecast = app.add_subcommand("forecast", "Forecast observables vs ground truth");
    auto* modes = app.add_subcommand("modes", "Eigenvalues, decay rates and frequencies");
    auto* symmetry = app.add_subcommand("symmetry", "Steady-mode symmetry analysis");
    auto* report = app.add_subcommand("report", "Consolidated acceptance report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const koopspin::RunConfig config = make_config(config_path, output_dir, overrides);
        if (simulate->parsed()) koopspin::cmd_simulate(config, std::cout);
        if (fit->parsed()) koopspin::cmd_fit(config, std::cout);
        if (forecast->parsed()) koopspin::cmd_forecast(config, std::cout);
        if (modes->parsed()) koopspin::cmd_modes(config, std::cout);
        if (symmetry->parsed()) koopspin::cmd_symmetry(config, std::cout);
        if (report->parsed()) koopspin::cmd_report(config, std::cout);
    } catch (const koopspin::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const koopspin::numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const koopspin::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
