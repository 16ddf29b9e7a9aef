#pragma once

// Orchestration behind the CLI subcommands: simulate -> fit -> forecast /
// modes / symmetry -> report. Each stage reads and writes the artifact files
// under config.output_dir and returns its key quantities for inspection.

#include "koopspin/config.hpp"
#include "koopspin/io.hpp"
#include "koopspin/koopman.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace koopspin {

std::string trajectory_path(const RunConfig& config);
std::string estimator_path(const RunConfig& config);
std::string forecast_path(const RunConfig& config);
std::string modes_path(const RunConfig& config);
std::string symmetry_path(const RunConfig& config);
std::string report_path(const RunConfig& config);

struct SimulateResult {
    Trajectory trajectory;
    double max_trace_err = 0.0;
    double max_herm_err = 0.0;
    double min_eigenvalue = 0.0;
    double max_total_sz_drift = 0.0;
    double max_purity_drift = 0.0;  // only meaningful for gamma = 0
};

SimulateResult cmd_simulate(const RunConfig& config, std::ostream& log);

struct FitResult {
    KoopmanEstimator estimator;
    double training_objective = 0.0;
    double training_rmse = 0.0;
    int numerical_rank = 0;
};

FitResult cmd_fit(const RunConfig& config, std::ostream& log);

std::vector<ForecastRow> cmd_forecast(const RunConfig& config, std::ostream& log);

std::vector<ModeSummary> cmd_modes(const RunConfig& config, std::ostream& log);

struct SymmetryResult {
    Complex steady_eigenvalue;
    double residual = 0.0;    // ||[Psi_1, Sz_tot]|| / (||Psi_1|| ||Sz_tot||)
    double psi1_drift = 0.0;  // relative drift of psi_1(rho_t) over test data
};

SymmetryResult cmd_symmetry(const RunConfig& config, std::ostream& log);

struct ReportResult {
    bool all_pass = false;
    std::string json_text;
};

ReportResult cmd_report(const RunConfig& config, std::ostream& log);

}  // namespace koopspin
