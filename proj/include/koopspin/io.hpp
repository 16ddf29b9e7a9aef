#pragma once

// Text serialization of pipeline artifacts. All floats are written with 17
// significant digits so files round-trip and reruns are byte-identical.

#include "koopspin/koopman.hpp"
#include "koopspin/lindblad.hpp"

#include <string>
#include <vector>

namespace koopspin {

struct EstimatorFile {
    Eigen::Index feature_dim = 0;
    int rank = 0;
    double reg = 0.0;
    double dt = 0.0;
    RealMatrix transition;  // row-major on disk
};

std::string format_double(double v);

std::string read_file(const std::string& path);

std::string trajectory_to_string(const Trajectory& traj);
std::string estimator_to_string(const EstimatorFile& est);

void write_trajectory(const std::string& path, const Trajectory& traj);
Trajectory read_trajectory(const std::string& path);

void write_estimator(const std::string& path, const EstimatorFile& est);
EstimatorFile read_estimator(const std::string& path);

struct ForecastRow {
    double time;
    std::string observable_id;
    double truth;
    double forecast;
};

void write_forecast_csv(const std::string& path, const std::vector<ForecastRow>& rows);

void write_modes_csv(const std::string& path, const std::vector<ModeSummary>& modes);

}  // namespace koopspin
