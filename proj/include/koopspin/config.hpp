#pragma once

#include "koopspin/lindblad.hpp"

#include <string>
#include <vector>

namespace koopspin {

struct ObservableSpec {
    enum class Kind { Polarization, Current, TotalSz };
    Kind kind = Kind::Polarization;
    int site = 1;  // ignored for TotalSz

    std::string id() const;
    ComplexMatrix build(const SpinChainParams& params) const;
};

ObservableSpec parse_observable(const std::string& text);

// Defaults reproduce the reference experiment: N=5 dephasing Heisenberg
// chain, J_par = 0.1 pi, J_perp = 0.2 pi, gamma = 0.01, dt = 0.5, 200
// snapshots, rank-19 fit with reg = 1e-6.
struct RunConfig {
    SpinChainParams params;
    std::string initial_label = "d,u,u,u,u";
    double train_fraction = 0.5;
    int rank = 19;
    double reg = 1e-6;
    std::vector<ObservableSpec> observables;
    std::string output_dir = ".";

    RunConfig();
    void validate() const;
};

// Numeric literal, optionally scaled by pi: "0.01", "pi", "0.1*pi", "pi/4".
double parse_number(const std::string& text);

// Flat key-value file, one "key = value" per line, '#' comments. Unknown
// keys are errors.
RunConfig load_config(const std::string& path);

void apply_override(RunConfig& config, const std::string& key, const std::string& value);

}  // namespace koopspin
