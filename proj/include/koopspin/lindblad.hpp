#pragma once

// Dissipative Heisenberg spin chain: model construction, Lindblad generator,
// fixed-step RK4 integration and the physical observables reported by the
// pipeline (spin polarization, total S^z, spin current).

#include "koopspin/operator_algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace koopspin {

struct SpinChainParams {
    int n_spins = 5;
    double j_par = 0.0;   // in-plane coupling J_par (hbar = 1)
    double j_perp = 0.0;  // z coupling J_perp
    double gamma = 0.0;   // dephasing rate
    double dt = 0.5;      // snapshot spacing
    int steps = 200;      // snapshot count
    int substeps = 50;    // RK4 steps per snapshot

    void validate() const;  // throws config_error
};

struct LindbladModel {
    ComplexMatrix hamiltonian;
    std::vector<ComplexMatrix> collapse_ops;
};

// Snapshots at t = k*dt, k = 1..steps, stored as real Pauli coefficients.
struct Trajectory {
    SpinChainParams params;
    std::string initial_label;
    std::vector<double> times;
    std::vector<RealVector> states;
};

// H = -(1/2) sum_i [ J_par (XX + YY) + J_perp ZZ ], open boundary.
ComplexMatrix build_hamiltonian(const SpinChainParams& params);

// N pure dephasings L_i = sqrt(gamma/2) sigma_z(i).
std::vector<ComplexMatrix> build_dephasing_ops(const SpinChainParams& params);

LindbladModel build_model(const SpinChainParams& params);

// -i[H, rho] + sum_k ( L rho L^dag - {L^dag L, rho}/2 ).
ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho);

// Product state |s><s| from per-site labels over {u, d}, e.g. "d,u,u,u,u";
// "u" is the sigma_z = +1 eigenstate.
ComplexMatrix initial_state(const std::string& spec);

// Fixed-step RK4. Every snapshot is validated (trace, hermiticity,
// positivity); a violation aborts with a numeric_error diagnostic.
Trajectory integrate(const LindbladModel& model, const ComplexMatrix& rho0,
                     const SpinChainParams& params, const std::string& initial_label = "");

struct TimeGrid {
    double dt = 0.5;
    int steps = 2;
    int substeps = 1;
};

// Same integrator without the chain-parameter checks; accepts any model,
// including a single qubit.
Trajectory integrate(const LindbladModel& model, const ComplexMatrix& rho0, const TimeGrid& grid,
                     const std::string& initial_label = "");

ComplexMatrix spin_polarization_op(int site, int n_spins);  // sigma_z(i)/2
ComplexMatrix total_sz_op(int n_spins);
ComplexMatrix spin_current_op(int site, const SpinChainParams& params);

// Re tr(A rho); throws if the imaginary residue exceeds `tol`.
double expectation(const ComplexMatrix& a, const ComplexMatrix& rho, double tol = 1e-10);

struct DataSplit {
    Eigen::Index n_train = 0;    // training snapshot count
    RealMatrix train_x;          // feature_dim x (n_train - 1)
    RealMatrix train_y;          // train_y.col(k) = state after train_x.col(k)
    std::vector<double> test_times;
    std::vector<RealVector> test_states;
};

// Pairs (x_k, y_k) = (state_k, state_{k+1}) from the training prefix of
// floor(train_fraction * steps) snapshots; the rest is the test segment.
DataSplit dataset_split(const Trajectory& traj, double train_fraction);

}  // namespace koopspin
