#pragma once

// Reduced-rank Koopman operator learning on a linear kernel, plus the
// spectral analysis built on it: eigen-triplets, mode decomposition, decay
// rates, normal-mode frequencies, steady mode and symmetry residuals.

#include "koopspin/operator_algebra.hpp"

#include <utility>
#include <vector>

namespace koopspin {

// Rank-r minimizer of (1/n) sum ||y_i - T x_i||^2 + reg ||T||_F^2. The
// estimator stores the forward state map T (y ~= T x); the Koopman operator
// on observable coefficient vectors is T^transpose.
struct KoopmanEstimator {
    Eigen::Index feature_dim = 0;
    int rank = 0;
    double reg = 0.0;
    RealMatrix transition;      // T, feature_dim x feature_dim
    RealMatrix range_basis;     // orthonormal basis of range(T), feature_dim x k
    RealMatrix compressed_map;  // k x feature_dim, T = range_basis * compressed_map
};

KoopmanEstimator fit_rrr(const RealMatrix& x, const RealMatrix& y, int rank, double reg);
KoopmanEstimator fit_rrr(const std::vector<std::pair<RealVector, RealVector>>& pairs, int rank,
                         double reg);

// Reattach the low-rank factorization to a transition matrix loaded from disk.
KoopmanEstimator estimator_from_transition(RealMatrix transition, int rank, double reg);

double rrr_objective(const RealMatrix& t, const RealMatrix& x, const RealMatrix& y, double reg);

// Singular values of T exceeding 1e-10 * sigma_1.
int numerical_rank(const KoopmanEstimator& est);

// T^t x0 by repeated application.
RealVector forecast_state(const KoopmanEstimator& est, const RealVector& x0, long t);

// <f, T^t x0> for a real (hermitian-observable) coefficient vector f.
double forecast_observable(const KoopmanEstimator& est, const RealVector& f, const RealVector& x0,
                           long t);

// psi is a right eigenfunction coefficient vector of the Koopman operator
// (left eigenvector of T); xi the matching left one; <xi_i, psi_j> = delta_ij.
struct EigenTriplet {
    Complex eigenvalue;
    ComplexVector psi;
    ComplexVector xi;
};

// Eigendecomposition of the compression of T onto its range, lifted back and
// biorthonormalized; sorted by |lambda| descending. Throws numeric_error on a
// defective (non-diagonalizable) restriction.
std::vector<EigenTriplet> eigen_triplets(const KoopmanEstimator& est);

struct ModeDecomposition {
    std::vector<Complex> eigenvalues;
    std::vector<Complex> amplitudes;      // gamma_i = <xi_i, f>
    std::vector<Complex> initial_values;  // psi_i(x0)
};

ModeDecomposition mode_decomposition(const std::vector<EigenTriplet>& triplets,
                                     const RealVector& f, const RealVector& x0);

// sum_i lambda_i^t gamma_i psi_i(x0); throws if the imaginary residue of the
// sum exceeds 1e-8 (conjugate modes must pair up for hermitian f).
double mode_reconstruction(const ModeDecomposition& modes, long t);

struct ModeSummary {
    Complex eigenvalue;
    double abs_lambda;
    double arg_lambda;
    double decay_rate;  // -ln|lambda| / dt
    double frequency;   // arg(lambda) / (2 pi dt), cycles per unit time
};

std::vector<ModeSummary> decay_rates_frequencies(const std::vector<EigenTriplet>& triplets,
                                                 double dt);

// Triplet with eigenvalue closest to 1 (ties: smallest index after sorting).
const EigenTriplet& steady_mode(const std::vector<EigenTriplet>& triplets);

// Operator Psi with tr(Psi rho) = psi(x(rho)) for every rho.
ComplexMatrix eigenfunction_operator(const EigenTriplet& triplet, int n_spins);

// ||[Psi, S]||_F / (||Psi||_F ||S||_F).
double symmetry_residual(const ComplexMatrix& psi_op, const ComplexMatrix& s);

}  // namespace koopspin
