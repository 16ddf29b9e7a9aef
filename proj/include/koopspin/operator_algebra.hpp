#pragma once

// Dense complex operator algebra on N-spin Hilbert spaces: Pauli matrices,
// tensor embeddings, Hilbert-Schmidt geometry and the orthonormal
// Pauli-string coefficient representation used as the learning feature space.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace koopspin {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

enum class PauliAxis { Identity = 0, X = 1, Y = 2, Z = 3 };

ComplexMatrix pauli_matrix(PauliAxis axis);

// Kronecker product, dim = dimA * dimB.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// I (x) ... (x) op (x) ... (x) I with `op` (2x2) at 1-based position `site`.
ComplexMatrix embed(const ComplexMatrix& op, int site, int n_spins);

// Hilbert-Schmidt inner product tr(A^dag B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);

// N for a 2^N x 2^N matrix; throws if dim is not a power of two.
int spin_count_for_dim(Eigen::Index dim);

// Length-N word over {I,X,Y,Z}. Basis order is lexicographic in (I,X,Y,Z)
// per site with site 1 most significant.
struct PauliString {
    std::vector<PauliAxis> labels;

    ComplexMatrix matrix() const;
};

PauliString pauli_string_at(int n_spins, std::int64_t index);

// Coefficients c_P = tr(P A) / sqrt(2^N) in the basis order above; the basis
// is orthonormal under hs_inner, so hermitian A <=> real coefficients.
struct PauliCoefficients {
    int n_spins = 0;
    ComplexVector coeffs;
};

PauliCoefficients to_pauli_coeffs(const ComplexMatrix& a);
ComplexMatrix from_pauli_coeffs(const PauliCoefficients& c);

// Real view of a hermitian operator's coefficients; throws numeric_error if
// any imaginary part exceeds `tol`.
RealVector real_coeffs(const PauliCoefficients& c, double tol = 1e-10);
ComplexMatrix matrix_from_real_coeffs(const RealVector& coeffs, int n_spins);

}  // namespace koopspin
