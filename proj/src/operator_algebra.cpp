#include "koopspin/operator_algebra.hpp"

#include "koopspin/errors.hpp"

#include <cmath>
#include <string>

namespace koopspin {

namespace {

constexpr Complex kImag{0.0, 1.0};

// Single-site Pauli matrices have one nonzero entry per column. For column
// bit b this returns the row bit and the entry value.
inline void pauli_column_action(PauliAxis axis, int b, int& row_bit, Complex& value) {
    switch (axis) {
        case PauliAxis::Identity:
            row_bit = b;
            value = 1.0;
            break;
        case PauliAxis::X:
            row_bit = 1 - b;
            value = 1.0;
            break;
        case PauliAxis::Y:
            row_bit = 1 - b;
            value = (b == 0) ? kImag : -kImag;
            break;
        case PauliAxis::Z:
            row_bit = b;
            value = (b == 0) ? 1.0 : -1.0;
            break;
    }
}

// Nonzero structure of an N-site Pauli string: for column `col`, the single
// nonzero row and its value. Site 1 owns the most significant bit.
inline void string_column_action(const std::vector<PauliAxis>& labels, std::int64_t col,
                                 std::int64_t& row, Complex& value) {
    const int n = static_cast<int>(labels.size());
    row = 0;
    value = 1.0;
    for (int site = 0; site < n; ++site) {
        const int shift = n - 1 - site;
        const int b = static_cast<int>((col >> shift) & 1);
        int rb = 0;
        Complex v;
        pauli_column_action(labels[site], b, rb, v);
        row |= static_cast<std::int64_t>(rb) << shift;
        value *= v;
    }
}

}  // namespace

ComplexMatrix pauli_matrix(PauliAxis axis) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    switch (axis) {
        case PauliAxis::Identity:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case PauliAxis::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case PauliAxis::Y:
            m(0, 1) = -kImag;
            m(1, 0) = kImag;
            break;
        case PauliAxis::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix embed(const ComplexMatrix& op, int site, int n_spins) {
    if (op.rows() != 2 || op.cols() != 2)
        throw numeric_error("embed: operator must be 2x2");
    if (site < 1 || site > n_spins)
        throw numeric_error("embed: site " + std::to_string(site) + " out of range 1.." +
                            std::to_string(n_spins));
    // Build left-to-right: site 1 is the leftmost tensor factor.
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int s = 1; s <= n_spins; ++s)
        out = kron(out, s == site ? op : ComplexMatrix::Identity(2, 2));
    return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw numeric_error("hs_inner: dimension mismatch");
    return (a.adjoint() * b).trace();
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw numeric_error("commutator: dimension mismatch");
    return a * b - b * a;
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

int spin_count_for_dim(Eigen::Index dim) {
    if (dim < 1) throw numeric_error("spin_count_for_dim: empty matrix");
    int n = 0;
    Eigen::Index d = dim;
    while (d > 1) {
        if (d % 2 != 0)
            throw numeric_error("spin_count_for_dim: dim " + std::to_string(dim) +
                                " is not a power of two");
        d /= 2;
        ++n;
    }
    return n;
}

ComplexMatrix PauliString::matrix() const {
    const int n = static_cast<int>(labels.size());
    const std::int64_t dim = std::int64_t{1} << n;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) {
        std::int64_t row = 0;
        Complex v;
        string_column_action(labels, col, row, v);
        m(row, col) = v;
    }
    return m;
}

PauliString pauli_string_at(int n_spins, std::int64_t index) {
    PauliString s;
    s.labels.resize(n_spins);
    for (int site = n_spins - 1; site >= 0; --site) {
        s.labels[site] = static_cast<PauliAxis>(index & 3);
        index >>= 2;
    }
    return s;
}

PauliCoefficients to_pauli_coeffs(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw numeric_error("to_pauli_coeffs: matrix not square");
    const int n = spin_count_for_dim(a.rows());
    const std::int64_t dim = a.rows();
    const std::int64_t n_strings = std::int64_t{1} << (2 * n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));

    PauliCoefficients out;
    out.n_spins = n;
    out.coeffs.resize(n_strings);
    std::vector<PauliAxis> labels(n);
    for (std::int64_t p = 0; p < n_strings; ++p) {
        std::int64_t idx = p;
        for (int site = n - 1; site >= 0; --site) {
            labels[site] = static_cast<PauliAxis>(idx & 3);
            idx >>= 2;
        }
        // tr(P A) = sum_col value(col) * A(col, row(col)).
        Complex tr = 0.0;
        for (std::int64_t col = 0; col < dim; ++col) {
            std::int64_t row = 0;
            Complex v;
            string_column_action(labels, col, row, v);
            tr += v * a(col, row);
        }
        out.coeffs(p) = tr * scale;
    }
    return out;
}

ComplexMatrix from_pauli_coeffs(const PauliCoefficients& c) {
    const int n = c.n_spins;
    const std::int64_t dim = std::int64_t{1} << n;
    const std::int64_t n_strings = std::int64_t{1} << (2 * n);
    if (c.coeffs.size() != n_strings)
        throw numeric_error("from_pauli_coeffs: coefficient count does not match spin count");
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));

    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    std::vector<PauliAxis> labels(n);
    for (std::int64_t p = 0; p < n_strings; ++p) {
        const Complex coef = c.coeffs(p);
        if (coef == Complex{0.0, 0.0}) continue;
        std::int64_t idx = p;
        for (int site = n - 1; site >= 0; --site) {
            labels[site] = static_cast<PauliAxis>(idx & 3);
            idx >>= 2;
        }
        for (std::int64_t col = 0; col < dim; ++col) {
            std::int64_t row = 0;
            Complex v;
            string_column_action(labels, col, row, v);
            a(row, col) += coef * scale * v;
        }
    }
    return a;
}

RealVector real_coeffs(const PauliCoefficients& c, double tol) {
    const double imag_max = c.coeffs.imag().cwiseAbs().maxCoeff();
    if (imag_max > tol)
        throw numeric_error("real_coeffs: imaginary residue " + std::to_string(imag_max) +
                            " exceeds tolerance (operator not hermitian?)");
    return c.coeffs.real();
}

ComplexMatrix matrix_from_real_coeffs(const RealVector& coeffs, int n_spins) {
    PauliCoefficients c;
    c.n_spins = n_spins;
    c.coeffs = coeffs.cast<Complex>();
    return from_pauli_coeffs(c);
}

}  // namespace koopspin
