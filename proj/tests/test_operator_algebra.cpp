#include "koopspin/errors.hpp"
#include "koopspin/operator_algebra.hpp"

#include <doctest.h>

#include <random>

using namespace koopspin;

namespace {

ComplexMatrix random_matrix(Eigen::Index dim, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Complex{gauss(rng), gauss(rng)};
    return m;
}

ComplexMatrix random_hermitian(Eigen::Index dim, std::mt19937& rng) {
    const ComplexMatrix m = random_matrix(dim, rng);
    return 0.5 * (m + m.adjoint());
}

}  // namespace

TEST_CASE("pauli matrices") {
    const ComplexMatrix sx = pauli_matrix(PauliAxis::X);
    const ComplexMatrix sy = pauli_matrix(PauliAxis::Y);
    const ComplexMatrix sz = pauli_matrix(PauliAxis::Z);

    CHECK(sz(0, 0) == Complex{1.0, 0.0});
    CHECK(sz(1, 1) == Complex{-1.0, 0.0});
    CHECK(sz(0, 1) == Complex{0.0, 0.0});

    // x y = i z
    CHECK((sx * sy - Complex{0.0, 1.0} * sz).norm() == doctest::Approx(0.0));
    CHECK((sx * sx).trace().real() == doctest::Approx(2.0));
}

TEST_CASE("embed") {
    const ComplexMatrix sz = pauli_matrix(PauliAxis::Z);
    const ComplexMatrix e = embed(sz, 1, 2);
    CHECK(e(0, 0) == Complex{1.0, 0.0});
    CHECK(e(1, 1) == Complex{1.0, 0.0});
    CHECK(e(2, 2) == Complex{-1.0, 0.0});
    CHECK(e(3, 3) == Complex{-1.0, 0.0});

    const ComplexMatrix id = embed(pauli_matrix(PauliAxis::Identity), 2, 3);
    CHECK((id - ComplexMatrix::Identity(8, 8)).norm() == doctest::Approx(0.0));

    // disjoint sites commute
    const ComplexMatrix a = embed(sz, 1, 3);
    const ComplexMatrix b = embed(pauli_matrix(PauliAxis::X), 2, 3);
    CHECK(commutator(a, b).norm() == doctest::Approx(0.0));

    // trace scaling
    CHECK(embed(sz + ComplexMatrix::Identity(2, 2), 2, 3).trace().real() ==
          doctest::Approx(2.0 * 4.0));

    CHECK_THROWS_AS(embed(sz, 0, 2), numeric_error);
    CHECK_THROWS_AS(embed(sz, 3, 2), numeric_error);
}

TEST_CASE("kron") {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    CHECK((kron(i2, i2) - ComplexMatrix::Identity(4, 4)).norm() == doctest::Approx(0.0));

    std::mt19937 rng(7);
    const ComplexMatrix a = random_matrix(2, rng);
    const ComplexMatrix b = random_matrix(3, rng);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);

    // sigma_x (x) sigma_x maps |00> to |11>
    const ComplexMatrix xx = kron(pauli_matrix(PauliAxis::X), pauli_matrix(PauliAxis::X));
    ComplexVector e0 = ComplexVector::Zero(4);
    e0(0) = 1.0;
    const ComplexVector out = xx * e0;
    CHECK(std::abs(out(3) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(out.head(3).norm() < 1e-15);
}

TEST_CASE("hs_inner") {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    CHECK(hs_inner(i2, i2).real() == doctest::Approx(2.0));
    CHECK(std::abs(hs_inner(pauli_matrix(PauliAxis::X), pauli_matrix(PauliAxis::Y))) < 1e-15);

    std::mt19937 rng(11);
    const ComplexMatrix a = random_matrix(4, rng);
    const Complex self = hs_inner(a, a);
    CHECK(self.real() >= 0.0);
    CHECK(std::abs(self.imag()) < 1e-12);

    CHECK_THROWS_AS(hs_inner(i2, ComplexMatrix::Identity(4, 4)), numeric_error);
}

TEST_CASE("commutator, dagger, frobenius") {
    const ComplexMatrix sx = pauli_matrix(PauliAxis::X);
    const ComplexMatrix sy = pauli_matrix(PauliAxis::Y);
    const ComplexMatrix sz = pauli_matrix(PauliAxis::Z);
    CHECK((commutator(sx, sy) - Complex{0.0, 2.0} * sz).norm() < 1e-15);
    CHECK(commutator(sx, sx).norm() == doctest::Approx(0.0));
    CHECK(frobenius_norm(ComplexMatrix::Identity(4, 4)) == doctest::Approx(2.0));

    std::mt19937 rng(3);
    const ComplexMatrix a = random_matrix(4, rng);
    CHECK((dagger(dagger(a)) - a).norm() < 1e-15);
    CHECK(frobenius_norm(a) == doctest::Approx(std::sqrt(hs_inner(a, a).real())));
}

TEST_CASE("pauli strings are orthogonal, exhaustive up to N=3") {
    for (int n = 1; n <= 3; ++n) {
        const std::int64_t count = std::int64_t{1} << (2 * n);
        const double dim = std::pow(2.0, n);
        for (std::int64_t p = 0; p < count; ++p) {
            const ComplexMatrix mp = pauli_string_at(n, p).matrix();
            // hermitian and unitary
            CHECK((mp - mp.adjoint()).norm() < 1e-14);
            CHECK((mp * mp - ComplexMatrix::Identity(mp.rows(), mp.cols())).norm() < 1e-14);
            for (std::int64_t q = p; q < count; ++q) {
                const Complex ip = hs_inner(mp, pauli_string_at(n, q).matrix());
                if (p == q)
                    CHECK(std::abs(ip - Complex{dim, 0.0}) < 1e-12);
                else
                    CHECK(std::abs(ip) < 1e-12);
            }
        }
    }
}

TEST_CASE("pauli coefficient round trips") {
    // maximally mixed single spin: only the identity coefficient
    const ComplexMatrix mixed = 0.5 * ComplexMatrix::Identity(2, 2);
    const PauliCoefficients c = to_pauli_coeffs(mixed);
    CHECK(std::abs(c.coeffs(0) - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
    CHECK(c.coeffs.tail(3).norm() < 1e-15);

    std::mt19937 rng(2024);
    for (int n = 1; n <= 5; ++n) {
        const Eigen::Index dim = Eigen::Index{1} << n;
        for (int rep = 0; rep < 20; ++rep) {
            const ComplexMatrix a = random_matrix(dim, rng);
            const PauliCoefficients ca = to_pauli_coeffs(a);
            CHECK((from_pauli_coeffs(ca) - a).cwiseAbs().maxCoeff() < 1e-12);
            // trace sits in the identity coefficient
            CHECK(std::abs(a.trace() - std::sqrt(static_cast<double>(dim)) * ca.coeffs(0)) <
                  1e-12);
        }
    }
}

TEST_CASE("parseval and hermitian realness") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_matrix(8, rng);
        const ComplexMatrix b = random_matrix(8, rng);
        const Complex lhs = hs_inner(a, b);
        const Complex rhs = to_pauli_coeffs(a).coeffs.dot(to_pauli_coeffs(b).coeffs);
        CHECK(std::abs(lhs - rhs) < 1e-10);

        const ComplexMatrix h = random_hermitian(8, rng);
        CHECK(to_pauli_coeffs(h).coeffs.imag().cwiseAbs().maxCoeff() < 1e-12);
        CHECK_NOTHROW(real_coeffs(to_pauli_coeffs(h)));
    }
}

TEST_CASE("non power-of-two dimension is rejected") {
    CHECK_THROWS_AS(to_pauli_coeffs(ComplexMatrix::Identity(3, 3)), numeric_error);
    CHECK_THROWS_AS(spin_count_for_dim(6), numeric_error);
    CHECK(spin_count_for_dim(32) == 5);
}

TEST_CASE("real_coeffs rejects non-hermitian input") {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 1) = Complex{1.0, 0.0};  // sigma_plus-like, not hermitian
    CHECK_THROWS_AS(real_coeffs(to_pauli_coeffs(a)), numeric_error);
}
