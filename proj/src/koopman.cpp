#include "koopspin/koopman.hpp"

#include "koopspin/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace koopspin {

namespace {

// Deterministic SVD sign convention: first nonzero component of every left
// singular vector is made positive, compensating on the right factor.
void fix_svd_signs(RealMatrix& u, RealMatrix& v) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        const double colmax = u.col(j).cwiseAbs().maxCoeff();
        if (colmax == 0.0) continue;
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            if (std::abs(u(i, j)) > 1e-12 * colmax) {
                if (u(i, j) < 0.0) {
                    u.col(j) = -u.col(j);
                    v.col(j) = -v.col(j);
                }
                break;
            }
        }
    }
}

}  // namespace

KoopmanEstimator fit_rrr(const RealMatrix& x, const RealMatrix& y, int rank, double reg) {
    const Eigen::Index d = x.rows();
    const Eigen::Index n = x.cols();
    if (n < 1) throw config_error("fit_rrr: need at least one training pair");
    if (y.rows() != d || y.cols() != n) throw numeric_error("fit_rrr: x/y shape mismatch");
    if (rank < 1) throw config_error("fit_rrr: rank must be >= 1");
    if (rank > d)
        throw config_error("fit_rrr: rank " + std::to_string(rank) + " exceeds feature_dim " +
                           std::to_string(d));
    if (!(reg > 0.0)) throw config_error("fit_rrr: regularization must be > 0");

    // Whitening: C_X = (1/n) X X^T + reg I = P diag(s^2) P^T + reg I from the
    // thin SVD of X / sqrt(n), so W = C_X^{-1/2} never needs a dense d x d
    // eigendecomposition.
    Eigen::BDCSVD<RealMatrix> xsvd(x / std::sqrt(static_cast<double>(n)),
                                   Eigen::ComputeThinU);
    const RealMatrix& p = xsvd.matrixU();
    const RealVector s = xsvd.singularValues();
    const double inv_sqrt_reg = 1.0 / std::sqrt(reg);
    RealVector shift(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
        shift(i) = 1.0 / std::sqrt(s(i) * s(i) + reg) - inv_sqrt_reg;
    const auto apply_w = [&](const RealMatrix& m) -> RealMatrix {
        return p * (shift.asDiagonal() * (p.transpose() * m)) + inv_sqrt_reg * m;
    };

    // G = C_YX W = (Y/n) (W X)^T; thin SVD of the outer product via QR.
    const RealMatrix a = y / static_cast<double>(n);
    const RealMatrix b = apply_w(x);
    const Eigen::Index m = std::min(d, n);
    Eigen::HouseholderQR<RealMatrix> qra(a);
    Eigen::HouseholderQR<RealMatrix> qrb(b);
    const RealMatrix qa = qra.householderQ() * RealMatrix::Identity(d, m);
    const RealMatrix qb = qrb.householderQ() * RealMatrix::Identity(d, m);
    const RealMatrix ra = qra.matrixQR().topRows(m).triangularView<Eigen::Upper>();
    const RealMatrix rb = qrb.matrixQR().topRows(m).triangularView<Eigen::Upper>();

    Eigen::BDCSVD<RealMatrix> core(ra * rb.transpose(),
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
    RealMatrix u = qa * core.matrixU();
    RealMatrix v = qb * core.matrixV();
    const RealVector sv = core.singularValues();
    fix_svd_signs(u, v);

    const Eigen::Index r_eff = std::min<Eigen::Index>(rank, m);
    const RealMatrix ur = u.leftCols(r_eff);
    const RealMatrix wvr = apply_w(v.leftCols(r_eff));
    const RealMatrix compressed = sv.head(r_eff).asDiagonal() * wvr.transpose();

    KoopmanEstimator est;
    est.feature_dim = d;
    est.rank = rank;
    est.reg = reg;
    est.range_basis = ur;
    est.compressed_map = compressed;
    est.transition = ur * compressed;
    return est;
}

KoopmanEstimator fit_rrr(const std::vector<std::pair<RealVector, RealVector>>& pairs, int rank,
                         double reg) {
    if (pairs.empty()) throw config_error("fit_rrr: need at least one training pair");
    const Eigen::Index d = pairs.front().first.size();
    RealMatrix x(d, static_cast<Eigen::Index>(pairs.size()));
    RealMatrix y(d, static_cast<Eigen::Index>(pairs.size()));
    for (Eigen::Index k = 0; k < x.cols(); ++k) {
        x.col(k) = pairs[static_cast<std::size_t>(k)].first;
        y.col(k) = pairs[static_cast<std::size_t>(k)].second;
    }
    return fit_rrr(x, y, rank, reg);
}

KoopmanEstimator estimator_from_transition(RealMatrix transition, int rank, double reg) {
    const Eigen::Index d = transition.rows();
    if (transition.cols() != d) throw numeric_error("estimator: transition matrix not square");
    Eigen::ColPivHouseholderQR<RealMatrix> qr(transition);
    qr.setThreshold(1e-10);
    const Eigen::Index k = std::min<Eigen::Index>(rank, std::max<Eigen::Index>(qr.rank(), 1));
    const RealMatrix q = qr.householderQ() * RealMatrix::Identity(d, k);

    KoopmanEstimator est;
    est.feature_dim = d;
    est.rank = rank;
    est.reg = reg;
    est.range_basis = q;
    est.compressed_map = q.transpose() * transition;
    est.transition = std::move(transition);
    return est;
}

double rrr_objective(const RealMatrix& t, const RealMatrix& x, const RealMatrix& y, double reg) {
    const double n = static_cast<double>(x.cols());
    return (y - t * x).squaredNorm() / n + reg * t.squaredNorm();
}

int numerical_rank(const KoopmanEstimator& est) {
    // sigma(T) = sigma(compressed_map) up to the orthonormal range basis.
    Eigen::BDCSVD<RealMatrix> svd(est.compressed_map);
    const RealVector sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-10 * sv(0)) ++r;
    return r;
}

RealVector forecast_state(const KoopmanEstimator& est, const RealVector& x0, long t) {
    if (t < 0) throw config_error("forecast_state: negative horizon");
    if (x0.size() != est.feature_dim) throw numeric_error("forecast_state: dimension mismatch");
    RealVector x = x0;
    for (long k = 0; k < t; ++k) x = est.range_basis * (est.compressed_map * x);
    return x;
}

double forecast_observable(const KoopmanEstimator& est, const RealVector& f, const RealVector& x0,
                           long t) {
    if (f.size() != est.feature_dim) throw numeric_error("forecast_observable: bad observable");
    return f.dot(forecast_state(est, x0, t));
}

std::vector<EigenTriplet> eigen_triplets(const KoopmanEstimator& est) {
    const RealMatrix compression = est.compressed_map * est.range_basis;  // k x k
    Eigen::EigenSolver<RealMatrix> es(compression);
    if (es.info() != Eigen::Success)
        throw numeric_error("eigen_triplets: eigensolver did not converge");
    const Eigen::MatrixXcd vecs = es.eigenvectors();
    const Eigen::VectorXcd vals = es.eigenvalues();

    // Diagonalizability check: a near-singular eigenvector matrix means the
    // residual floor cannot be reached (Jordan-block suspicion). A computed
    // Jordan block typically shows a condition of ~1/sqrt(eps), so the
    // threshold must sit well above machine precision.
    Eigen::JacobiSVD<Eigen::MatrixXcd> vsvd(vecs);
    const RealVector vsv = vsvd.singularValues();
    if (vsv(vsv.size() - 1) < 1e-7 * vsv(0))
        throw numeric_error("eigen_triplets: restriction appears defective "
                            "(eigenvector matrix condition " +
                            std::to_string(vsv(0) / vsv(vsv.size() - 1)) + ")");
    const Eigen::MatrixXcd vinv = vecs.inverse();
    const Eigen::MatrixXcd left_rows = vinv * est.compressed_map.cast<Complex>();
    const Eigen::MatrixXcd right_cols = est.range_basis.cast<Complex>() * vecs;

    const Eigen::Index k = vals.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return std::abs(vals(a)) > std::abs(vals(b));
    });

    std::vector<EigenTriplet> triplets;
    triplets.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index idx : order) {
        EigenTriplet trip;
        trip.eigenvalue = vals(idx);
        ComplexVector psi = left_rows.row(idx).transpose();
        const double norm = psi.norm();
        if (norm == 0.0)
            throw numeric_error("eigen_triplets: vanishing left eigenvector");
        psi /= norm;
        // Phase convention: largest-magnitude component real positive.
        Eigen::Index pk = 0;
        psi.cwiseAbs().maxCoeff(&pk);
        psi *= std::conj(psi(pk) / std::abs(psi(pk)));
        const ComplexVector v = right_cols.col(idx);
        const Complex pairing = (v.transpose() * psi)(0);
        if (std::abs(pairing) < 1e-9 * v.norm())
            throw numeric_error("eigen_triplets: degenerate left/right pairing");
        trip.psi = psi;
        trip.xi = v.conjugate() * std::conj(1.0 / pairing);
        triplets.push_back(std::move(trip));
    }
    return triplets;
}

ModeDecomposition mode_decomposition(const std::vector<EigenTriplet>& triplets,
                                     const RealVector& f, const RealVector& x0) {
    const ComplexVector fc = f.cast<Complex>();
    const ComplexVector xc = x0.cast<Complex>();
    ModeDecomposition modes;
    for (const auto& trip : triplets) {
        modes.eigenvalues.push_back(trip.eigenvalue);
        modes.amplitudes.push_back(trip.xi.dot(fc));                  // <xi, f>
        modes.initial_values.push_back((trip.psi.transpose() * xc)(0));  // <conj(psi), x0>
    }
    return modes;
}

double mode_reconstruction(const ModeDecomposition& modes, long t) {
    if (t < 0) throw config_error("mode_reconstruction: negative horizon");
    Complex sum = 0.0;
    for (std::size_t i = 0; i < modes.eigenvalues.size(); ++i) {
        Complex pw = 1.0;
        for (long k = 0; k < t; ++k) pw *= modes.eigenvalues[i];
        sum += pw * modes.amplitudes[i] * modes.initial_values[i];
    }
    if (std::abs(sum.imag()) > 1e-8 * std::max(1.0, std::abs(sum.real())))
        throw numeric_error("mode_reconstruction: imaginary residue " +
                            std::to_string(sum.imag()));
    return sum.real();
}

std::vector<ModeSummary> decay_rates_frequencies(const std::vector<EigenTriplet>& triplets,
                                                 double dt) {
    if (!(dt > 0.0)) throw config_error("decay_rates_frequencies: dt must be > 0");
    std::vector<ModeSummary> out;
    out.reserve(triplets.size());
    for (const auto& trip : triplets) {
        ModeSummary m;
        m.eigenvalue = trip.eigenvalue;
        m.abs_lambda = std::abs(trip.eigenvalue);
        double a = std::arg(trip.eigenvalue);
        if (a <= -M_PI) a += 2.0 * M_PI;  // arg in (-pi, pi]
        m.arg_lambda = a;
        m.decay_rate = (m.abs_lambda == 0.0) ? std::numeric_limits<double>::infinity()
                                             : -std::log(m.abs_lambda) / dt;
        m.frequency = a / (2.0 * M_PI * dt);
        out.push_back(m);
    }
    return out;
}

const EigenTriplet& steady_mode(const std::vector<EigenTriplet>& triplets) {
    if (triplets.empty()) throw numeric_error("steady_mode: no modes");
    std::size_t best = 0;
    double best_dist = std::abs(triplets[0].eigenvalue - Complex{1.0, 0.0});
    for (std::size_t i = 1; i < triplets.size(); ++i) {
        const double dist = std::abs(triplets[i].eigenvalue - Complex{1.0, 0.0});
        if (dist < best_dist) {
            best = i;
            best_dist = dist;
        }
    }
    return triplets[best];
}

ComplexMatrix eigenfunction_operator(const EigenTriplet& triplet, int n_spins) {
    PauliCoefficients c;
    c.n_spins = n_spins;
    c.coeffs = triplet.psi;
    return from_pauli_coeffs(c);
}

double symmetry_residual(const ComplexMatrix& psi_op, const ComplexMatrix& s) {
    const double np = frobenius_norm(psi_op);
    const double ns = frobenius_norm(s);
    if (np == 0.0 || ns == 0.0) throw numeric_error("symmetry_residual: zero-norm input");
    return frobenius_norm(commutator(psi_op, s)) / (np * ns);
}

}  // namespace koopspin
