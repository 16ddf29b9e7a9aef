#include "koopspin/rrr_gradient_reference.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <random>

namespace koopspin {

namespace {

RealMatrix truncate_rank(const RealMatrix& t, int rank) {
    Eigen::JacobiSVD<RealMatrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::Index r = std::min<Eigen::Index>(rank, svd.singularValues().size());
    return svd.matrixU().leftCols(r) * svd.singularValues().head(r).asDiagonal() *
           svd.matrixV().leftCols(r).transpose();
}

double objective(const RealMatrix& t, const RealMatrix& x, const RealMatrix& y, double reg) {
    return (y - t * x).squaredNorm() / static_cast<double>(x.cols()) + reg * t.squaredNorm();
}

double run_pgd(RealMatrix t, const RealMatrix& x, const RealMatrix& y, int rank, double reg,
               const RealMatrix& cx, const RealMatrix& cyx, double step) {
    double j = objective(t, x, y, reg);
    for (int iter = 0; iter < 20000; ++iter) {
        const RealMatrix grad = 2.0 * (t * cx - cyx);
        t = truncate_rank(t - step * grad, rank);
        const double j_new = objective(t, x, y, reg);
        if (j - j_new < 1e-14 * std::max(1.0, j)) {
            j = std::min(j, j_new);
            break;
        }
        j = j_new;
    }
    return j;
}

}  // namespace

double rrr_pgd_best_objective(const RealMatrix& x, const RealMatrix& y, int rank, double reg,
                              int n_starts, unsigned seed) {
    const Eigen::Index d = x.rows();
    const double n = static_cast<double>(x.cols());
    const RealMatrix cx = x * x.transpose() / n + reg * RealMatrix::Identity(d, d);
    const RealMatrix cyx = y * x.transpose() / n;
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(cx, Eigen::EigenvaluesOnly);
    const double step = 1.0 / (2.0 * es.eigenvalues().maxCoeff());

    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double best = run_pgd(RealMatrix::Zero(d, d), x, y, rank, reg, cx, cyx, step);
    for (int s = 0; s < n_starts; ++s) {
        RealMatrix t0(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) t0(i, j) = gauss(rng);
        best = std::min(best, run_pgd(truncate_rank(t0, rank), x, y, rank, reg, cx, cyx, step));
    }
    return best;
}

}  // namespace koopspin
