#include "koopspin/lindblad.hpp"

#include "koopspin/errors.hpp"

#include <cmath>
#include <sstream>

namespace koopspin {

namespace {

constexpr Complex kImag{0.0, 1.0};

bool is_diagonal(const ComplexMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != Complex{0.0, 0.0}) return false;
    return true;
}

void check_density_matrix(const ComplexMatrix& rho, double t) {
    std::ostringstream where;
    where << "integrate: invariant violation at t = " << t
          << " (substeps too coarse?): ";
    const double trace_err = std::abs(rho.trace() - Complex{1.0, 0.0});
    if (trace_err > 1e-9)
        throw numeric_error(where.str() + "|tr rho - 1| = " + std::to_string(trace_err));
    const double herm_err = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > 1e-10)
        throw numeric_error(where.str() + "hermiticity residue = " + std::to_string(herm_err));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (rho + rho.adjoint()),
                                                    Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -1e-8)
        throw numeric_error(where.str() + "min eigenvalue = " + std::to_string(min_eig));
}

}  // namespace

void SpinChainParams::validate() const {
    if (n_spins < 2) throw config_error("params: N must be >= 2");
    if (gamma < 0.0) throw config_error("params: gamma must be >= 0");
    if (dt <= 0.0) throw config_error("params: dt must be > 0");
    if (steps < 2) throw config_error("params: steps must be >= 2");
    if (substeps < 1) throw config_error("params: substeps must be >= 1");
}

ComplexMatrix build_hamiltonian(const SpinChainParams& params) {
    const int n = params.n_spins;
    const Eigen::Index dim = Eigen::Index{1} << n;
    const ComplexMatrix sx = pauli_matrix(PauliAxis::X);
    const ComplexMatrix sy = pauli_matrix(PauliAxis::Y);
    const ComplexMatrix sz = pauli_matrix(PauliAxis::Z);

    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (int i = 1; i < n; ++i) {
        h -= 0.5 * params.j_par * (embed(sx, i, n) * embed(sx, i + 1, n) +
                                   embed(sy, i, n) * embed(sy, i + 1, n));
        h -= 0.5 * params.j_perp * embed(sz, i, n) * embed(sz, i + 1, n);
    }
    return h;
}

std::vector<ComplexMatrix> build_dephasing_ops(const SpinChainParams& params) {
    const double amp = std::sqrt(params.gamma / 2.0);
    const ComplexMatrix sz = pauli_matrix(PauliAxis::Z);
    std::vector<ComplexMatrix> ops;
    ops.reserve(params.n_spins);
    for (int i = 1; i <= params.n_spins; ++i) ops.push_back(amp * embed(sz, i, params.n_spins));
    return ops;
}

LindbladModel build_model(const SpinChainParams& params) {
    params.validate();
    return LindbladModel{build_hamiltonian(params), build_dephasing_ops(params)};
}

ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho) {
    if (rho.rows() != model.hamiltonian.rows() || rho.cols() != model.hamiltonian.cols())
        throw numeric_error("lindblad_rhs: dimension mismatch");
    ComplexMatrix out = -kImag * commutator(model.hamiltonian, rho);
    for (const auto& l : model.collapse_ops) {
        const ComplexMatrix ldl = l.adjoint() * l;
        out += l * rho * l.adjoint() - 0.5 * (rho * ldl + ldl * rho);
    }
    return out;
}

ComplexMatrix initial_state(const std::string& spec) {
    std::vector<int> bits;  // 0 = up (sigma_z = +1), 1 = down
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        // trim
        const auto a = token.find_first_not_of(" \t");
        const auto b = token.find_last_not_of(" \t");
        token = (a == std::string::npos) ? "" : token.substr(a, b - a + 1);
        if (token == "u")
            bits.push_back(0);
        else if (token == "d")
            bits.push_back(1);
        else
            throw config_error("initial_state: bad label '" + token + "' (want u or d)");
    }
    if (bits.empty()) throw config_error("initial_state: empty spec");
    const int n = static_cast<int>(bits.size());
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::Index idx = 0;
    for (int s = 0; s < n; ++s) idx = (idx << 1) | bits[s];  // site 1 most significant
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    rho(idx, idx) = 1.0;
    return rho;
}

Trajectory integrate(const LindbladModel& model, const ComplexMatrix& rho0,
                     const SpinChainParams& params, const std::string& initial_label) {
    params.validate();
    Trajectory traj =
        integrate(model, rho0, TimeGrid{params.dt, params.steps, params.substeps}, initial_label);
    traj.params = params;
    return traj;
}

Trajectory integrate(const LindbladModel& model, const ComplexMatrix& rho0, const TimeGrid& grid,
                     const std::string& initial_label) {
    if (!(grid.dt > 0.0) || grid.steps < 1 || grid.substeps < 1)
        throw config_error("integrate: bad time grid");
    const Eigen::Index dim = model.hamiltonian.rows();
    if (rho0.rows() != dim || rho0.cols() != dim)
        throw numeric_error("integrate: initial state dimension mismatch");
    check_density_matrix(rho0, 0.0);

    // Pure-dephasing dissipators (diagonal L_k) act elementwise on rho;
    // precompute the weight matrix and skip the generic matrix products.
    bool diagonal_noise = true;
    for (const auto& l : model.collapse_ops) diagonal_noise = diagonal_noise && is_diagonal(l);
    ComplexMatrix noise_weight;
    if (diagonal_noise) {
        noise_weight = ComplexMatrix::Zero(dim, dim);
        for (const auto& l : model.collapse_ops) {
            const ComplexVector d = l.diagonal();
            for (Eigen::Index a = 0; a < dim; ++a)
                for (Eigen::Index b = 0; b < dim; ++b)
                    noise_weight(a, b) += d(a) * std::conj(d(b)) -
                                          0.5 * (std::norm(d(a)) + std::norm(d(b)));
        }
    }

    const auto rhs = [&](const ComplexMatrix& rho) -> ComplexMatrix {
        if (!diagonal_noise) return lindblad_rhs(model, rho);
        ComplexMatrix out = -kImag * commutator(model.hamiltonian, rho);
        out += noise_weight.cwiseProduct(rho);
        return out;
    };

    const double h = grid.dt / grid.substeps;
    Trajectory traj;
    traj.params.n_spins = spin_count_for_dim(dim);
    traj.params.dt = grid.dt;
    traj.params.steps = grid.steps;
    traj.params.substeps = grid.substeps;
    traj.initial_label = initial_label;
    traj.times.reserve(grid.steps);
    traj.states.reserve(grid.steps);

    ComplexMatrix rho = rho0;
    for (int k = 1; k <= grid.steps; ++k) {
        for (int s = 0; s < grid.substeps; ++s) {
            const ComplexMatrix k1 = rhs(rho);
            const ComplexMatrix k2 = rhs(rho + 0.5 * h * k1);
            const ComplexMatrix k3 = rhs(rho + 0.5 * h * k2);
            const ComplexMatrix k4 = rhs(rho + h * k3);
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        const double t = k * grid.dt;
        check_density_matrix(rho, t);
        traj.times.push_back(t);
        traj.states.push_back(real_coeffs(to_pauli_coeffs(rho)));
    }
    return traj;
}

ComplexMatrix spin_polarization_op(int site, int n_spins) {
    return 0.5 * embed(pauli_matrix(PauliAxis::Z), site, n_spins);
}

ComplexMatrix total_sz_op(int n_spins) {
    const Eigen::Index dim = Eigen::Index{1} << n_spins;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (int i = 1; i <= n_spins; ++i) out += spin_polarization_op(i, n_spins);
    return out;
}

ComplexMatrix spin_current_op(int site, const SpinChainParams& params) {
    const int n = params.n_spins;
    if (site < 1 || site > n)
        throw numeric_error("spin_current_op: site out of range");
    const ComplexMatrix sx = pauli_matrix(PauliAxis::X);
    const ComplexMatrix sy = pauli_matrix(PauliAxis::Y);
    // Ladder operators without the 1/2: sigma_pm = sigma_x +- i sigma_y.
    const ComplexMatrix sp = sx + kImag * sy;
    const ComplexMatrix sm = sx - kImag * sy;

    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix bracket = ComplexMatrix::Zero(dim, dim);
    if (site < n)  // outgoing current, absent at the right edge
        bracket += embed(sp, site, n) * embed(sm, site + 1, n) -
                   embed(sm, site, n) * embed(sp, site + 1, n);
    if (site > 1)  // incoming current, absent at the left edge
        bracket -= embed(sp, site - 1, n) * embed(sm, site, n) -
                   embed(sm, site - 1, n) * embed(sp, site, n);
    return (kImag * params.j_par / 4.0) * bracket;
}

double expectation(const ComplexMatrix& a, const ComplexMatrix& rho, double tol) {
    if (a.rows() != rho.rows() || a.cols() != rho.cols())
        throw numeric_error("expectation: dimension mismatch");
    const Complex v = (a * rho).trace();
    if (std::abs(v.imag()) > tol)
        throw numeric_error("expectation: imaginary residue " + std::to_string(v.imag()));
    return v.real();
}

DataSplit dataset_split(const Trajectory& traj, double train_fraction) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw config_error("dataset_split: train_fraction must be in (0, 1)");
    const Eigen::Index total = static_cast<Eigen::Index>(traj.states.size());
    Eigen::Index n_train =
        static_cast<Eigen::Index>(std::llround(train_fraction * static_cast<double>(total)));
    if (n_train > total) n_train = total;
    if (n_train < 2)
        throw config_error("dataset_split: need at least 2 training snapshots, got " +
                           std::to_string(n_train));
    const Eigen::Index dim = traj.states.front().size();
    DataSplit split;
    split.n_train = n_train;
    split.train_x.resize(dim, n_train - 1);
    split.train_y.resize(dim, n_train - 1);
    for (Eigen::Index k = 0; k + 1 < n_train; ++k) {
        split.train_x.col(k) = traj.states[k];
        split.train_y.col(k) = traj.states[k + 1];
    }
    for (Eigen::Index k = n_train; k < total; ++k) {
        split.test_times.push_back(traj.times[k]);
        split.test_states.push_back(traj.states[k]);
    }
    return split;
}

}  // namespace koopspin
