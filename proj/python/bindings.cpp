// pybind11 surface over the core library: operator algebra, the Lindblad
// simulator and the reduced-rank Koopman analysis. Matrices and vectors map
// to numpy arrays via the Eigen caster.

#include "koopspin/errors.hpp"
#include "koopspin/koopman.hpp"
#include "koopspin/lindblad.hpp"
#include "koopspin/operator_algebra.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace koopspin;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dissipative spin-chain simulation and reduced-rank Koopman analysis";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<io_error>(m, "IOError", PyExc_OSError);

    py::enum_<PauliAxis>(m, "PauliAxis")
        .value("I", PauliAxis::Identity)
        .value("X", PauliAxis::X)
        .value("Y", PauliAxis::Y)
        .value("Z", PauliAxis::Z);

    m.def("pauli_matrix", &pauli_matrix, py::arg("axis"));
    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("embed", &embed, py::arg("op"), py::arg("site"), py::arg("n_spins"));
    m.def("hs_inner", &hs_inner, py::arg("a"), py::arg("b"));
    m.def("commutator", &commutator, py::arg("a"), py::arg("b"));
    m.def("frobenius_norm", &frobenius_norm, py::arg("a"));

    m.def(
        "to_pauli_coeffs", [](const ComplexMatrix& a) { return to_pauli_coeffs(a).coeffs; },
        py::arg("a"), "Coefficients of `a` in the orthonormal Pauli-string basis");
    m.def(
        "from_pauli_coeffs",
        [](const ComplexVector& coeffs) {
            PauliCoefficients c;
            c.n_spins = spin_count_for_dim(coeffs.size()) / 2;
            c.coeffs = coeffs;
            return from_pauli_coeffs(c);
        },
        py::arg("coeffs"));
    m.def(
        "real_coeffs",
        [](const ComplexMatrix& a, double tol) { return real_coeffs(to_pauli_coeffs(a), tol); },
        py::arg("a"), py::arg("tol") = 1e-10,
        "Real Pauli coefficients of a hermitian operator");
    m.def("matrix_from_real_coeffs", &matrix_from_real_coeffs, py::arg("coeffs"),
          py::arg("n_spins"));

    py::class_<SpinChainParams>(m, "SpinChainParams")
        .def(py::init<>())
        .def_readwrite("n_spins", &SpinChainParams::n_spins)
        .def_readwrite("j_par", &SpinChainParams::j_par)
        .def_readwrite("j_perp", &SpinChainParams::j_perp)
        .def_readwrite("gamma", &SpinChainParams::gamma)
        .def_readwrite("dt", &SpinChainParams::dt)
        .def_readwrite("steps", &SpinChainParams::steps)
        .def_readwrite("substeps", &SpinChainParams::substeps)
        .def("validate", &SpinChainParams::validate);

    py::class_<LindbladModel>(m, "LindbladModel")
        .def(py::init<>())
        .def_readwrite("hamiltonian", &LindbladModel::hamiltonian)
        .def_readwrite("collapse_ops", &LindbladModel::collapse_ops);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("params", &Trajectory::params)
        .def_readonly("initial_label", &Trajectory::initial_label)
        .def_readonly("times", &Trajectory::times)
        .def_readonly("states", &Trajectory::states);

    m.def("build_hamiltonian", &build_hamiltonian, py::arg("params"));
    m.def("build_dephasing_ops", &build_dephasing_ops, py::arg("params"));
    m.def("build_model", &build_model, py::arg("params"));
    m.def("lindblad_rhs", &lindblad_rhs, py::arg("model"), py::arg("rho"));
    m.def("initial_state", &initial_state, py::arg("spec"));
    m.def(
        "integrate",
        [](const LindbladModel& model, const ComplexMatrix& rho0, const SpinChainParams& params,
           const std::string& label) { return integrate(model, rho0, params, label); },
        py::arg("model"), py::arg("rho0"), py::arg("params"), py::arg("initial_label") = "");

    m.def("spin_polarization_op", &spin_polarization_op, py::arg("site"), py::arg("n_spins"));
    m.def("total_sz_op", &total_sz_op, py::arg("n_spins"));
    m.def("spin_current_op", &spin_current_op, py::arg("site"), py::arg("params"));
    m.def("expectation", &expectation, py::arg("a"), py::arg("rho"), py::arg("tol") = 1e-10);

    py::class_<DataSplit>(m, "DataSplit")
        .def_readonly("n_train", &DataSplit::n_train)
        .def_readonly("train_x", &DataSplit::train_x)
        .def_readonly("train_y", &DataSplit::train_y)
        .def_readonly("test_times", &DataSplit::test_times)
        .def_readonly("test_states", &DataSplit::test_states);

    m.def("dataset_split", &dataset_split, py::arg("trajectory"), py::arg("train_fraction"));

    py::class_<KoopmanEstimator>(m, "KoopmanEstimator")
        .def_readonly("feature_dim", &KoopmanEstimator::feature_dim)
        .def_readonly("rank", &KoopmanEstimator::rank)
        .def_readonly("reg", &KoopmanEstimator::reg)
        .def_readonly("transition", &KoopmanEstimator::transition)
        .def_readonly("range_basis", &KoopmanEstimator::range_basis)
        .def_readonly("compressed_map", &KoopmanEstimator::compressed_map);

    m.def(
        "fit_rrr",
        [](const RealMatrix& x, const RealMatrix& y, int rank, double reg) {
            return fit_rrr(x, y, rank, reg);
        },
        py::arg("x"), py::arg("y"), py::arg("rank"), py::arg("reg"));
    m.def("estimator_from_transition", &estimator_from_transition, py::arg("transition"),
          py::arg("rank"), py::arg("reg"));
    m.def("rrr_objective", &rrr_objective, py::arg("t"), py::arg("x"), py::arg("y"),
          py::arg("reg"));
    m.def("numerical_rank", &numerical_rank, py::arg("estimator"));
    m.def("forecast_state", &forecast_state, py::arg("estimator"), py::arg("x0"), py::arg("t"));
    m.def("forecast_observable", &forecast_observable, py::arg("estimator"), py::arg("f"),
          py::arg("x0"), py::arg("t"));

    py::class_<EigenTriplet>(m, "EigenTriplet")
        .def_readonly("eigenvalue", &EigenTriplet::eigenvalue)
        .def_readonly("psi", &EigenTriplet::psi)
        .def_readonly("xi", &EigenTriplet::xi);

    m.def("eigen_triplets", &eigen_triplets, py::arg("estimator"));

    py::class_<ModeDecomposition>(m, "ModeDecomposition")
        .def_readonly("eigenvalues", &ModeDecomposition::eigenvalues)
        .def_readonly("amplitudes", &ModeDecomposition::amplitudes)
        .def_readonly("initial_values", &ModeDecomposition::initial_values);

    m.def("mode_decomposition", &mode_decomposition, py::arg("triplets"), py::arg("f"),
          py::arg("x0"));
    m.def("mode_reconstruction", &mode_reconstruction, py::arg("modes"), py::arg("t"));

    py::class_<ModeSummary>(m, "ModeSummary")
        .def_readonly("eigenvalue", &ModeSummary::eigenvalue)
        .def_readonly("abs_lambda", &ModeSummary::abs_lambda)
        .def_readonly("arg_lambda", &ModeSummary::arg_lambda)
        .def_readonly("decay_rate", &ModeSummary::decay_rate)
        .def_readonly("frequency", &ModeSummary::frequency);

    m.def("decay_rates_frequencies", &decay_rates_frequencies, py::arg("triplets"),
          py::arg("dt"));
    m.def(
        "steady_mode",
        [](const std::vector<EigenTriplet>& triplets) { return steady_mode(triplets); },
        py::arg("triplets"), py::return_value_policy::copy);
    m.def("eigenfunction_operator", &eigenfunction_operator, py::arg("triplet"),
          py::arg("n_spins"));
    m.def("symmetry_residual", &symmetry_residual, py::arg("psi_op"), py::arg("s"));
}
