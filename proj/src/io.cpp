#include "koopspin/io.hpp"

#include "koopspin/errors.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace koopspin {

namespace {

constexpr const char* kBasisOrder = "IXYZ-lex-site1-major";

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    return in;
}

// Header block: "key value" lines until (and excluding) the first record.
std::map<std::string, std::string> read_header(std::ifstream& in, int n_keys,
                                               const std::string& path) {
    std::map<std::string, std::string> header;
    std::string line;
    for (int i = 0; i < n_keys; ++i) {
        if (!std::getline(in, line)) throw io_error("truncated header in '" + path + "'");
        std::istringstream ls(line);
        std::string key, value;
        ls >> key;
        std::getline(ls, value);
        const auto a = value.find_first_not_of(" \t");
        header[key] = (a == std::string::npos) ? "" : value.substr(a);
    }
    return header;
}

const std::string& require(const std::map<std::string, std::string>& header,
                           const std::string& key, const std::string& path) {
    const auto it = header.find(key);
    if (it == header.end()) throw io_error("missing header key '" + key + "' in '" + path + "'");
    return it->second;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void stream_trajectory(std::ostream& out, const Trajectory& traj) {
    const auto& p = traj.params;
    out << "N " << p.n_spins << "\n"
        << "J_par " << format_double(p.j_par) << "\n"
        << "J_perp " << format_double(p.j_perp) << "\n"
        << "gamma " << format_double(p.gamma) << "\n"
        << "dt " << format_double(p.dt) << "\n"
        << "steps " << p.steps << "\n"
        << "substeps " << p.substeps << "\n"
        << "initial_label " << traj.initial_label << "\n"
        << "basis_order " << kBasisOrder << "\n";
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        out << format_double(traj.times[k]);
        const RealVector& x = traj.states[k];
        for (Eigen::Index i = 0; i < x.size(); ++i) out << ' ' << format_double(x(i));
        out << "\n";
    }
}

void stream_estimator(std::ostream& out, const EstimatorFile& est) {
    out << "feature_dim " << est.feature_dim << "\n"
        << "rank " << est.rank << "\n"
        << "reg " << format_double(est.reg) << "\n"
        << "dt " << format_double(est.dt) << "\n";
    for (Eigen::Index i = 0; i < est.transition.rows(); ++i) {
        for (Eigen::Index j = 0; j < est.transition.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(est.transition(i, j));
        }
        out << "\n";
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    auto in = open_in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trajectory_to_string(const Trajectory& traj) {
    std::ostringstream out;
    stream_trajectory(out, traj);
    return out.str();
}

std::string estimator_to_string(const EstimatorFile& est) {
    std::ostringstream out;
    stream_estimator(out, est);
    return out.str();
}

void write_trajectory(const std::string& path, const Trajectory& traj) {
    auto out = open_out(path);
    stream_trajectory(out, traj);
    if (!out) throw io_error("write failure on '" + path + "'");
}

Trajectory read_trajectory(const std::string& path) {
    auto in = open_in(path);
    const auto header = read_header(in, 9, path);
    Trajectory traj;
    traj.params.n_spins = std::stoi(require(header, "N", path));
    traj.params.j_par = std::stod(require(header, "J_par", path));
    traj.params.j_perp = std::stod(require(header, "J_perp", path));
    traj.params.gamma = std::stod(require(header, "gamma", path));
    traj.params.dt = std::stod(require(header, "dt", path));
    traj.params.steps = std::stoi(require(header, "steps", path));
    traj.params.substeps = std::stoi(require(header, "substeps", path));
    traj.initial_label = require(header, "initial_label", path);
    if (require(header, "basis_order", path) != kBasisOrder)
        throw io_error("unsupported basis_order in '" + path + "'");

    const Eigen::Index dim = Eigen::Index{1} << (2 * traj.params.n_spins);
    for (int k = 0; k < traj.params.steps; ++k) {
        double t = 0.0;
        if (!(in >> t)) throw io_error("truncated snapshot " + std::to_string(k + 1) + " in '" +
                                       path + "'");
        RealVector x(dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            if (!(in >> x(i)))
                throw io_error("truncated snapshot " + std::to_string(k + 1) + " in '" + path +
                               "'");
        traj.times.push_back(t);
        traj.states.push_back(std::move(x));
    }
    return traj;
}

void write_estimator(const std::string& path, const EstimatorFile& est) {
    auto out = open_out(path);
    stream_estimator(out, est);
    if (!out) throw io_error("write failure on '" + path + "'");
}

EstimatorFile read_estimator(const std::string& path) {
    auto in = open_in(path);
    const auto header = read_header(in, 4, path);
    EstimatorFile est;
    est.feature_dim = std::stoll(require(header, "feature_dim", path));
    est.rank = std::stoi(require(header, "rank", path));
    est.reg = std::stod(require(header, "reg", path));
    est.dt = std::stod(require(header, "dt", path));
    est.transition.resize(est.feature_dim, est.feature_dim);
    for (Eigen::Index i = 0; i < est.feature_dim; ++i)
        for (Eigen::Index j = 0; j < est.feature_dim; ++j)
            if (!(in >> est.transition(i, j)))
                throw io_error("truncated transition matrix in '" + path + "'");
    return est;
}

void write_forecast_csv(const std::string& path, const std::vector<ForecastRow>& rows) {
    auto out = open_out(path);
    out << "time,observable_id,truth,forecast\n";
    for (const auto& row : rows)
        out << format_double(row.time) << ',' << row.observable_id << ','
            << format_double(row.truth) << ',' << format_double(row.forecast) << "\n";
    if (!out) throw io_error("write failure on '" + path + "'");
}

void write_modes_csv(const std::string& path, const std::vector<ModeSummary>& modes) {
    auto out = open_out(path);
    out << "index,re_lambda,im_lambda,abs_lambda,decay_rate,frequency\n";
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const auto& m = modes[i];
        out << (i + 1) << ',' << format_double(m.eigenvalue.real()) << ','
            << format_double(m.eigenvalue.imag()) << ',' << format_double(m.abs_lambda) << ','
            << format_double(m.decay_rate) << ',' << format_double(m.frequency) << "\n";
    }
    if (!out) throw io_error("write failure on '" + path + "'");
}

}  // namespace koopspin
