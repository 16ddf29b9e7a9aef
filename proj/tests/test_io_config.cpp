#include "koopspin/config.hpp"
#include "koopspin/errors.hpp"
#include "koopspin/io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

using namespace koopspin;

namespace {

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "koopspin_io_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("format_double round trips") {
    for (double v : {0.1, 1.0 / 3.0, M_PI, -1e-17, 0.0, 12345.678901234567}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("trajectory file round trip is exact") {
    std::mt19937 rng(4);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Trajectory traj;
    traj.params.n_spins = 2;
    traj.params.j_par = 0.1 * M_PI;
    traj.params.j_perp = 0.2 * M_PI;
    traj.params.gamma = 0.01;
    traj.params.dt = 0.5;
    traj.params.steps = 3;
    traj.params.substeps = 7;
    traj.initial_label = "d,u";
    for (int k = 1; k <= 3; ++k) {
        traj.times.push_back(0.5 * k);
        RealVector x(16);
        for (Eigen::Index i = 0; i < 16; ++i) x(i) = gauss(rng);
        traj.states.push_back(x);
    }

    const auto path = (temp_dir() / "traj.txt").string();
    write_trajectory(path, traj);
    const Trajectory back = read_trajectory(path);
    CHECK(back.params.n_spins == 2);
    CHECK(back.params.substeps == 7);
    CHECK(back.initial_label == "d,u");
    REQUIRE(back.states.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(back.times[k] == traj.times[k]);
        CHECK((back.states[k] - traj.states[k]).norm() == 0.0);
    }
    // serialization is deterministic
    CHECK(trajectory_to_string(back) == trajectory_to_string(traj));

    CHECK_THROWS_AS(read_trajectory((temp_dir() / "missing.txt").string()), io_error);
}

TEST_CASE("estimator file round trip is exact") {
    std::mt19937 rng(6);
    std::normal_distribution<double> gauss(0.0, 1.0);
    EstimatorFile est;
    est.feature_dim = 4;
    est.rank = 2;
    est.reg = 1e-6;
    est.dt = 0.5;
    est.transition = RealMatrix(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) est.transition(i, j) = gauss(rng);

    const auto path = (temp_dir() / "est.txt").string();
    write_estimator(path, est);
    const EstimatorFile back = read_estimator(path);
    CHECK(back.feature_dim == 4);
    CHECK(back.rank == 2);
    CHECK(back.reg == 1e-6);
    CHECK(back.dt == 0.5);
    CHECK((back.transition - est.transition).norm() == 0.0);
}

TEST_CASE("csv writers") {
    const auto fpath = (temp_dir() / "forecast.csv").string();
    write_forecast_csv(fpath, {{0.5, "polarization_1", -0.5, -0.49}});
    const std::string text = read_file(fpath);
    CHECK(text.rfind("time,observable_id,truth,forecast\n", 0) == 0);
    CHECK(text.find("polarization_1") != std::string::npos);

    const auto mpath = (temp_dir() / "modes.csv").string();
    write_modes_csv(mpath, {{Complex{0.9, 0.1}, std::abs(Complex{0.9, 0.1}),
                             std::arg(Complex{0.9, 0.1}), 0.01, 0.02}});
    CHECK(read_file(mpath).rfind("index,re_lambda,im_lambda,abs_lambda,decay_rate,frequency\n",
                                 0) == 0);
}

TEST_CASE("default configuration") {
    const RunConfig config;
    CHECK(config.params.n_spins == 5);
    CHECK(config.params.j_par == doctest::Approx(0.1 * M_PI));
    CHECK(config.params.j_perp == doctest::Approx(0.2 * M_PI));
    CHECK(config.params.gamma == 0.01);
    CHECK(config.params.dt == 0.5);
    CHECK(config.params.steps == 200);
    CHECK(config.params.substeps == 50);
    CHECK(config.initial_label == "d,u,u,u,u");
    CHECK(config.train_fraction == 0.5);
    CHECK(config.rank == 19);
    CHECK(config.reg == 1e-6);
    REQUIRE(config.observables.size() == 3);
    CHECK(config.observables[0].id() == "polarization_1");
    CHECK(config.observables[1].id() == "polarization_5");
    CHECK(config.observables[2].id() == "current_3");
    CHECK_NOTHROW(config.validate());
}

TEST_CASE("number parsing") {
    CHECK(parse_number("0.01") == 0.01);
    CHECK(parse_number("pi") == doctest::Approx(M_PI));
    CHECK(parse_number("0.1*pi") == doctest::Approx(0.1 * M_PI));
    CHECK(parse_number("pi*0.2") == doctest::Approx(0.2 * M_PI));
    CHECK(parse_number("pi/4") == doctest::Approx(M_PI / 4.0));
    CHECK(parse_number("-2e-3") == -2e-3);
    CHECK_THROWS_AS(parse_number("two"), config_error);
    CHECK_THROWS_AS(parse_number(""), config_error);
}

TEST_CASE("config files") {
    const auto path = temp_dir() / "run.cfg";
    write_text(path,
               "# comment line\n"
               "N = 3\n"
               "J_par = 0.1*pi\n"
               "gamma = 0.02\n"
               "rank = 7\n"
               "observables = polarization:1, total_sz\n"
               "initial_label = d,u,u\n");
    const RunConfig config = load_config(path.string());
    CHECK(config.params.n_spins == 3);
    CHECK(config.params.j_par == doctest::Approx(0.1 * M_PI));
    CHECK(config.params.gamma == 0.02);
    CHECK(config.rank == 7);
    CHECK(config.initial_label == "d,u,u");
    REQUIRE(config.observables.size() == 2);
    CHECK(config.observables[0].id() == "polarization_1");
    CHECK(config.observables[1].id() == "total_sz");
    // untouched keys keep defaults
    CHECK(config.params.dt == 0.5);

    const auto bad = temp_dir() / "bad.cfg";
    write_text(bad, "not_a_key = 1\n");
    CHECK_THROWS_AS(load_config(bad.string()), config_error);

    CHECK_THROWS_AS(load_config((temp_dir() / "absent.cfg").string()), io_error);
}

TEST_CASE("observable parsing") {
    CHECK(parse_observable("polarization:2").id() == "polarization_2");
    CHECK(parse_observable("current:3").id() == "current_3");
    CHECK(parse_observable("total_sz").id() == "total_sz");
    CHECK_THROWS_AS(parse_observable("magnetization:1"), config_error);
    CHECK_THROWS_AS(parse_observable("polarization:zero"), config_error);

    SpinChainParams p;
    p.n_spins = 3;
    p.j_par = 1.0;
    const ComplexMatrix op = parse_observable("polarization:2").build(p);
    CHECK((op - op.adjoint()).norm() < 1e-14);
    CHECK(op.rows() == 8);
    CHECK_THROWS_AS(parse_observable("polarization:9").build(p), numeric_error);

    RunConfig out_of_range;
    apply_override(out_of_range, "observables", "polarization:9");
    CHECK_THROWS_AS(out_of_range.validate(), config_error);
}

TEST_CASE("overrides") {
    RunConfig config;
    apply_override(config, "gamma", "0.05");
    apply_override(config, "steps", "50");
    apply_override(config, "train_fraction", "0.6");
    apply_override(config, "reg", "1e-4");
    CHECK(config.params.gamma == 0.05);
    CHECK(config.params.steps == 50);
    CHECK(config.train_fraction == 0.6);
    CHECK(config.reg == 1e-4);
    CHECK_THROWS_AS(apply_override(config, "bogus", "1"), config_error);

    apply_override(config, "gamma", "-1");
    CHECK_THROWS_AS(config.validate(), config_error);
}
