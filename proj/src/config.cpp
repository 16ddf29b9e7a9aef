#include "koopspin/config.hpp"

#include "koopspin/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace koopspin {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_plain(const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw config_error("bad numeric value '" + text + "'");
    }
    if (pos != text.size()) throw config_error("bad numeric value '" + text + "'");
    return v;
}

int parse_int(const std::string& text) {
    const double v = parse_number(text);
    const int i = static_cast<int>(std::llround(v));
    if (std::abs(v - i) > 1e-9) throw config_error("expected integer, got '" + text + "'");
    return i;
}

}  // namespace

double parse_number(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw config_error("empty numeric value");
    if (text == "pi") return M_PI;
    const auto star = text.find('*');
    if (star != std::string::npos) {
        const std::string lhs = trim(text.substr(0, star));
        const std::string rhs = trim(text.substr(star + 1));
        if (rhs == "pi") return parse_plain(lhs) * M_PI;
        if (lhs == "pi") return M_PI * parse_plain(rhs);
        return parse_plain(lhs) * parse_plain(rhs);
    }
    const auto slash = text.find('/');
    if (slash != std::string::npos && text.rfind("pi", 0) == 0)
        return M_PI / parse_plain(trim(text.substr(slash + 1)));
    return parse_plain(text);
}

std::string ObservableSpec::id() const {
    switch (kind) {
        case Kind::Polarization:
            return "polarization_" + std::to_string(site);
        case Kind::Current:
            return "current_" + std::to_string(site);
        case Kind::TotalSz:
            return "total_sz";
    }
    return "";
}

ComplexMatrix ObservableSpec::build(const SpinChainParams& params) const {
    switch (kind) {
        case Kind::Polarization:
            return spin_polarization_op(site, params.n_spins);
        case Kind::Current:
            return spin_current_op(site, params);
        case Kind::TotalSz:
            return total_sz_op(params.n_spins);
    }
    throw config_error("unknown observable kind");
}

ObservableSpec parse_observable(const std::string& raw) {
    const std::string text = trim(raw);
    ObservableSpec spec;
    const auto colon = text.find(':');
    const std::string kind = trim(colon == std::string::npos ? text : text.substr(0, colon));
    if (kind == "polarization")
        spec.kind = ObservableSpec::Kind::Polarization;
    else if (kind == "current")
        spec.kind = ObservableSpec::Kind::Current;
    else if (kind == "total_sz")
        spec.kind = ObservableSpec::Kind::TotalSz;
    else
        throw config_error("unknown observable kind '" + kind + "'");
    if (spec.kind != ObservableSpec::Kind::TotalSz) {
        if (colon == std::string::npos)
            throw config_error("observable '" + text + "' needs a site, e.g. polarization:1");
        spec.site = parse_int(trim(text.substr(colon + 1)));
    }
    return spec;
}

RunConfig::RunConfig() {
    params.n_spins = 5;
    params.j_par = 0.1 * M_PI;
    params.j_perp = 0.2 * M_PI;
    params.gamma = 0.01;
    params.dt = 0.5;
    params.steps = 200;
    params.substeps = 50;
    observables = {parse_observable("polarization:1"), parse_observable("polarization:5"),
                   parse_observable("current:3")};
}

void RunConfig::validate() const {
    params.validate();
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw config_error("config: train_fraction must be in (0, 1)");
    if (rank < 1) throw config_error("config: rank must be >= 1");
    if (!(reg > 0.0)) throw config_error("config: reg must be > 0");
    for (const auto& obs : observables)
        if (obs.kind != ObservableSpec::Kind::TotalSz &&
            (obs.site < 1 || obs.site > params.n_spins))
            throw config_error("config: observable site out of range: " + obs.id());
}

void apply_override(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "N")
        config.params.n_spins = parse_int(value);
    else if (key == "J_par")
        config.params.j_par = parse_number(value);
    else if (key == "J_perp")
        config.params.j_perp = parse_number(value);
    else if (key == "gamma")
        config.params.gamma = parse_number(value);
    else if (key == "dt")
        config.params.dt = parse_number(value);
    else if (key == "steps")
        config.params.steps = parse_int(value);
    else if (key == "substeps")
        config.params.substeps = parse_int(value);
    else if (key == "initial_label")
        config.initial_label = trim(value);
    else if (key == "train_fraction")
        config.train_fraction = parse_number(value);
    else if (key == "rank")
        config.rank = parse_int(value);
    else if (key == "reg")
        config.reg = parse_number(value);
    else if (key == "observables") {
        config.observables.clear();
        std::istringstream in(value);
        std::string token;
        while (std::getline(in, token, ','))
            if (!trim(token).empty()) config.observables.push_back(parse_observable(token));
        if (config.observables.empty()) throw config_error("config: empty observables list");
    } else if (key == "output_dir")
        config.output_dir = trim(value);
    else
        throw config_error("config: unknown key '" + key + "'");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    RunConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) +
                               ": expected 'key = value'");
        apply_override(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    config.validate();
    return config;
}

}  // namespace koopspin
