// run.cpp — config parsing, task runners, report/CSV serialization

#include "udw/run.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "udw/thermal.hpp"

namespace udw::run {

namespace {

[[noreturn]] void bad_config(const std::string& what) { throw ConfigError("config: " + what); }

const json& need(const json& j, const char* key, const char* ctx) {
    if (!j.contains(key)) bad_config(std::string(ctx) + ": missing key '" + key + "'");
    return j.at(key);
}

double need_number(const json& j, const char* key, const char* ctx) {
    const auto& v = need(j, key, ctx);
    if (!v.is_number()) bad_config(std::string(ctx) + ": key '" + key + "' must be a number");
    return v.get<double>();
}

double opt_number(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) bad_config(std::string("key '") + key + "' must be a number");
    return j.at(key).get<double>();
}

} // namespace

SpatialProfile parse_profile(const json& j) {
    const std::string family = need(j, "family", "profile").get<std::string>();
    if (family == "gaussian") return SpatialProfile::gaussian(need_number(j, "sigma", "profile"));
    if (family == "lorentzian")
        return SpatialProfile::lorentzian(need_number(j, "sigma", "profile"));
    if (family == "compact_bump")
        return SpatialProfile::compact_bump(need_number(j, "radius", "profile"));
    if (family == "pointlike")
        return SpatialProfile::pointlike(need_number(j, "cutoff", "profile"));
    if (family == "power_regularized")
        return SpatialProfile::power_regularized(need_number(j, "exponent", "profile"),
                                                 parse_profile(need(j, "base", "profile")));
    if (family == "tabulated") {
        if (j.contains("path"))
            return SpatialProfile::tabulated_from_csv(j.at("path").get<std::string>());
        const auto& ks = need(j, "k", "profile");
        const auto& vs = need(j, "value", "profile");
        return SpatialProfile::tabulated(ks.get<std::vector<double>>(),
                                         vs.get<std::vector<double>>());
    }
    bad_config("unknown profile family '" + family + "'");
}

ModelConfig parse_model(const json& config) {
    const auto& j = need(config, "model", "config");
    ModelConfig m;
    const int n = static_cast<int>(need_number(j, "n", "model"));
    Dispersion d = Dispersion::massless();
    if (j.contains("dispersion")) {
        const auto& dj = j.at("dispersion");
        const std::string kind = need(dj, "kind", "dispersion").get<std::string>();
        if (kind == "massive")
            d = Dispersion::massive(need_number(dj, "mass", "dispersion"));
        else if (kind != "massless")
            bad_config("dispersion kind must be 'massless' or 'massive'");
    }
    m.mode_space = ModeSpace(n, d);
    m.profile = parse_profile(need(j, "profile", "model"));
    m.lambda = need_number(j, "lambda", "model");
    m.delta = opt_number(j, "delta", 0.0);
    m.omega_gap = opt_number(j, "omega_gap", 0.0);
    if (!std::isfinite(m.lambda)) bad_config("lambda must be finite");
    dyn::require_gapless({m.omega_gap, m.delta});
    return m;
}

CouplingFunction coupling_of(const ModelConfig& m) {
    return CouplingFunction(m.mode_space, m.profile, m.lambda);
}

TestFunction parse_test_function(const json& j, const ModeSpace& ms) {
    const std::string type = need(j, "type", "g").get<std::string>();
    const double scale = opt_number(j, "scale", 1.0);
    if (type == "gaussian") {
        const double sigma = need_number(j, "sigma", "g");
        return TestFunction(ms, [sigma, scale](double k) {
            return std::complex<double>(scale * std::exp(-0.5 * sigma * sigma * k * k), 0.0);
        });
    }
    if (type == "window") {
        const double lo = need_number(j, "k_lo", "g");
        const double hi = need_number(j, "k_hi", "g");
        if (!(0.0 <= lo && lo < hi)) bad_config("g window needs 0 <= k_lo < k_hi");
        return TestFunction(
            ms, [scale](double) { return std::complex<double>(scale, 0.0); }, lo, hi);
    }
    bad_config("unknown g type '" + type + "'");
}

std::vector<double> parse_grid(const json& j) {
    if (j.is_array()) {
        auto v = j.get<std::vector<double>>();
        if (v.empty()) bad_config("grid must not be empty");
        return v;
    }
    const double start = need_number(j, "start", "grid");
    const double stop = need_number(j, "stop", "grid");
    const auto count = static_cast<std::size_t>(need_number(j, "count", "grid"));
    if (count < 1 || !(stop >= start)) bad_config("grid needs count >= 1 and stop >= start");
    const bool log_spaced = j.contains("log") && j.at("log").get<bool>();
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    if (log_spaced) {
        if (!(start > 0.0)) bad_config("log grid needs start > 0");
        const double r = std::log(stop / start) / static_cast<double>(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(start * std::exp(r * static_cast<double>(i)));
    } else {
        const double h = (stop - start) / static_cast<double>(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(start + h * static_cast<double>(i));
    }
    return out;
}

json verdict_json(const diag::IntegralVerdict& v) {
    json out;
    if (v.finite) {
        out["status"] = "finite";
        out["value"] = v.value;
        out["error_estimate"] = v.error_estimate;
    } else {
        out["status"] = "divergent";
        out["end"] = v.end == diag::End::IR ? "ir" : "uv";
        out["local_exponent"] = v.local_exponent;
    }
    return out;
}

json report_json(const diag::DiagnosticsReport& r) {
    json out;
    out["r0"] = verdict_json(r.r0);
    out["r1"] = verdict_json(r.r1);
    out["r2"] = verdict_json(r.r2);
    out["classification"] = diag::to_string(r.classification);
    out["ground_energy"] = r.ground_energy ? json(*r.ground_energy) : json(nullptr);
    out["mean_soft_bosons"] = r.mean_soft_bosons ? json(*r.mean_soft_bosons) : json(nullptr);
    out["omega0"] = r.omega0;
    out["tolerances"] = {{"rel", r.tolerances.rel},
                         {"abs", r.tolerances.abs},
                         {"max_panels", r.tolerances.max_panels}};
    out["delta"] = r.delta;
    out["ground_degenerate"] = r.ground_degenerate;
    return out;
}

std::string task_name(const json& config) {
    static const std::set<std::string> tasks = {"diagnose", "dynamics", "thermal", "validate"};
    std::string found;
    for (const auto& t : tasks) {
        if (config.contains(t)) {
            if (!found.empty()) bad_config("exactly one task block allowed, found '" + found +
                                           "' and '" + t + "'");
            found = t;
        }
    }
    if (found.empty()) bad_config("no task block (diagnose | dynamics | thermal | validate)");
    return found;
}

json run_diagnose(const json& config) {
    const auto model = parse_model(config);
    const auto& task = need(config, "diagnose", "config");
    const double omega0 = opt_number(task, "omega0", 1.0);
    const auto report = diag::classify(coupling_of(model), model.delta, omega0);
    json out;
    out["task"] = "diagnose";
    out["report"] = report_json(report);
    return out;
}

namespace {

json series_json(const std::string& name, const std::vector<double>& t,
                 const std::vector<std::complex<double>>& v, bool complex_valued) {
    json s;
    s["observable"] = name;
    if (complex_valued)
        s["columns"] = json::array({"t", "re", "im"});
    else
        s["columns"] = json::array({"t", "value"});
    json rows = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (complex_valued)
            rows.push_back(json::array({t[i], v[i].real(), v[i].imag()}));
        else
            rows.push_back(json::array({t[i], v[i].real()}));
    }
    s["rows"] = std::move(rows);
    return s;
}

} // namespace

json run_dynamics(const json& config) {
    const auto model = parse_model(config);
    const auto& task = need(config, "dynamics", "config");
    const auto coupling = coupling_of(model);
    const auto times = parse_grid(need(task, "times", "dynamics"));

    dyn::StateSpec initial = dyn::ProductInitialState::sigma_z_ground_vacuum();
    dyn::ProductInitialState product = dyn::ProductInitialState::sigma_z_ground_vacuum();
    if (task.contains("initial")) {
        const auto& ij = task.at("initial");
        const std::string type = need(ij, "type", "initial").get<std::string>();
        if (type == "kms_product") {
            const double beta = need_number(ij, "beta", "initial");
            const int branch = static_cast<int>(opt_number(ij, "branch", 1.0));
            product = dyn::ProductInitialState(product.qubit_pm,
                                               dyn::KmsState{beta, branch});
            initial = product;
        } else if (type != "sigma_z_ground_vacuum") {
            bad_config("unknown initial state type '" + type + "'");
        }
    }

    std::vector<std::string> observables = {"weyl", "sigma_x", "sigma_z",
                                            "mean_bosons", "gamma", "entropy"};
    if (task.contains("observables"))
        observables = task.at("observables").get<std::vector<std::string>>();

    std::optional<TestFunction> g;
    if (task.contains("g")) g = parse_test_function(task.at("g"), model.mode_space);

    json out;
    out["task"] = "dynamics";
    json channels = json::array();
    json errors = json::array();

    for (const auto& name : observables) {
        std::vector<std::complex<double>> values;
        bool complex_valued = true;
        try {
            if (name == "weyl") {
                if (!g) bad_config("dynamics: observable 'weyl' needs a g spec");
                for (double t : times)
                    values.push_back(
                        dyn::state_expectation(coupling, initial, dyn::evolve_weyl(coupling, *g, t)));
            } else if (name == "sigma_x" || name == "sigma_y" || name == "sigma_z") {
                const auto axis = name == "sigma_x"   ? dyn::Axis::X
                                  : name == "sigma_y" ? dyn::Axis::Y
                                                      : dyn::Axis::Z;
                for (double t : times)
                    values.push_back(dyn::state_expectation(coupling, initial,
                                                            dyn::evolve_sigma(coupling, axis, t)));
            } else if (name == "mean_bosons") {
                complex_valued = false;
                for (double t : times) values.emplace_back(dyn::mean_boson_number(coupling, t));
            } else if (name == "gamma") {
                complex_valued = false;
                for (double t : times)
                    values.emplace_back(2.0 * dyn::mean_boson_number(coupling, t));
            } else if (name == "entropy") {
                complex_valued = false;
                for (double t : times)
                    values.emplace_back(dyn::reduced_qubit(coupling, product, t).entropy);
            } else if (name == "theta") {
                complex_valued = false;
                for (double t : times) values.emplace_back(dyn::theta_phase(coupling, t));
            } else {
                bad_config("unknown observable '" + name + "'");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            errors.push_back({{"observable", name}, {"error", e.what()}});
            continue;
        }
        channels.push_back(series_json(name, times, values, complex_valued));
    }
    out["channels"] = std::move(channels);
    out["errors"] = std::move(errors);
    return out;
}

json run_thermal(const json& config) {
    const auto model = parse_model(config);
    const auto& task = need(config, "thermal", "config");
    const auto coupling = coupling_of(model);
    const auto betas = parse_grid(need(task, "betas", "thermal"));
    for (double b : betas)
        if (!(b > 0.0)) bad_config("thermal: beta grid must be positive");
    const int branch = static_cast<int>(opt_number(task, "branch", 1.0));
    const auto g = parse_test_function(need(task, "g", "thermal"), model.mode_space);

    json out;
    out["task"] = "thermal";
    json sweep;
    sweep["observable"] = "kms_weyl";
    sweep["columns"] = json::array({"beta", "weight_plus", "weight_minus", "re", "im"});
    json rows = json::array();
    json errors = json::array();
    double beta_max = 0.0;
    std::complex<double> at_beta_max{};
    bool have_value_at_max = false;
    for (double beta : betas) {
        const auto weights = thermal::joint_thermal(beta, model.delta);
        try {
            const auto v = thermal::kms_weyl(coupling, beta, branch, g);
            rows.push_back(json::array({beta, weights.first, weights.second, v.real(), v.imag()}));
            if (beta >= beta_max) {
                beta_max = beta;
                at_beta_max = v;
                have_value_at_max = true;
            }
        } catch (const std::exception& e) {
            errors.push_back({{"beta", beta}, {"error", e.what()}});
        }
    }
    sweep["rows"] = std::move(rows);
    out["sweep"] = std::move(sweep);
    out["errors"] = std::move(errors);

    bool ground_converged = false;
    if (have_value_at_max) {
        try {
            const auto ground = thermal::ground_weyl(coupling, branch, g);
            ground_converged = std::abs(ground - at_beta_max) <= 1e-8;
            out["ground_formula"] = {{"re", ground.real()}, {"im", ground.imag()}};
        } catch (const std::exception& e) {
            out["ground_formula_error"] = e.what();
        }
    }
    out["ground_converged"] = ground_converged;
    return out;
}

namespace {

std::vector<std::complex<double>> parse_complex_list(const json& j, const char* ctx) {
    std::vector<std::complex<double>> out;
    for (const auto& e : j) {
        if (e.is_number()) {
            out.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2) {
            out.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        } else {
            bad_config(std::string(ctx) + ": entries must be numbers or [re, im] pairs");
        }
    }
    return out;
}

} // namespace

json run_validate(const json& config) {
    const auto model = parse_model(config);
    const auto& task = need(config, "validate", "config");

    validate::Fixture fixture;
    fixture.delta = model.delta;

    const auto& mj = need(task, "modes", "validate");
    if (mj.contains("explicit")) {
        std::vector<oracle::Mode> modes;
        for (const auto& e : mj.at("explicit")) {
            oracle::Mode m;
            m.omega = need_number(e, "omega", "mode");
            if (e.contains("c") && e.at("c").is_array())
                m.c = {e.at("c").at(0).get<double>(), e.at("c").at(1).get<double>()};
            else
                m.c = need_number(e, "c", "mode");
            modes.push_back(m);
        }
        fixture.modes = oracle::DiscreteModes::explicit_modes(std::move(modes));
    } else if (mj.contains("discretize")) {
        const auto& dj = mj.at("discretize");
        const auto M = static_cast<std::size_t>(need_number(dj, "M", "discretize"));
        const double k_max = need_number(dj, "k_max", "discretize");
        const std::string strat =
            dj.contains("strategy") ? dj.at("strategy").get<std::string>() : "gauss";
        const auto strategy = strat == "linear" ? oracle::GridStrategy::LinearGrid
                                                : oracle::GridStrategy::GaussPanels;
        fixture.modes = oracle::discretize(coupling_of(model), M, strategy, k_max);
    } else {
        bad_config("validate.modes needs 'explicit' or 'discretize'");
    }

    if (task.contains("n_max")) {
        const auto& nj = task.at("n_max");
        if (nj.is_number()) {
            fixture.forced_n_max = nj.get<int>();
        } else {
            fixture.policy.start = static_cast<int>(opt_number(nj, "start", 0.0));
            fixture.policy.tol = opt_number(nj, "tol", 1e-10);
        }
    }
    fixture.policy.budget =
        static_cast<std::size_t>(opt_number(task, "budget", oracle::OracleSystem::kDefaultBudget));
    fixture.tolerance = opt_number(task, "tolerance", 1e-8);
    fixture.dynamics_tolerance = opt_number(task, "dynamics_tolerance", 1e-4);

    if (task.contains("g")) {
        fixture.g = parse_complex_list(task.at("g"), "validate.g");
    } else if (!fixture.modes.grid_k.empty() && task.contains("g_function")) {
        const auto gf = parse_test_function(task.at("g_function"), model.mode_space);
        fixture.g = fixture.modes.embed([&gf](double k) { return gf(k); });
    } else {
        // default probe: g_j proportional to the coupling displacement
        for (const auto& m : fixture.modes.modes) fixture.g.push_back(0.5 * m.c / m.omega);
    }
    if (task.contains("times")) fixture.times = parse_grid(task.at("times"));
    if (task.contains("betas")) fixture.betas = parse_grid(task.at("betas"));

    const auto report = validate::run_validation(fixture);

    json out;
    out["task"] = "validate";
    out["system"] = {{"modes", fixture.modes.size()},
                     {"n_max", report.n_max},
                     {"dimension", report.dim},
                     {"derivation", fixture.modes.derivation}};
    json sweep = json::array();
    for (std::size_t i = 0; i < report.convergence.n_max_sweep.size(); ++i)
        sweep.push_back(json::array(
            {report.convergence.n_max_sweep[i], report.convergence.energies[i]}));
    out["system"]["n_max_sweep"] = std::move(sweep);
    json rows = json::array();
    for (const auto& r : report.rows) {
        json row;
        row["quantity"] = r.quantity;
        row["closed_form"] = r.closed_form;
        row["oracle"] = r.oracle;
        row["abs_diff"] = r.abs_diff;
        row["tolerance"] = r.tolerance;
        row["pass"] = r.pass;
        if (!r.note.empty()) row["cause"] = r.note;
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    out["all_pass"] = report.all_pass;
    return out;
}

json run_task(const json& config) {
    const auto name = task_name(config);
    if (name == "diagnose") return run_diagnose(config);
    if (name == "dynamics") return run_dynamics(config);
    if (name == "thermal") return run_thermal(config);
    return run_validate(config);
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string series_csv(const json& series) {
    std::string out;
    out += "# observable=" + series.at("observable").get<std::string>() + "\n";
    const auto& cols = series.at("columns");
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ",";
        out += cols.at(i).get<std::string>();
    }
    out += "\n";
    for (const auto& row : series.at("rows")) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += format_double(row.at(i).get<double>());
        }
        out += "\n";
    }
    return out;
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open output file " + tmp.string());
        out << content;
        if (!out) throw ConfigError("failed writing " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace udw::run
