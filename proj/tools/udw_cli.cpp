// udw_cli.cpp — batch front end over the C API: diagnose | dynamics | thermal | validate

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "udw.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInconclusive = 2;  // also: validation rows failed / channel errors
constexpr int kExitError = 3;

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    std::string format = "json";
    bool seedless = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// write-to-temp, atomic rename; no partial outputs
void write_atomic(const std::filesystem::path& target, const std::string& content) {
    std::filesystem::create_directories(target.parent_path().empty()
                                            ? std::filesystem::path(".")
                                            : target.parent_path());
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp);
        out << content;
        if (!out) throw std::runtime_error("failed writing " + tmp);
    }
    std::filesystem::rename(tmp, target);
}

std::string csv_of_series(const json& series) {
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
            out += json(row.at(i)).dump();  // shortest round-trip decimals
        }
        out += "\n";
    }
    return out;
}

int exit_code_for(int32_t rc) {
    switch (rc) {
        case UDW_OK: return kExitOk;
        case UDW_ERR_CONFIG:
        case UDW_ERR_INVALID_ARGUMENT: return kExitConfig;
        case UDW_ERR_INCONCLUSIVE: return kExitInconclusive;
        default: return kExitError;
    }
}

int run(const std::string& task, const Options& opt) {
    std::string config_text;
    json config;
    try {
        config_text = read_file(opt.config_path);
        config = json::parse(config_text);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    int present = 0;
    for (const char* t : {"diagnose", "dynamics", "thermal", "validate"})
        present += config.contains(t) ? 1 : 0;
    if (present != 1 || !config.contains(task)) {
        std::cerr << "config error: config must contain exactly the '" << task
                  << "' task block\n";
        return kExitConfig;
    }

    char* report_text = nullptr;
    const int32_t rc = udw_run_json(config_text.c_str(), &report_text);
    if (rc != UDW_OK) {
        std::cerr << task << " failed: " << udw_last_error() << "\n";
        return exit_code_for(rc);
    }
    json report = json::parse(report_text);
    udw_string_free(report_text);
    report["seedless"] = opt.seedless;

    const std::filesystem::path out_dir(opt.out_dir);
    int exit_code = kExitOk;

    if (task == "diagnose") {
        const auto& rep = report.at("report");
        write_atomic(out_dir / "diagnose.json", report.dump(2) + "\n");
        std::cout << "classification: " << rep.at("classification").get<std::string>() << "\n";
        for (const char* rj : {"r0", "r1", "r2"}) {
            const auto& v = rep.at(rj);
            if (v.at("status") == "finite")
                std::cout << "  " << rj << " = " << v.at("value").dump() << " (finite)\n";
            else
                std::cout << "  " << rj << " divergent at " << v.at("end").get<std::string>()
                          << ", local exponent " << v.at("local_exponent").dump() << "\n";
        }
        if (!rep.at("ground_energy").is_null())
            std::cout << "  ground energy = " << rep.at("ground_energy").dump()
                      << (rep.at("ground_degenerate").get<bool>() ? " (two-fold degenerate)"
                                                                  : "")
                      << "\n";
        if (!rep.at("mean_soft_bosons").is_null())
            std::cout << "  mean soft bosons = " << rep.at("mean_soft_bosons").dump() << "\n";
    } else if (task == "dynamics") {
        if (opt.format == "csv") {
            for (const auto& channel : report.at("channels")) {
                const auto name = channel.at("observable").get<std::string>();
                write_atomic(out_dir / (name + ".csv"), csv_of_series(channel));
            }
            write_atomic(out_dir / "dynamics.json", report.dump(2) + "\n");
        } else {
            write_atomic(out_dir / "dynamics.json", report.dump(2) + "\n");
        }
        for (const auto& err : report.at("errors")) {
            std::cerr << "channel '" << err.at("observable").get<std::string>()
                      << "' failed: " << err.at("error").get<std::string>() << "\n";
            exit_code = kExitInconclusive;
        }
        std::cout << "dynamics: " << report.at("channels").size() << " channel(s) written to "
                  << out_dir.string() << "\n";
    } else if (task == "thermal") {
        write_atomic(out_dir / "thermal.json", report.dump(2) + "\n");
        if (opt.format == "csv")
            write_atomic(out_dir / "thermal_sweep.csv", csv_of_series(report.at("sweep")));
        for (const auto& err : report.at("errors")) {
            std::cerr << "beta " << err.at("beta").dump()
                      << " failed: " << err.at("error").get<std::string>() << "\n";
            exit_code = kExitInconclusive;
        }
        std::cout << "thermal sweep: " << report.at("sweep").at("rows").size() << " row(s), "
                  << "ground_converged=" << report.at("ground_converged").dump() << "\n";
    } else {  // validate
        write_atomic(out_dir / "validate.json", report.dump(2) + "\n");
        std::size_t passed = 0;
        const auto& rows = report.at("rows");
        for (const auto& row : rows) {
            const bool ok = row.at("pass").get<bool>();
            passed += ok ? 1 : 0;
            std::cout << (ok ? "pass " : "FAIL ") << row.at("quantity").get<std::string>()
                      << "  |closed - oracle| = " << row.at("abs_diff").dump() << " (tol "
                      << row.at("tolerance").dump() << ")";
            if (row.contains("cause"))
                std::cout << "  [" << row.at("cause").get<std::string>() << "]";
            std::cout << "\n";
        }
        std::cout << passed << "/" << rows.size() << " comparisons passed\n";
        if (!report.at("all_pass").get<bool>()) exit_code = kExitInconclusive;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gapless detector-field model laboratory"};
    app.require_subcommand(1);

    Options opt;
    std::string task;
    for (const std::string name : {"diagnose", "dynamics", "thermal", "validate"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", opt.config_path, "JSON config path")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--seedless", opt.seedless,
                      "assert no RNG is used anywhere (always true; recorded in reports)");
        sub->callback([&task, name]() { task = name; });
    }

    CLI11_PARSE(app, argc, argv);
    try {
        return run(task, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
