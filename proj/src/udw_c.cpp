// udw_c.cpp — extern-C shim over the C++ core

#include "udw.h"

#include <cstring>
#include <new>
#include <string>

#include "udw/run.hpp"

struct udw_model {
    udw::run::ModelConfig config;
};

namespace {

thread_local char tl_error[512] = "";

void set_error(const char* msg) {
    std::strncpy(tl_error, msg, sizeof(tl_error) - 1);
    tl_error[sizeof(tl_error) - 1] = '\0';
}

int32_t map_exception() {
    try {
        throw;
    } catch (const udw::SingularPointError& e) {
        set_error(e.what());
        return UDW_ERR_SINGULAR;
    } catch (const udw::DomainError& e) {
        set_error(e.what());
        return UDW_ERR_DOMAIN;
    } catch (const udw::DivergenceError& e) {
        set_error(e.what());
        return UDW_ERR_DIVERGENT;
    } catch (const udw::InconclusiveError& e) {
        set_error(e.what());
        return UDW_ERR_INCONCLUSIVE;
    } catch (const udw::UnsupportedError& e) {
        set_error(e.what());
        return UDW_ERR_UNSUPPORTED;
    } catch (const udw::BudgetError& e) {
        set_error(e.what());
        return UDW_ERR_BUDGET;
    } catch (const udw::TruncationError& e) {
        set_error(e.what());
        return UDW_ERR_TRUNCATION;
    } catch (const udw::ConfigError& e) {
        set_error(e.what());
        return UDW_ERR_CONFIG;
    } catch (const nlohmann::json::exception& e) {
        set_error(e.what());
        return UDW_ERR_CONFIG;
    } catch (const std::exception& e) {
        set_error(e.what());
        return UDW_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return UDW_ERR_INTERNAL;
    }
}

udw::diag::Region parse_region(const char* region, double omega0) {
    if (!region) throw udw::DomainError("region must not be null");
    const std::string r(region);
    if (r == "full") return udw::diag::Region::full(omega0);
    if (r == "ir") return udw::diag::Region::infrared(omega0);
    if (r == "uv") return udw::diag::Region::ultraviolet(omega0);
    throw udw::DomainError("region must be 'full', 'ir' or 'uv'");
}

} // namespace

extern "C" {

const char* udw_last_error(void) { return tl_error; }
void udw_clear_last_error(void) { tl_error[0] = '\0'; }

void udw_version(int32_t* major, int32_t* minor, int32_t* patch) {
    if (major) *major = 0;
    if (minor) *minor = 1;
    if (patch) *patch = 0;
}

int32_t udw_model_create_json(const char* model_json, udw_model** out_model) {
    if (!model_json || !out_model) {
        set_error("null pointer argument");
        return UDW_ERR_INVALID_ARGUMENT;
    }
    *out_model = nullptr;
    try {
        udw::run::json wrapper;
        wrapper["model"] = udw::run::json::parse(model_json);
        auto model = std::make_unique<udw_model>();
        model->config = udw::run::parse_model(wrapper);
        *out_model = model.release();
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

void udw_model_destroy(udw_model* model) { delete model; }

#define UDW_REQUIRE(cond)                          \
    do {                                           \
        if (!(cond)) {                             \
            set_error("null pointer argument");    \
            return UDW_ERR_INVALID_ARGUMENT;       \
        }                                          \
    } while (0)

int32_t udw_omega(const udw_model* model, double k, double* out) {
    UDW_REQUIRE(model && out);
    try {
        *out = udw::omega(model->config.mode_space, k);
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_sphere_area(int32_t n, double* out) {
    UDW_REQUIRE(out);
    try {
        *out = udw::sphere_area(n);
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_profile_fourier(const udw_model* model, double k, double* out) {
    UDW_REQUIRE(model && out);
    try {
        *out = model->config.profile.fourier(k);
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_coupling_value(const udw_model* model, double k, double* out) {
    UDW_REQUIRE(model && out);
    try {
        *out = udw::run::coupling_of(model->config).value(k);
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_ground_energy(const udw_model* model, double* out) {
    UDW_REQUIRE(model && out);
    try {
        *out = udw::diag::ground_energy(udw::run::coupling_of(model->config),
                                        model->config.delta);
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_mean_boson_number(const udw_model* model, double t, double* out) {
    UDW_REQUIRE(model && out);
    try {
        *out = udw::dyn::mean_boson_number(udw::run::coupling_of(model->config), t);
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_theta_phase(const udw_model* model, double t, double* out) {
    UDW_REQUIRE(model && out);
    try {
        *out = udw::dyn::theta_phase(udw::run::coupling_of(model->config), t);
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_decoherence(const udw_model* model, double t, double* out_gamma,
                        double* out_entropy) {
    UDW_REQUIRE(model && out_gamma && out_entropy);
    try {
        const auto reduced = udw::dyn::reduced_qubit(
            udw::run::coupling_of(model->config),
            udw::dyn::ProductInitialState::sigma_z_ground_vacuum(), t);
        *out_gamma = reduced.gamma;
        *out_entropy = reduced.entropy;
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_boson_pmf(const udw_model* model, const char* region, double omega0, int64_t n,
                      double* out) {
    UDW_REQUIRE(model && out);
    try {
        *out = udw::diag::boson_pmf(udw::run::coupling_of(model->config),
                                    parse_region(region, omega0), n);
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_r_integral(const udw_model* model, int32_t j, const char* region, double omega0,
                       udw_verdict* out) {
    UDW_REQUIRE(model && out);
    try {
        const auto v = udw::diag::r_integral(udw::run::coupling_of(model->config), j,
                                             parse_region(region, omega0));
        out->finite = v.finite ? 1 : 0;
        out->value = v.value;
        out->error_estimate = v.error_estimate;
        out->divergent_end = v.end == udw::diag::End::IR ? 0 : 1;
        out->local_exponent = v.local_exponent;
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

int32_t udw_run_json(const char* config_json, char** out_report_json) {
    UDW_REQUIRE(config_json && out_report_json);
    *out_report_json = nullptr;
    try {
        const auto config = udw::run::json::parse(config_json);
        const auto report = udw::run::run_task(config);
        const std::string text = report.dump(2);
        char* buf = new (std::nothrow) char[text.size() + 1];
        if (!buf) {
            set_error("out of memory");
            return UDW_ERR_INTERNAL;
        }
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out_report_json = buf;
        return UDW_OK;
    } catch (...) {
        return map_exception();
    }
}

void udw_string_free(char* s) { delete[] s; }

} // extern "C"
