/* udw.h — C API for the gapless detector-field laboratory
 *
 * Opaque model handles plus error codes; every function returns UDW_OK or an
 * error code, with a thread-local message available from udw_last_error().
 * Task execution is config-driven: JSON in, report JSON out.
 */

#ifndef UDW_H
#define UDW_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct udw_model udw_model;

enum {
    UDW_OK = 0,
    UDW_ERR_INVALID_ARGUMENT = 1,
    UDW_ERR_DOMAIN = 2,
    UDW_ERR_SINGULAR = 3,
    UDW_ERR_DIVERGENT = 4,
    UDW_ERR_INCONCLUSIVE = 5,
    UDW_ERR_UNSUPPORTED = 6,
    UDW_ERR_BUDGET = 7,
    UDW_ERR_TRUNCATION = 8,
    UDW_ERR_CONFIG = 9,
    UDW_ERR_INTERNAL = 10
};

/* Thread-local message for the most recent failure in this thread. */
const char* udw_last_error(void);
void udw_clear_last_error(void);

void udw_version(int32_t* major, int32_t* minor, int32_t* patch);

/* model_json is the config's "model" block:
 * {"n":3, "dispersion":{"kind":"massless"}, "profile":{"family":"gaussian",
 *  "sigma":1.0}, "lambda":1.0, "delta":0.0}
 */
int32_t udw_model_create_json(const char* model_json, udw_model** out_model);
void udw_model_destroy(udw_model* model);

/* ---- scalar evaluations ---- */
int32_t udw_omega(const udw_model* model, double k, double* out);
int32_t udw_sphere_area(int32_t n, double* out);
int32_t udw_profile_fourier(const udw_model* model, double k, double* out);
int32_t udw_coupling_value(const udw_model* model, double k, double* out);
int32_t udw_ground_energy(const udw_model* model, double* out);
int32_t udw_mean_boson_number(const udw_model* model, double t, double* out);
int32_t udw_theta_phase(const udw_model* model, double t, double* out);
int32_t udw_decoherence(const udw_model* model, double t, double* out_gamma,
                        double* out_entropy);

/* region: "full" | "ir" | "uv" with split frequency omega0 */
int32_t udw_boson_pmf(const udw_model* model, const char* region, double omega0, int64_t n,
                      double* out);

typedef struct {
    int32_t finite;        /* 1 finite, 0 divergent */
    double value;          /* finite case */
    double error_estimate; /* finite case */
    int32_t divergent_end; /* 0 = IR, 1 = UV */
    double local_exponent; /* divergent case */
} udw_verdict;

int32_t udw_r_integral(const udw_model* model, int32_t j, const char* region, double omega0,
                       udw_verdict* out);

/* Run one task from a full config (model block + exactly one of
 * diagnose/dynamics/thermal/validate).  The report is heap-allocated JSON;
 * release it with udw_string_free. */
int32_t udw_run_json(const char* config_json, char** out_report_json);
void udw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* UDW_H */
