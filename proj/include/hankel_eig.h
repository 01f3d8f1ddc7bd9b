/* C interface to the Hankel smallest-eigenvalue solver.
 *
 * Usage: build a heig_config, run it, query the opaque result.  All strings
 * returned by heig_result_* stay owned by the result object except
 * heig_result_to_json, which allocates (free with heig_string_free).
 * Functions returning heig_status never throw; on failure a thread-local
 * message is available from heig_last_error().
 */
#ifndef HANKEL_EIG_H
#define HANKEL_EIG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum heig_status {
  HEIG_OK = 0,
  HEIG_ERR_INVALID_ARGUMENT = 1,
  HEIG_ERR_PRECISION_CAP = 2,
  HEIG_ERR_REFUTED = 3,
  HEIG_ERR_IO = 4,
  HEIG_ERR_INTERNAL = 5
} heig_status;

typedef struct heig_config heig_config;
typedef struct heig_result heig_result;

/* Configuration ----------------------------------------------------------- */

heig_config* heig_config_new(void);
void heig_config_free(heig_config* cfg);

heig_status heig_config_set_n(heig_config* cfg, long n);
/* beta as an exact rational "p/q" or integer "p"; decimals are rejected. */
heig_status heig_config_set_beta(heig_config* cfg, const char* beta);
/* 0 selects the precision automatically from n and beta. */
heig_status heig_config_set_precision_bits(heig_config* cfg, long k_bits);
heig_status heig_config_set_workers(heig_config* cfg, long workers);
/* bytes per second, or "inf" for an unthrottled in-process channel. */
heig_status heig_config_set_net_bandwidth(heig_config* cfg,
                                          const char* bytes_per_second);
heig_status heig_config_set_net_latency_ms(heig_config* cfg, double ms);
heig_status heig_config_set_verify(heig_config* cfg, int enabled);
/* Writes the generated matrix, one anti-diagonal per line, after the run. */
heig_status heig_config_set_matrix_dump_path(heig_config* cfg,
                                             const char* path);

/* Execution --------------------------------------------------------------- */

heig_status heig_run(const heig_config* cfg, heig_result** result_out);

/* Result access ----------------------------------------------------------- */

void heig_result_free(heig_result* res);

long heig_result_n(const heig_result* res);
const char* heig_result_beta(const heig_result* res);
long heig_result_k_bits(const heig_result* res);
long heig_result_kv_bits(const heig_result* res);
long heig_result_workers(const heig_result* res);
long heig_result_iterations(const heig_result* res);
int heig_result_verified(const heig_result* res);
/* 15 significant decimal digits, scientific notation. */
const char* heig_result_eigenvalue(const heig_result* res);
const char* heig_result_condition_lower_bound(const heig_result* res);
/* Empty string unless the run ended in a documented edge outcome. */
const char* heig_result_diagnosis(const heig_result* res);

double heig_result_total_seconds(const heig_result* res);
double heig_result_compute_seconds(const heig_result* res);
double heig_result_net_wait_seconds(const heig_result* res);
double heig_result_div_seconds(const heig_result* res);

/* Full report in the stable JSON schema; caller frees. */
char* heig_result_to_json(const heig_result* res);
/* Multi-line human-readable summary; caller frees. */
char* heig_result_summary(const heig_result* res);
void heig_string_free(char* s);

/* Thread-local message from the most recent failing call. */
const char* heig_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* HANKEL_EIG_H */
