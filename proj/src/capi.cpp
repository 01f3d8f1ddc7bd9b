#include "hankel_eig.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "driver.hpp"
#include "report.hpp"

struct heig_config {
  heig::RunConfig cfg;
};

struct heig_result {
  heig::RunResult res;
  std::string beta_str;
};

namespace {

thread_local std::string t_last_error;

heig_status fail(heig_status code, const char* what) {
  t_last_error = what ? what : "unknown error";
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

heig_config* heig_config_new(void) {
  return new (std::nothrow) heig_config{};
}

void heig_config_free(heig_config* cfg) { delete cfg; }

heig_status heig_config_set_n(heig_config* cfg, long n) {
  if (!cfg || n < 1) return fail(HEIG_ERR_INVALID_ARGUMENT, "n must be >= 1");
  cfg->cfg.n = n;
  return HEIG_OK;
}

heig_status heig_config_set_beta(heig_config* cfg, const char* beta) {
  if (!cfg || !beta) return fail(HEIG_ERR_INVALID_ARGUMENT, "null argument");
  try {
    cfg->cfg.beta = heig::Rational::parse(beta);
    return HEIG_OK;
  } catch (const std::exception& e) {
    return fail(HEIG_ERR_INVALID_ARGUMENT, e.what());
  }
}

heig_status heig_config_set_precision_bits(heig_config* cfg, long k_bits) {
  if (!cfg || k_bits < 0)
    return fail(HEIG_ERR_INVALID_ARGUMENT, "precision must be >= 0");
  cfg->cfg.k_bits = k_bits;
  return HEIG_OK;
}

heig_status heig_config_set_workers(heig_config* cfg, long workers) {
  if (!cfg || workers < 1)
    return fail(HEIG_ERR_INVALID_ARGUMENT, "workers must be >= 1");
  cfg->cfg.workers = workers;
  return HEIG_OK;
}

heig_status heig_config_set_net_bandwidth(heig_config* cfg,
                                          const char* bytes_per_second) {
  if (!cfg || !bytes_per_second)
    return fail(HEIG_ERR_INVALID_ARGUMENT, "null argument");
  std::string s(bytes_per_second);
  if (s == "inf") {
    cfg->cfg.net_bandwidth = std::numeric_limits<double>::infinity();
    return HEIG_OK;
  }
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size() || !(v > 0) || std::isnan(v))
      return fail(HEIG_ERR_INVALID_ARGUMENT, "bandwidth must be > 0 or inf");
    cfg->cfg.net_bandwidth = v;
    return HEIG_OK;
  } catch (const std::exception&) {
    return fail(HEIG_ERR_INVALID_ARGUMENT, "bandwidth must be > 0 or inf");
  }
}

heig_status heig_config_set_net_latency_ms(heig_config* cfg, double ms) {
  if (!cfg || ms < 0 || std::isnan(ms))
    return fail(HEIG_ERR_INVALID_ARGUMENT, "latency must be >= 0");
  cfg->cfg.net_latency_ms = ms;
  return HEIG_OK;
}

heig_status heig_config_set_verify(heig_config* cfg, int enabled) {
  if (!cfg) return fail(HEIG_ERR_INVALID_ARGUMENT, "null config");
  cfg->cfg.verify = enabled != 0;
  return HEIG_OK;
}

heig_status heig_config_set_matrix_dump_path(heig_config* cfg,
                                             const char* path) {
  if (!cfg || !path) return fail(HEIG_ERR_INVALID_ARGUMENT, "null argument");
  cfg->cfg.dump_matrix_path = path;
  return HEIG_OK;
}

heig_status heig_run(const heig_config* cfg, heig_result** result_out) {
  if (!cfg || !result_out)
    return fail(HEIG_ERR_INVALID_ARGUMENT, "null argument");
  *result_out = nullptr;
  try {
    heig::RunResult res = heig::run(cfg->cfg);
    auto* out = new heig_result{std::move(res), {}};
    out->beta_str = out->res.beta.to_string();
    *result_out = out;
    return HEIG_OK;
  } catch (const heig::InvalidConfig& e) {
    return fail(HEIG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const heig::PrecisionCapExceeded& e) {
    return fail(HEIG_ERR_PRECISION_CAP, e.what());
  } catch (const heig::Refuted& e) {
    return fail(HEIG_ERR_REFUTED, e.what());
  } catch (const heig::Error& e) {
    return fail(HEIG_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(HEIG_ERR_INTERNAL, e.what());
  }
}

void heig_result_free(heig_result* res) { delete res; }

long heig_result_n(const heig_result* res) { return res->res.n; }
const char* heig_result_beta(const heig_result* res) {
  return res->beta_str.c_str();
}
long heig_result_k_bits(const heig_result* res) { return res->res.k_bits; }
long heig_result_kv_bits(const heig_result* res) { return res->res.kv_bits; }
long heig_result_workers(const heig_result* res) { return res->res.workers; }
long heig_result_iterations(const heig_result* res) {
  return res->res.iterations;
}
int heig_result_verified(const heig_result* res) {
  return res->res.verified ? 1 : 0;
}
const char* heig_result_eigenvalue(const heig_result* res) {
  return res->res.eigenvalue.c_str();
}
const char* heig_result_condition_lower_bound(const heig_result* res) {
  return res->res.condition_lower_bound.c_str();
}
const char* heig_result_diagnosis(const heig_result* res) {
  return res->res.diagnosis.c_str();
}

double heig_result_total_seconds(const heig_result* res) {
  return res->res.timing.total_seconds;
}
double heig_result_compute_seconds(const heig_result* res) {
  return res->res.timing.compute_seconds;
}
double heig_result_net_wait_seconds(const heig_result* res) {
  return res->res.timing.net_wait_seconds;
}
double heig_result_div_seconds(const heig_result* res) {
  return res->res.timing.div_seconds;
}

char* heig_result_to_json(const heig_result* res) {
  return dup_string(heig::to_json(res->res));
}

char* heig_result_summary(const heig_result* res) {
  return dup_string(heig::summary_text(res->res));
}

void heig_string_free(char* s) { std::free(s); }

const char* heig_last_error(void) { return t_last_error.c_str(); }

}  // extern "C"
