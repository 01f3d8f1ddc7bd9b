/* Compiled as C89-compatible C: proves the public header needs no C++. */
#include <string.h>

#include "hankel_eig.h"

int capi_c_smoke(void) {
  heig_config* cfg = heig_config_new();
  heig_result* res = NULL;
  int rc = 0;
  if (!cfg) return 1;
  if (heig_config_set_n(cfg, 2) != HEIG_OK) rc = 2;
  if (rc == 0 && heig_config_set_beta(cfg, "1/1") != HEIG_OK) rc = 3;
  if (rc == 0 && heig_run(cfg, &res) != HEIG_OK) rc = 4;
  if (rc == 0 && !heig_result_verified(res)) rc = 5;
  if (rc == 0 && strlen(heig_result_eigenvalue(res)) < 3) rc = 6;
  if (res) heig_result_free(res);
  heig_config_free(cfg);
  return rc;
}
