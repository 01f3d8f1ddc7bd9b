// Command-line front end.  Talks to the solver exclusively through the C
// shared-library interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hankel_eig.h"

namespace {

// exit codes: 0 success/verified, 2 precision cap, 3 invalid config,
// 4 refuted (solver defect), 1 other failure
int exit_code_for(heig_status st) {
  switch (st) {
    case HEIG_OK: return 0;
    case HEIG_ERR_INVALID_ARGUMENT: return 3;
    case HEIG_ERR_PRECISION_CAP: return 2;
    case HEIG_ERR_REFUTED: return 4;
    default: return 1;
  }
}

struct ConfigArgs {
  long n = 0;
  std::string beta;
  long precision_bits = 0;
  long workers = 1;
  std::string bandwidth = "inf";
  double latency_ms = 0.0;
  bool no_verify = false;
  std::string out_path;
  std::string dump_path;
};

using ConfigPtr = std::unique_ptr<heig_config, decltype(&heig_config_free)>;
using ResultPtr = std::unique_ptr<heig_result, decltype(&heig_result_free)>;

ConfigPtr make_config(const ConfigArgs& a, long n, long workers,
                      const std::string& beta, heig_status& st) {
  ConfigPtr cfg(heig_config_new(), heig_config_free);
  st = HEIG_OK;
  auto apply = [&](heig_status s) {
    if (st == HEIG_OK) st = s;
  };
  apply(heig_config_set_n(cfg.get(), n));
  apply(heig_config_set_beta(cfg.get(), beta.c_str()));
  apply(heig_config_set_precision_bits(cfg.get(), a.precision_bits));
  apply(heig_config_set_workers(cfg.get(), workers));
  apply(heig_config_set_net_bandwidth(cfg.get(), a.bandwidth.c_str()));
  apply(heig_config_set_net_latency_ms(cfg.get(), a.latency_ms));
  apply(heig_config_set_verify(cfg.get(), a.no_verify ? 0 : 1));
  if (!a.dump_path.empty())
    apply(heig_config_set_matrix_dump_path(cfg.get(), a.dump_path.c_str()));
  return cfg;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) return false;
  os << content;
  return bool(os);
}

template <typename T>
std::vector<T> parse_list(const std::string& s, T (*conv)(const std::string&)) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(conv(item));
  }
  return out;
}

int run_single(const ConfigArgs& args) {
  heig_status st = HEIG_OK;
  ConfigPtr cfg = make_config(args, args.n, args.workers, args.beta, st);
  if (st != HEIG_OK) {
    std::cerr << "error: " << heig_last_error() << "\n";
    return exit_code_for(st);
  }
  heig_result* raw = nullptr;
  st = heig_run(cfg.get(), &raw);
  if (st != HEIG_OK) {
    std::cerr << "error: " << heig_last_error() << "\n";
    return exit_code_for(st);
  }
  ResultPtr result(raw, heig_result_free);

  char* summary = heig_result_summary(result.get());
  std::cout << summary;
  heig_string_free(summary);

  if (!args.out_path.empty()) {
    char* json = heig_result_to_json(result.get());
    bool ok = write_file(args.out_path, std::string(json) + "\n");
    heig_string_free(json);
    if (!ok) {
      std::cerr << "error: cannot write " << args.out_path << "\n";
      return 1;
    }
  }

  // verification (when requested) is the gate for a clean exit
  if (!args.no_verify && !heig_result_verified(result.get())) {
    const char* diag = heig_result_diagnosis(result.get());
    if (diag && diag[0] != '\0') return 0;  // documented edge, reported above
    return 1;
  }
  return 0;
}

int run_sweep(const ConfigArgs& args, const std::vector<long>& ns,
              const std::vector<std::string>& betas,
              const std::vector<long>& workers) {
  struct Cell {
    long n, workers;
    std::string beta;
    bool ok = false;
    int code = 0;
    double total = 0, compute = 0, netdiv = 0;
    std::string eigenvalue;
    std::string json;
  };
  std::vector<Cell> cells;
  int first_failure = 0;

  for (long n : ns) {
    for (const std::string& beta : betas) {
      for (long w : workers) {
        Cell cell;
        cell.n = n;
        cell.workers = w;
        cell.beta = beta;
        heig_status st = HEIG_OK;
        ConfigPtr cfg = make_config(args, n, w, beta, st);
        heig_result* raw = nullptr;
        if (st == HEIG_OK) st = heig_run(cfg.get(), &raw);
        if (st != HEIG_OK) {
          std::cerr << "sweep cell N=" << n << " beta=" << beta
                    << " workers=" << w << " failed: " << heig_last_error()
                    << "\n";
          cell.code = exit_code_for(st);
          if (first_failure == 0) first_failure = cell.code;
        } else {
          ResultPtr result(raw, heig_result_free);
          cell.ok = true;
          cell.total = heig_result_total_seconds(result.get());
          cell.compute = heig_result_compute_seconds(result.get());
          cell.netdiv = heig_result_net_wait_seconds(result.get()) +
                        heig_result_div_seconds(result.get());
          cell.eigenvalue = heig_result_eigenvalue(result.get());
          char* json = heig_result_to_json(result.get());
          cell.json = json;
          heig_string_free(json);
        }
        cells.push_back(std::move(cell));
      }
    }
  }

  auto pct = [](double part, double total) {
    return total > 0 ? 100.0 * part / total : 0.0;
  };
  std::printf("%6s %8s %8s | %12s %13s %11s | %s\n", "N", "beta", "workers",
              "Total Time", "Computation", "Net + Divs", "eigenvalue");
  for (const Cell& c : cells) {
    if (!c.ok) {
      std::printf("%6ld %8s %8ld | %12s %13s %11s | (failed, exit %d)\n", c.n,
                  c.beta.c_str(), c.workers, "-", "-", "-", c.code);
      continue;
    }
    std::printf("%6ld %8s %8ld | %10.3f s %12.1f%% %10.1f%% | %s\n", c.n,
                c.beta.c_str(), c.workers, c.total, pct(c.compute, c.total),
                pct(c.netdiv, c.total), c.eigenvalue.c_str());
  }

  if (!args.out_path.empty()) {
    std::string array = "[\n";
    bool first = true;
    for (const Cell& c : cells) {
      if (!c.ok) continue;
      if (!first) array += ",\n";
      array += c.json;
      first = false;
    }
    array += "\n]\n";
    if (!write_file(args.out_path, array)) {
      std::cerr << "error: cannot write " << args.out_path << "\n";
      return 1;
    }
  }
  return first_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Smallest eigenvalue of the Hankel moment matrix "
      "M[i][j] = (1/beta) Gamma((1+i+j)/beta), computed by secant iteration "
      "over pipelined fixed-point LDL^T determinants and certified by "
      "interval arithmetic."};

  ConfigArgs args;
  std::string n_spec = "100";
  std::string beta_spec = "1/1";
  std::string workers_spec = "1";
  bool sweep = false;

  app.add_option("--n", n_spec,
                 "matrix order (comma-separated list with --sweep)")
      ->required();
  app.add_option("--beta", beta_spec,
                 "weight parameter as exact rational p/q or integer");
  app.add_option("--precision-bits", args.precision_bits,
                 "fractional bits K (0 = automatic; must be even)");
  app.add_option("--workers", workers_spec,
                 "pipeline workers (comma-separated list with --sweep)");
  app.add_option("--net-bandwidth", args.bandwidth,
                 "simulated channel bandwidth in bytes/s, or 'inf'");
  app.add_option("--net-latency", args.latency_ms,
                 "simulated channel latency in ms");
  app.add_flag("--no-verify", args.no_verify,
               "skip interval verification of the result");
  app.add_option("--out", args.out_path, "write the JSON report here");
  app.add_option("--dump-matrix", args.dump_path,
                 "write the generated matrix (hex mantissas) here");
  app.add_flag("--sweep", sweep,
               "cross product of --n/--beta/--workers lists; combined table");

  CLI11_PARSE(app, argc, argv);

  try {
    auto to_long = +[](const std::string& s) { return std::stol(s); };
    auto to_str = +[](const std::string& s) { return s; };
    std::vector<long> ns = parse_list(n_spec, to_long);
    std::vector<std::string> betas = parse_list(beta_spec, to_str);
    std::vector<long> workers = parse_list(workers_spec, to_long);
    if (ns.empty() || betas.empty() || workers.empty()) {
      if (!sweep) {
        std::cerr << "error: empty parameter list\n";
        return 3;
      }
      return 0;  // empty sweep, empty table
    }
    if (!sweep) {
      if (ns.size() != 1 || betas.size() != 1 || workers.size() != 1) {
        std::cerr << "error: lists require --sweep\n";
        return 3;
      }
      args.n = ns[0];
      args.beta = betas[0];
      args.workers = workers[0];
      return run_single(args);
    }
    return run_sweep(args, ns, betas, workers);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
