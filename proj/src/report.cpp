#include "report.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace heig {

std::string to_json(const RunResult& r, int indent) {
  nlohmann::json j;
  j["n"] = r.n;
  j["beta"] = r.beta.to_string();
  j["k_bits"] = r.k_bits;
  j["kv_bits"] = r.kv_bits;
  j["eigenvalue"] = r.eigenvalue;
  j["verified"] = r.verified;
  j["iterations"] = r.iterations;
  j["condition_lower_bound"] = r.condition_lower_bound;
  j["timing"] = {{"total_s", r.timing.total_seconds},
                 {"compute_s", r.timing.compute_seconds},
                 {"net_s", r.timing.net_wait_seconds},
                 {"div_s", r.timing.div_seconds}};
  j["workers"] = r.workers;
  return j.dump(indent);
}

RunResult from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunResult r;
  r.n = j.at("n").get<long>();
  r.beta = Rational::parse(j.at("beta").get<std::string>());
  r.k_bits = j.at("k_bits").get<long>();
  r.kv_bits = j.at("kv_bits").get<long>();
  r.eigenvalue = j.at("eigenvalue").get<std::string>();
  r.verified = j.at("verified").get<bool>();
  r.iterations = j.at("iterations").get<long>();
  r.condition_lower_bound = j.at("condition_lower_bound").get<std::string>();
  r.timing.total_seconds = j.at("timing").at("total_s").get<double>();
  r.timing.compute_seconds = j.at("timing").at("compute_s").get<double>();
  r.timing.net_wait_seconds = j.at("timing").at("net_s").get<double>();
  r.timing.div_seconds = j.at("timing").at("div_s").get<double>();
  r.workers = j.at("workers").get<long>();
  return r;
}

std::string summary_text(const RunResult& r) {
  std::ostringstream os;
  os << "N=" << r.n << " beta=" << r.beta.to_string()
     << " workers=" << r.workers << " K=" << r.k_bits;
  if (r.kv_bits > 0) os << " Kv=" << r.kv_bits;
  os << "\n";
  os << "smallest eigenvalue : " << r.eigenvalue << "\n";
  os << "verified            : " << (r.verified ? "yes" : "no");
  if (!r.diagnosis.empty()) os << "  (" << r.diagnosis << ")";
  os << "\n";
  os << "iterations          : " << r.iterations << "\n";
  os << "cond(M) lower bound : " << r.condition_lower_bound << "\n";

  double total = r.timing.total_seconds;
  auto pct = [&](double s) {
    if (total <= 0) return 0.0;
    return 100.0 * s / total;
  };
  char buf[160];
  std::snprintf(buf, sizeof buf, "Total Time    %10.3f s\n", total);
  os << buf;
  std::snprintf(buf, sizeof buf, "Computation   %9.1f%%  (%.3f)\n",
                pct(r.timing.compute_seconds), r.timing.compute_seconds);
  os << buf;
  std::snprintf(buf, sizeof buf, "Net + Divs    %9.1f%%  (%.3f)\n",
                pct(r.timing.net_wait_seconds + r.timing.div_seconds),
                r.timing.net_wait_seconds + r.timing.div_seconds);
  os << buf;
  return os.str();
}

}  // namespace heig
