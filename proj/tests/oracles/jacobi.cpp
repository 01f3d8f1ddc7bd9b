#include "jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heig::oracle {

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
  double s = 0;
  long n = static_cast<long>(a.size());
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

void jacobi_sweep(std::vector<std::vector<double>>& a) {
  long n = static_cast<long>(a.size());
  for (long p = 0; p < n - 1; ++p) {
    for (long q = p + 1; q < n; ++q) {
      double apq = a[p][q];
      if (apq == 0.0) continue;
      double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
      // smaller root of t^2 + 2 theta t - 1 = 0, the numerically stable pick
      double t = (theta >= 0 ? 1.0 : -1.0) /
                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      double c = 1.0 / std::sqrt(t * t + 1.0);
      double s = t * c;
      for (long k = 0; k < n; ++k) {
        double akp = a[k][p], akq = a[k][q];
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
      }
      for (long k = 0; k < n; ++k) {
        double apk = a[p][k], aqk = a[q][k];
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
      }
    }
  }
}

double smallest_eig_small(const std::vector<std::vector<double>>& input) {
  long n = static_cast<long>(input.size());
  if (n > 12) throw SizeGuard("jacobi oracle handles n <= 12");
  if (n < 1) throw SizeGuard("jacobi oracle needs n >= 1");
  double scale = 0;
  for (const auto& row : input)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (!(scale < 1e300)) throw OverflowGuard("entries exceed machine range");

  std::vector<std::vector<double>> a = input;
  double tol = std::numeric_limits<double>::epsilon() * scale * n;
  for (int sweep = 0; sweep < 64; ++sweep) {
    if (off_diagonal_norm(a) <= tol) break;
    jacobi_sweep(a);
  }
  double smallest = a[0][0];
  for (long i = 1; i < n; ++i) smallest = std::min(smallest, a[i][i]);
  return smallest;
}

}  // namespace heig::oracle
