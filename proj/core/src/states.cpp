#include "eofb/states.hpp"

#include <cmath>
#include <stdexcept>

namespace eofb {

BipartiteDensityMatrix werner(int d, double f) {
  if (d < 2) throw std::invalid_argument("werner: d must be >= 2");
  if (!(f >= -1.0 && f <= 1.0))
    throw std::invalid_argument("werner: f must lie in [-1, 1]");
  const int dd = d * d;
  ComplexMatrix mat = ComplexMatrix::Zero(dd, dd);
  const double id_weight = (d - f) / (static_cast<double>(d) * dd - d);
  const double flip_weight = (d * f - 1.0) / (static_cast<double>(d) * dd - d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      mat(i * d + k, i * d + k) += id_weight;
      mat(i * d + k, k * d + i) += flip_weight;
    }
  return make_bipartite(d, d, mat);
}

double werner_concurrence_hint(int d, double f) {
  if (d != 3)
    throw std::invalid_argument(
        "werner_concurrence_hint: only d = 3 is supported");
  if (!(f >= -1.0 && f <= 1.0))
    throw std::invalid_argument("werner_concurrence_hint: f must lie in [-1, 1]");
  return std::max(0.0, -f);
}

BipartiteDensityMatrix example2_state(double a, double x) {
  if (!(a >= 0.0 && a <= 1.0))
    throw std::invalid_argument("example2_state: a must lie in [0, 1]");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("example2_state: x must lie in [0, 1]");
  ComplexVector psi = ComplexVector::Zero(9);
  const double norm = std::sqrt(a * a + 2.0 / 3.0);
  psi(0) = a / norm;
  psi(4) = 1.0 / (std::sqrt(3.0) * norm);
  psi(8) = 1.0 / (std::sqrt(3.0) * norm);
  ComplexMatrix mat = (x / 9.0) * ComplexMatrix::Identity(9, 9);
  mat += (1.0 - x) * (psi * psi.adjoint());
  return make_bipartite(3, 3, mat);
}

Example2Functionals example2_functionals(double a, double x) {
  if (!(a >= 0.0 && a <= 1.0) || !(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("example2_functionals: a, x must lie in [0, 1]");
  const double a2 = a * a;
  const double a4 = a2 * a2;
  const double denom = (2.0 + 3.0 * a2) * (2.0 + 3.0 * a2);
  Example2Functionals out;
  out.purity_gap = 2.0 *
                   (9.0 - 26.0 * x + 9.0 * a4 * (-2.0 + x) * x +
                    13.0 * x * x + 6.0 * a2 * (9.0 - 22.0 * x + 11.0 * x * x)) /
                   (9.0 * denom);
  out.one_minus_purity_a = (6.0 + 4.0 * x - 18.0 * a4 * (-2.0 + x) * x -
                            2.0 * x * x + 12.0 * a2 * (3.0 - 2.0 * x + x * x)) /
                           (3.0 * denom);
  return out;
}

ComplexVector pure_from_schmidt(const SchmidtVector& mu, int n) {
  const int m = mu.size();
  if (n < m)
    throw std::invalid_argument("pure_from_schmidt: need n >= len(mu)");
  ComplexVector psi = ComplexVector::Zero(static_cast<long>(m) * n);
  for (int i = 0; i < m; ++i) psi(i * n + i) = std::sqrt(mu[i]);
  return psi;
}

BipartiteDensityMatrix pure_state_density(const ComplexVector& psi, int m,
                                          int n) {
  if (psi.size() != static_cast<long>(m) * n)
    throw std::invalid_argument(
        "pure_state_density: amplitude count does not match dims");
  const ComplexMatrix mat = psi * psi.adjoint();
  return make_bipartite(m, n, mat);
}

}  // namespace eofb
