#include "eofb/eof_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eofb {

namespace {

// Components can sit a few ulps outside [0, c_max]; epsilon/eta reject only
// past the shared clamp tolerance.
double floor_at_zero(double c) { return std::max(c, 0.0); }

}  // namespace

double pure_eof(const SchmidtVector& mu) {
  double entropy = 0.0;
  for (double v : mu.coeffs)
    if (v > kEigFloor) entropy -= v * std::log(v);
  return entropy;
}

EofBoundsReport eof_bounds(const BipartiteDensityMatrix& rho,
                           const EnvelopeTable& table, unsigned components) {
  if (table.m != rho.dim_a)
    throw std::invalid_argument(
        "eof_bounds: envelope table was built for a different m");
  EofBoundsReport report;
  report.m = rho.dim_a;
  report.n = rho.dim_b;
  report.swapped = rho.swapped;
  report.conc = concurrence_bounds(rho, components);
  report.eof_lower = epsilon_of(table, report.conc.lower);
  report.eof_upper = eta_of(table, report.conc.upper);
  report.eps_ppt = epsilon_of(table, floor_at_zero(report.conc.ppt_lower));
  report.eps_ccnr = epsilon_of(table, floor_at_zero(report.conc.ccnr_lower));
  report.eps_purity_a = epsilon_of(table, report.conc.purity_a_lower);
  report.eps_purity_b = epsilon_of(table, report.conc.purity_b_lower);
  return report;
}

std::pair<double, double> eof_bounds_from_concurrence(
    double c_low, double c_high, const EnvelopeTable& table) {
  if (!(c_low >= -1e-12) || !(c_high >= c_low - 1e-12) ||
      c_high > table.c_max + kClampTol)
    throw std::domain_error(
        "eof_bounds_from_concurrence: need 0 <= c_low <= c_high <= c_max");
  return {epsilon_of(table, c_low), eta_of(table, c_high)};
}

double two_qubit_concurrence_exact(const BipartiteDensityMatrix& rho) {
  if (rho.dim_a != 2 || rho.dim_b != 2)
    throw std::invalid_argument(
        "two_qubit_concurrence_exact: state is not 2x2");
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const ComplexMatrix flipped = yy * rho.mat.conjugate() * yy;

  // Hermitian route: eigenvalues of rho*flipped equal those of
  // sqrt(rho)*flipped*sqrt(rho), which is PSD.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.mat);
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix sqrt_rho =
      es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es2(sqrt_rho * flipped *
                                                   sqrt_rho);
  Eigen::VectorXd lam = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  // Ascending order from the solver: lam(3) is the largest.
  return std::max(0.0, lam(3) - lam(2) - lam(1) - lam(0));
}

double two_qubit_eof_exact(const BipartiteDensityMatrix& rho) {
  const double c = two_qubit_concurrence_exact(rho);
  const double gamma =
      0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return h_entropy(gamma) + h_entropy(1.0 - gamma);
}

}  // namespace eofb
