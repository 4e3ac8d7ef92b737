#include "eofb/roof.hpp"

#include "eofb/rng.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace eofb {

namespace {

// Real part drawn before imaginary part; a fixed order keeps streams
// bit-reproducible (argument evaluation order is unspecified).
Complex complex_normal(GaussianRng& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {re, im};
}

ComplexMatrix gaussian_matrix(int rows, int cols, GaussianRng& rng) {
  ComplexMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = complex_normal(rng);
  return out;
}

// Thin Q factor: maps an arbitrary K x r matrix (K >= r) to an isometry.
ComplexMatrix orthonormalize(const ComplexMatrix& mat) {
  Eigen::HouseholderQR<ComplexMatrix> qr(mat);
  return qr.householderQ() *
         ComplexMatrix::Identity(mat.rows(), mat.cols());
}

double entropy_from_eigs(double l1, double l2, double l3) {
  double s = 0.0;
  for (double v : {l1, l2, l3})
    if (v > kEigFloor) s -= v * std::log(v);
  return s;
}

// Closed-form spectrum entropy of small Hermitian PSD matrices; falls back
// to the iterative solver above 3x3. The search loop calls this millions of
// times, so the 2x2/3x3 cases avoid the solver setup cost.
double hermitian_entropy(const ComplexMatrix& a) {
  const long n = a.rows();
  if (n == 1) return entropy_from_eigs(a(0, 0).real(), 0.0, 0.0);
  if (n == 2) {
    const double mean = 0.5 * (a(0, 0).real() + a(1, 1).real());
    const double diff = 0.5 * (a(0, 0).real() - a(1, 1).real());
    const double off = std::sqrt(diff * diff + std::norm(a(0, 1)));
    return entropy_from_eigs(mean + off, mean - off, 0.0);
  }
  if (n == 3) {
    const double p1 = std::norm(a(0, 1)) + std::norm(a(0, 2)) + std::norm(a(1, 2));
    const double q = (a(0, 0).real() + a(1, 1).real() + a(2, 2).real()) / 3.0;
    if (p1 < 1e-30)
      return entropy_from_eigs(a(0, 0).real(), a(1, 1).real(), a(2, 2).real());
    const double d0 = a(0, 0).real() - q;
    const double d1 = a(1, 1).real() - q;
    const double d2 = a(2, 2).real() - q;
    const double p = std::sqrt((d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1) / 6.0);
    // det(B)/2 for B = (A - qI)/p is real for Hermitian A.
    const Complex b00 = (a(0, 0) - q) / p, b01 = a(0, 1) / p, b02 = a(0, 2) / p;
    const Complex b11 = (a(1, 1) - q) / p, b12 = a(1, 2) / p;
    const Complex b22 = (a(2, 2) - q) / p;
    const Complex det = b00 * (b11 * b22 - b12 * std::conj(b12)) -
                        b01 * (std::conj(b01) * b22 - b12 * std::conj(b02)) +
                        b02 * (std::conj(b01) * std::conj(b12) -
                               b11 * std::conj(b02));
    const double r = std::clamp(det.real() / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double two_pi_3 = 2.0943951023931953;
    const double l1 = q + 2.0 * p * std::cos(phi);
    const double l3 = q + 2.0 * p * std::cos(phi + two_pi_3);
    const double l2 = 3.0 * q - l1 - l3;
    return entropy_from_eigs(l1, l2, l3);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (long i = 0; i < n; ++i) {
    const double v = es.eigenvalues()(i);
    if (v > kEigFloor) s -= v * std::log(v);
  }
  return s;
}

struct EnsembleContext {
  int m;
  int n;
  RoofObjective objective;
  const ComplexMatrix& scaled_vectors;  // (mn) x rank, columns sqrt(l_j) v_j
};

// Average objective of the ensemble w_i = sum_j T_ij (scaled eigenvector j).
double ensemble_average(const EnsembleContext& ctx, const ComplexMatrix& t) {
  const ComplexMatrix members = ctx.scaled_vectors * t.transpose();
  double total = 0.0;
  ComplexMatrix rho_a(ctx.m, ctx.m);
  for (long i = 0; i < members.cols(); ++i) {
    const double weight = members.col(i).squaredNorm();
    if (weight < 1e-14) continue;
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>
        amps(members.col(i).data(), ctx.m, ctx.n);
    if (ctx.objective == RoofObjective::concurrence) {
      rho_a.noalias() = amps * amps.adjoint();
      rho_a /= weight;
      const double radicand = 2.0 * (1.0 - rho_a.squaredNorm());
      total += weight * std::sqrt(std::max(0.0, radicand));
    } else {
      rho_a.noalias() = amps * amps.adjoint();
      rho_a /= weight;
      total += weight * hermitian_entropy(rho_a);
    }
  }
  return total;
}

}  // namespace

RoofEstimate convex_roof_estimate(const BipartiteDensityMatrix& rho,
                                  RoofObjective objective, int ensemble_size,
                                  int restarts, std::uint64_t seed,
                                  const RoofOptions& options) {
  if (restarts < 1)
    throw std::invalid_argument("convex_roof_estimate: restarts must be >= 1");
  const int mn = rho.dim_a * rho.dim_b;
  if (ensemble_size > 4 * mn)
    throw std::invalid_argument(
        "convex_roof_estimate: ensemble size exceeds the 4*m*n cap");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.mat);
  std::vector<int> kept;
  for (int i = 0; i < mn; ++i)
    if (es.eigenvalues()(i) > 1e-12) kept.push_back(i);
  const int rank = static_cast<int>(kept.size());
  if (ensemble_size < rank)
    throw std::invalid_argument(
        "convex_roof_estimate: ensemble size below state rank");

  ComplexMatrix scaled(mn, rank);
  for (int j = 0; j < rank; ++j)
    scaled.col(j) =
        std::sqrt(es.eigenvalues()(kept[j])) * es.eigenvectors().col(kept[j]);
  const EnsembleContext ctx{rho.dim_a, rho.dim_b, objective, scaled};

  RoofEstimate estimate;
  estimate.ensemble_size = ensemble_size;
  estimate.restarts = restarts;
  estimate.seed = seed;
  estimate.value = std::numeric_limits<double>::infinity();
  estimate.converged = true;

  for (int r = 0; r < restarts; ++r) {
    GaussianRng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    ComplexMatrix isometry =
        orthonormalize(gaussian_matrix(ensemble_size, rank, rng));
    double best = ensemble_average(ctx, isometry);
    double step = options.initial_step;
    int rejections = 0;
    bool reached_floor = false;
    long iters = 0;
    while (iters < options.max_iterations) {
      ++iters;
      const ComplexMatrix candidate = orthonormalize(
          isometry + step * gaussian_matrix(ensemble_size, rank, rng));
      const double value = ensemble_average(ctx, candidate);
      if (value < best) {
        best = value;
        isometry = candidate;
        rejections = 0;
      } else if (++rejections >= options.shrink_after) {
        rejections = 0;
        step *= options.step_shrink;
        if (step < options.min_step) {
          reached_floor = true;
          break;
        }
      }
    }
    estimate.iterations += iters;
    estimate.converged = estimate.converged && reached_floor;
    estimate.value = std::min(estimate.value, best);
  }
  return estimate;
}

BipartiteDensityMatrix random_density_matrix(int m, int n, int rank,
                                             std::uint64_t seed) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("random_density_matrix: dims must be >= 1");
  if (rank < 1 || rank > m * n)
    throw std::invalid_argument(
        "random_density_matrix: rank must be in [1, m*n]");
  GaussianRng rng(seed);
  const ComplexMatrix g = gaussian_matrix(m * n, rank, rng);
  ComplexMatrix mat = g * g.adjoint();
  mat = 0.5 * (mat + mat.adjoint().eval());
  mat /= mat.trace().real();
  return make_bipartite(m, n, mat);
}

ComplexVector random_state_vector(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("random_state_vector: dims must be >= 1");
  GaussianRng rng(seed);
  ComplexVector psi(m * n);
  for (int i = 0; i < m * n; ++i) psi(i) = complex_normal(rng);
  psi /= psi.norm();
  return psi;
}

}  // namespace eofb
