#include "eofb/densmat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eofb {

namespace {

bool all_finite(const ComplexMatrix& mat) {
  return mat.allFinite();
}

// Relabels A and B: out(k*m+i, l*m+j) = in(i*n+k, j*n+l).
ComplexMatrix swap_subsystems(const ComplexMatrix& mat, int m, int n) {
  ComplexMatrix out(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < n; ++l)
          out(k * m + i, l * m + j) = mat(i * n + k, j * n + l);
  return out;
}

}  // namespace

SchmidtVector::SchmidtVector(std::vector<double> mu) : coeffs(std::move(mu)) {
  if (coeffs.empty())
    throw std::invalid_argument("SchmidtVector: empty coefficient list");
  double sum = 0.0;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!(coeffs[i] >= 0.0))
      throw std::invalid_argument("SchmidtVector: negative coefficient");
    if (i > 0 && coeffs[i] > coeffs[i - 1] + 1e-12)
      throw std::invalid_argument("SchmidtVector: coefficients not descending");
    sum += coeffs[i];
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("SchmidtVector: coefficients do not sum to 1");
}

BipartiteDensityMatrix make_bipartite(int dim_a, int dim_b,
                                      const ComplexMatrix& mat) {
  if (dim_a < 1 || dim_b < 1)
    throw std::invalid_argument("make_bipartite: dimensions must be >= 1");
  const long total = static_cast<long>(dim_a) * dim_b;
  if (mat.rows() != total || mat.cols() != total) {
    std::ostringstream msg;
    msg << "make_bipartite: matrix is " << mat.rows() << "x" << mat.cols()
        << " but dims " << dim_a << "x" << dim_b << " require " << total << "x"
        << total;
    throw std::invalid_argument(msg.str());
  }
  if (!all_finite(mat))
    throw std::invalid_argument("make_bipartite: matrix has non-finite entries");

  BipartiteDensityMatrix rho;
  if (dim_a > dim_b) {
    rho.dim_a = dim_b;
    rho.dim_b = dim_a;
    rho.mat = swap_subsystems(mat, dim_a, dim_b);
    rho.swapped = true;
  } else {
    rho.dim_a = dim_a;
    rho.dim_b = dim_b;
    rho.mat = mat;
    rho.swapped = false;
  }

  const double herm_dev = (rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermTol) {
    std::ostringstream msg;
    msg << "make_bipartite: matrix is not Hermitian (max deviation " << herm_dev
        << " exceeds " << kHermTol << ")";
    throw std::invalid_argument(msg.str());
  }
  const double trace_dev = std::abs(rho.mat.trace() - Complex(1.0, 0.0));
  if (trace_dev > kTraceTol) {
    std::ostringstream msg;
    msg << "make_bipartite: trace deviates from 1 by " << trace_dev;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.mat,
                                                  Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    std::ostringstream msg;
    msg << "make_bipartite: matrix has negative eigenvalue " << min_eig;
    throw std::invalid_argument(msg.str());
  }
  return rho;
}

double max_concurrence(int m) {
  if (m < 1) throw std::invalid_argument("max_concurrence: m must be >= 1");
  return std::sqrt(2.0 * (m - 1) / m);
}

ComplexMatrix partial_trace(const BipartiteDensityMatrix& rho,
                            Subsystem which) {
  const int m = rho.dim_a;
  const int n = rho.dim_b;
  if (rho.mat.rows() != static_cast<long>(m) * n)
    throw std::invalid_argument("partial_trace: dims do not match matrix size");
  if (which == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k) out(i, j) += rho.mat(i * n + k, j * n + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < m; ++i) out(k, l) += rho.mat(i * n + k, i * n + l);
  return out;
}

ComplexMatrix partial_transpose_a(const BipartiteDensityMatrix& rho) {
  const int m = rho.dim_a;
  const int n = rho.dim_b;
  ComplexMatrix out(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i * n + k, j * n + l) = rho.mat(j * n + k, i * n + l);
  return out;
}

ComplexMatrix realign(const BipartiteDensityMatrix& rho) {
  const int m = rho.dim_a;
  const int n = rho.dim_b;
  ComplexMatrix out(m * m, n * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i * m + j, k * n + l) = rho.mat(i * n + k, j * n + l);
  return out;
}

double trace_norm(const ComplexMatrix& mat) {
  if (!all_finite(mat))
    throw std::invalid_argument("trace_norm: non-finite entries");
  Eigen::JacobiSVD<ComplexMatrix> svd(mat);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("trace_norm: SVD failed to converge");
  return svd.singularValues().sum();
}

double purity(const ComplexMatrix& mat) {
  if (mat.rows() != mat.cols())
    throw std::invalid_argument("purity: matrix is not square");
  const Complex tr2 = (mat.array() * mat.transpose().array()).sum();
  return tr2.real();
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& mat) {
  if (mat.rows() != mat.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  const double herm_dev = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermTol) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: matrix is not Hermitian (max deviation "
        << herm_dev << ")";
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat, Eigen::EigenvaluesOnly);
  std::vector<double> vals(es.eigenvalues().data(),
                           es.eigenvalues().data() + mat.rows());
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

double von_neumann_entropy(const ComplexMatrix& rho_reduced) {
  const std::vector<double> vals = hermitian_eigenvalues(rho_reduced);
  double entropy = 0.0;
  for (double v : vals) {
    if (v < -kPsdTol) {
      std::ostringstream msg;
      msg << "von_neumann_entropy: negative eigenvalue " << v;
      throw std::invalid_argument(msg.str());
    }
    if (v > kEigFloor) entropy -= v * std::log(v);
  }
  return entropy;
}

SchmidtVector schmidt_coefficients(const ComplexVector& psi, int dim_a,
                                   int dim_b) {
  if (dim_a < 1 || dim_b < 1)
    throw std::invalid_argument("schmidt_coefficients: dims must be >= 1");
  if (psi.size() != static_cast<long>(dim_a) * dim_b)
    throw std::invalid_argument(
        "schmidt_coefficients: amplitude count does not match dims");
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10)
    throw std::invalid_argument("schmidt_coefficients: state not normalized");

  // A marginal of |psi><psi| via the m x n amplitude array Psi_{ik}.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      amps(psi.data(), dim_a, dim_b);
  const ComplexMatrix rho_a = amps * amps.adjoint();
  std::vector<double> mu = hermitian_eigenvalues(rho_a);
  double sum = 0.0;
  for (double& v : mu) {
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  for (double& v : mu) v /= sum;
  return SchmidtVector(std::move(mu));
}

double pure_concurrence(const SchmidtVector& mu) {
  double sq = 0.0;
  for (double v : mu.coeffs) sq += v * v;
  const double radicand = 2.0 * (1.0 - sq);
  return std::sqrt(std::max(0.0, radicand));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace eofb
