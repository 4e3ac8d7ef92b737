#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace eofb {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Validation tolerances shared across the library.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
// Eigenvalues below this floor contribute 0 to entropies (the h(0)=0 limit).
inline constexpr double kEigFloor = 1e-12;

enum class Subsystem { A, B };

/// Schmidt spectrum of a bipartite pure state: nonnegative entries in
/// descending order, summing to one.
struct SchmidtVector {
  std::vector<double> coeffs;

  explicit SchmidtVector(std::vector<double> mu);

  int size() const { return static_cast<int>(coeffs.size()); }
  double operator[](int i) const { return coeffs[static_cast<size_t>(i)]; }
};

/// Density matrix on an m ⊗ n system. The composite row index is i*dim_b + k
/// for A-index i and B-index k. Construction relabels the subsystems when
/// dim_a > dim_b so that dim_a <= dim_b always holds; `swapped` records that
/// the roles were exchanged.
struct BipartiteDensityMatrix {
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix mat;
  bool swapped = false;
};

/// Validates and wraps a raw matrix. Throws std::invalid_argument naming the
/// violated invariant (size mismatch, non-finite entries, non-Hermitian,
/// trace != 1, negative eigenvalue beyond tolerance).
BipartiteDensityMatrix make_bipartite(int dim_a, int dim_b,
                                      const ComplexMatrix& mat);

/// Largest concurrence attainable on an m ⊗ n system: sqrt(2(m-1)/m).
double max_concurrence(int m);

ComplexMatrix partial_trace(const BipartiteDensityMatrix& rho, Subsystem which);

/// Transposes the A indices only: entry (i*n+k, j*n+l) of the result is entry
/// (j*n+k, i*n+l) of the input.
ComplexMatrix partial_transpose_a(const BipartiteDensityMatrix& rho);

/// Realigned matrix: the m² x n² array with entry (i*m+j, k*n+l) equal to
/// rho(i*n+k, j*n+l). Its trace norm exceeding 1 witnesses entanglement.
ComplexMatrix realign(const BipartiteDensityMatrix& rho);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& mat);

/// Tr(M²) as sum_ij M_ij M_ji; returns the real part.
double purity(const ComplexMatrix& mat);

/// Real spectrum of a Hermitian matrix, descending. Throws if the input is
/// not Hermitian within kHermTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& mat);

/// -sum lambda_i log(lambda_i), natural log, for a unit-trace PSD matrix.
double von_neumann_entropy(const ComplexMatrix& rho_reduced);

/// Schmidt coefficients of a normalized pure state on m ⊗ n, i.e. the
/// eigenvalues of its A marginal, descending, exactly m entries.
SchmidtVector schmidt_coefficients(const ComplexVector& psi, int dim_a,
                                   int dim_b);

/// sqrt(2(1 - sum mu_i²)) per the pure-state concurrence formula.
double pure_concurrence(const SchmidtVector& mu);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace eofb
