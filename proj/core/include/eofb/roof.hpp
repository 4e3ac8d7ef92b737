#pragma once

#include "eofb/densmat.hpp"

#include <cstdint>

namespace eofb {

enum class RoofObjective { eof, concurrence };

/// Best ensemble average found; an upper estimate of the true convex roof.
struct RoofEstimate {
  double value = 0.0;
  int ensemble_size = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  long iterations = 0;    // summed across restarts
  bool converged = false; // every restart reached the step floor
};

struct RoofOptions {
  int max_iterations = 5000;
  double initial_step = 0.25;
  double step_shrink = 0.7;
  int shrink_after = 8;  // consecutive rejections before shrinking
  double min_step = 1e-6;
};

/// Randomized convex-roof minimization. Ensembles {p_i, |psi_i>} of size K
/// are parameterized by K x rank isometries applied to the eigen-ensemble of
/// rho (every rank-K decomposition arises this way); each restart runs an
/// adaptive accept-if-better local search over isometry perturbations.
/// Restarts use independent streams derived from `seed` and merge by
/// minimum, so results are deterministic and restart-count monotone.
RoofEstimate convex_roof_estimate(const BipartiteDensityMatrix& rho,
                                  RoofObjective objective, int ensemble_size,
                                  int restarts, std::uint64_t seed,
                                  const RoofOptions& options = RoofOptions());

/// Hilbert-Schmidt-style random state: G G†/Tr(G G†) with G an (mn) x rank
/// Ginibre matrix from a seeded deterministic stream.
BipartiteDensityMatrix random_density_matrix(int m, int n, int rank,
                                             std::uint64_t seed);

/// Haar-like random pure state on m ⊗ n (normalized Gaussian amplitudes).
ComplexVector random_state_vector(int m, int n, std::uint64_t seed);

}  // namespace eofb
