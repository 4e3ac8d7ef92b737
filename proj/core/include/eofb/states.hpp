#pragma once

#include "eofb/densmat.hpp"

namespace eofb {

/// Werner family on d ⊗ d: [(d-f) I + (df-1) F] / (d³-d), with F the flip
/// operator F|ij> = |ji>. Satisfies Tr(rho F) = f and is U⊗U invariant.
BipartiteDensityMatrix werner(int d, double f);

/// max(0, -f), the concurrence value consistent with the d=3 Werner upper
/// bound -f log 2. A hint, not a computed bound; only d=3 is supported.
double werner_concurrence_hint(int d, double f);

/// 3 ⊗ 3 family (x/9) I + (1-x) |psi><psi| with
/// psi = (a,0,0,0,1/sqrt3,0,0,0,1/sqrt3)/sqrt(a²+2/3), a and x in [0,1].
BipartiteDensityMatrix example2_state(double a, double x);

/// Closed-form purity functionals of example2_state, evaluated symbolically
/// (no matrix construction); an independent fixture against the densmat path.
struct Example2Functionals {
  double purity_gap = 0.0;         // Tr(rho²) - Tr(rho_A²)
  double one_minus_purity_a = 0.0; // 1 - Tr(rho_A²)
};
Example2Functionals example2_functionals(double a, double x);

/// sum_i sqrt(mu_i) |ii> embedded in m ⊗ n (n >= m).
ComplexVector pure_from_schmidt(const SchmidtVector& mu, int n);

/// Projector onto a normalized amplitude vector, validated as a density
/// matrix on m ⊗ n.
BipartiteDensityMatrix pure_state_density(const ComplexVector& psi, int m,
                                          int n);

}  // namespace eofb
