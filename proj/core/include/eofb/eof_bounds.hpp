#pragma once

#include "eofb/conc_bounds.hpp"
#include "eofb/densmat.hpp"
#include "eofb/envelope.hpp"

#include <utility>

namespace eofb {

/// H(mu) = -sum mu_i log mu_i, the EoF of the pure state with this spectrum.
double pure_eof(const SchmidtVector& mu);

/// Composed bound sandwich epsilon(c_lower) <= E(rho) <= eta(c_upper), with
/// per-component epsilon values for figure reproduction.
struct EofBoundsReport {
  int m = 0;
  int n = 0;
  bool swapped = false;
  ConcurrenceBounds conc;
  double eof_lower = 0.0;
  double eof_upper = 0.0;
  double eps_ppt = 0.0;
  double eps_ccnr = 0.0;
  double eps_purity_a = 0.0;
  double eps_purity_b = 0.0;
};

EofBoundsReport eof_bounds(const BipartiteDensityMatrix& rho,
                           const EnvelopeTable& table,
                           unsigned components = kComponentAll);

/// Direct composition when concurrence bounds are already known:
/// returns (epsilon(c_low), eta(c_high)).
std::pair<double, double> eof_bounds_from_concurrence(
    double c_low, double c_high, const EnvelopeTable& table);

/// Exact two-qubit concurrence: max(0, l1-l2-l3-l4) with l_i the descending
/// square roots of the eigenvalues of rho * (sy⊗sy) rho* (sy⊗sy).
double two_qubit_concurrence_exact(const BipartiteDensityMatrix& rho);

/// Exact two-qubit EoF (natural log): h(g) + h(1-g) with
/// g = (1 + sqrt(1-C²))/2.
double two_qubit_eof_exact(const BipartiteDensityMatrix& rho);

}  // namespace eofb
