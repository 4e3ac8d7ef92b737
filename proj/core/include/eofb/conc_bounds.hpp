#pragma once

#include "eofb/densmat.hpp"

namespace eofb {

// Selector bits for the lower-bound candidates entering the max. Comparing
// individual bounds against each other is a common use, so callers can
// restrict the set; every component value is still computed and reported.
inline constexpr unsigned kComponentPpt = 1u << 0;
inline constexpr unsigned kComponentCcnr = 1u << 1;
inline constexpr unsigned kComponentPurityA = 1u << 2;
inline constexpr unsigned kComponentPurityB = 1u << 3;
inline constexpr unsigned kComponentAll =
    kComponentPpt | kComponentCcnr | kComponentPurityA | kComponentPurityB;

/// Analytical concurrence bound pair. Lower candidates are
/// sqrt(2/(m(m-1)))(‖ρ^{T_A}‖-1), sqrt(2/(m(m-1)))(‖R(ρ)‖-1),
/// sqrt(2[Tr ρ²-Tr ρ_A²]) and sqrt(2[Tr ρ²-Tr ρ_B²]); the upper bounds are
/// sqrt(2[1-Tr ρ_A²]) and sqrt(2[1-Tr ρ_B²]).
struct ConcurrenceBounds {
  int m = 0;
  double ppt_lower = 0.0;
  double ccnr_lower = 0.0;
  double purity_a_lower = 0.0;
  double purity_b_lower = 0.0;
  double lower = 0.0;  // max of selected candidates, floored at 0
  double upper_a = 0.0;
  double upper_b = 0.0;
  double upper = 0.0;  // min(upper_a, upper_b)
  unsigned components = kComponentAll;
  // Set when the purity radicand was negative and the component clamped to 0.
  bool purity_a_clamped = false;
  bool purity_b_clamped = false;
};

ConcurrenceBounds concurrence_lower(const BipartiteDensityMatrix& rho,
                                    unsigned components = kComponentAll);
ConcurrenceBounds concurrence_upper(const BipartiteDensityMatrix& rho);

/// Both sides in one report.
ConcurrenceBounds concurrence_bounds(const BipartiteDensityMatrix& rho,
                                     unsigned components = kComponentAll);

}  // namespace eofb
