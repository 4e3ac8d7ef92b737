#include "eofb/conc_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eofb {

namespace {

// sqrt of 2*radicand clamped at 0; flags the clamp for the caller.
double root_or_zero(double radicand, bool* clamped) {
  if (radicand < 0.0) {
    if (clamped) *clamped = true;
    return 0.0;
  }
  return std::sqrt(2.0 * radicand);
}

void fill_lower(const BipartiteDensityMatrix& rho, unsigned components,
                ConcurrenceBounds* out) {
  const int m = rho.dim_a;
  const double norm_fac = std::sqrt(2.0 / (static_cast<double>(m) * (m - 1)));
  out->ppt_lower = norm_fac * (trace_norm(partial_transpose_a(rho)) - 1.0);
  out->ccnr_lower = norm_fac * (trace_norm(realign(rho)) - 1.0);

  const double tr2 = purity(rho.mat);
  const double tr2_a = purity(partial_trace(rho, Subsystem::A));
  const double tr2_b = purity(partial_trace(rho, Subsystem::B));
  out->purity_a_lower = root_or_zero(tr2 - tr2_a, &out->purity_a_clamped);
  out->purity_b_lower = root_or_zero(tr2 - tr2_b, &out->purity_b_clamped);

  out->components = components;
  double lower = 0.0;
  if (components & kComponentPpt) lower = std::max(lower, out->ppt_lower);
  if (components & kComponentCcnr) lower = std::max(lower, out->ccnr_lower);
  if (components & kComponentPurityA)
    lower = std::max(lower, out->purity_a_lower);
  if (components & kComponentPurityB)
    lower = std::max(lower, out->purity_b_lower);
  out->lower = lower;
}

void fill_upper(const BipartiteDensityMatrix& rho, ConcurrenceBounds* out) {
  const double tr2_a = purity(partial_trace(rho, Subsystem::A));
  const double tr2_b = purity(partial_trace(rho, Subsystem::B));
  out->upper_a = root_or_zero(1.0 - tr2_a, nullptr);
  out->upper_b = root_or_zero(1.0 - tr2_b, nullptr);
  out->upper = std::min(out->upper_a, out->upper_b);
}

void require_entangleable(const BipartiteDensityMatrix& rho) {
  if (rho.dim_a < 2)
    throw std::invalid_argument(
        "concurrence bounds: min(dim_a, dim_b) must be >= 2");
}

}  // namespace

ConcurrenceBounds concurrence_lower(const BipartiteDensityMatrix& rho,
                                    unsigned components) {
  require_entangleable(rho);
  ConcurrenceBounds out;
  out.m = rho.dim_a;
  fill_lower(rho, components, &out);
  return out;
}

ConcurrenceBounds concurrence_upper(const BipartiteDensityMatrix& rho) {
  require_entangleable(rho);
  ConcurrenceBounds out;
  out.m = rho.dim_a;
  fill_upper(rho, &out);
  return out;
}

ConcurrenceBounds concurrence_bounds(const BipartiteDensityMatrix& rho,
                                     unsigned components) {
  require_entangleable(rho);
  ConcurrenceBounds out;
  out.m = rho.dim_a;
  fill_lower(rho, components, &out);
  fill_upper(rho, &out);
  return out;
}

}  // namespace eofb
