#include "eofb/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eofb {

namespace {

double segment_left(int t) { return std::sqrt(2.0 * (t - 1) / t); }
double segment_right(int t) { return std::sqrt(2.0 * t / (t + 1)); }

double c_max_of(int m) { return std::sqrt(2.0 * (m - 1) / m); }

// Non-throwing probe: fills out and returns true when F_{n1,n2} is defined
// at c, i.e. the discriminant and beta are nonnegative within tolerance.
bool try_alpha_beta(int n1, int n2, double c, AlphaBeta* out) {
  const double k = n1 + n2;
  double disc =
      n1 * n1 - n1 * k * (1.0 - n2 * (1.0 - 0.5 * c * c));
  if (disc < -1e-12) return false;
  disc = std::max(disc, 0.0);
  double alpha = (n1 + std::sqrt(disc)) / (n1 * k);
  double beta = (1.0 - n1 * alpha) / n2;
  if (beta < -1e-12) return false;
  if (beta < 0.0) {
    beta = 0.0;
    alpha = 1.0 / n1;
  }
  out->alpha = alpha;
  out->beta = beta;
  return true;
}

double validate_c(double c, double limit, double tol, const char* who) {
  if (!(c >= -1e-12) || c > limit + tol) {
    std::ostringstream msg;
    msg << who << ": c = " << c << " outside [0, " << limit << "]";
    throw std::domain_error(msg.str());
  }
  return std::clamp(c, 0.0, limit);
}

// Lower convex hull of points sorted by ascending c (slopes nondecreasing).
std::vector<EnvelopePoint> lower_hull(const std::vector<EnvelopePoint>& pts) {
  std::vector<EnvelopePoint> hull;
  for (const EnvelopePoint& p : pts) {
    while (hull.size() >= 2) {
      const EnvelopePoint& a = hull[hull.size() - 2];
      const EnvelopePoint& b = hull[hull.size() - 1];
      const double cross =
          (b.c - a.c) * (p.value - a.value) - (b.value - a.value) * (p.c - a.c);
      if (cross <= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

// Upper concave hull (slopes nonincreasing).
std::vector<EnvelopePoint> upper_hull(const std::vector<EnvelopePoint>& pts) {
  std::vector<EnvelopePoint> hull;
  for (const EnvelopePoint& p : pts) {
    while (hull.size() >= 2) {
      const EnvelopePoint& a = hull[hull.size() - 2];
      const EnvelopePoint& b = hull[hull.size() - 1];
      const double cross =
          (b.c - a.c) * (p.value - a.value) - (b.value - a.value) * (p.c - a.c);
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

double interpolate(const std::vector<EnvelopePoint>& vertices, double c) {
  if (c <= vertices.front().c) return vertices.front().value;
  if (c >= vertices.back().c) return vertices.back().value;
  const auto it = std::lower_bound(
      vertices.begin(), vertices.end(), c,
      [](const EnvelopePoint& p, double value) { return p.c < value; });
  const EnvelopePoint& b = *it;
  const EnvelopePoint& a = *(it - 1);
  const double w = (c - a.c) / (b.c - a.c);
  return a.value + w * (b.value - a.value);
}

int second_difference_sign(int n1, int n2, double c_lo, double c_hi,
                           double fd_step) {
  // Sample the segment interior; endpoints are excluded because the
  // discriminant vanishes at the right edge.
  constexpr int kSamples = 11;
  int pos = 0;
  int neg = 0;
  for (int j = 1; j <= kSamples; ++j) {
    const double c = c_lo + (c_hi - c_lo) * j / (kSamples + 1);
    const double step = std::min(fd_step, 0.25 * (c_hi - c_lo));
    AlphaBeta lo, mid, hi;
    if (!try_alpha_beta(n1, n2, c - step, &lo) ||
        !try_alpha_beta(n1, n2, c, &mid) ||
        !try_alpha_beta(n1, n2, c + step, &hi))
      continue;
    const auto entropy = [&](const AlphaBeta& ab) {
      return n1 * h_entropy(ab.alpha) + n2 * h_entropy(ab.beta);
    };
    const double d2 =
        (entropy(hi) - 2.0 * entropy(mid) + entropy(lo)) / (step * step);
    if (d2 > 1e-3)
      ++pos;
    else if (d2 < -1e-3)
      ++neg;
  }
  if (pos > 0 && neg == 0) return 1;
  if (neg > 0 && pos == 0) return -1;
  return 0;
}

double chord_between(int n1, int n2, double c_lo, double c_hi, double c) {
  const double f_lo = f_value(n1, n2, c_lo);
  const double f_hi = f_value(n1, n2, c_hi);
  return f_lo + (f_hi - f_lo) * (c - c_lo) / (c_hi - c_lo);
}

const SegmentInfo& segment_for(const SegmentClassification& rules, double c) {
  for (const SegmentInfo& s : rules.segments)
    if (c <= s.c_hi + 1e-12) return s;
  return rules.segments.back();
}

}  // namespace

double h_entropy(double x) {
  if (!(x >= -1e-12) || x > 1.0 + 1e-12)
    throw std::domain_error("h_entropy: argument outside [0, 1]");
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log(x);
}

AlphaBeta alpha_beta(int n1, int n2, double c) {
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("alpha_beta: n1 and n2 must be >= 1");
  if (!(c >= -1e-12))
    throw std::domain_error("alpha_beta: negative concurrence");
  AlphaBeta out;
  if (!try_alpha_beta(n1, n2, std::max(c, 0.0), &out)) {
    std::ostringstream msg;
    msg << "alpha_beta: F_{" << n1 << "," << n2 << "} undefined at c = " << c;
    throw std::domain_error(msg.str());
  }
  return out;
}

double f_value(int n1, int n2, double c) {
  const AlphaBeta ab = alpha_beta(n1, n2, c);
  return n1 * h_entropy(ab.alpha) + n2 * h_entropy(ab.beta);
}

double big_x(int m, double c) {
  if (m < 2) throw std::invalid_argument("big_x: m must be >= 2");
  c = validate_c(c, c_max_of(m), 1e-12, "big_x");
  double best = 0.0;
  AlphaBeta ab;
  for (int t = 1; t < m; ++t) {
    if (!try_alpha_beta(1, t, c, &ab)) continue;
    const double v = h_entropy(ab.alpha) + t * h_entropy(ab.beta);
    best = std::max(best, v);
  }
  return best;
}

double big_y(int m, double c) {
  if (m < 2) throw std::invalid_argument("big_y: m must be >= 2");
  c = validate_c(c, c_max_of(m), 1e-12, "big_y");
  for (int t = 1; t < m; ++t) {
    const double right = segment_right(t);
    if (c <= right + 1e-12) return f_value(t, 1, std::min(c, right));
  }
  return f_value(m - 1, 1, c_max_of(m));
}

SegmentClassification segment_rules(int m, double fd_step) {
  if (m < 3) throw std::invalid_argument("segment_rules: m must be >= 3");
  if (!(fd_step > 0.0))
    throw std::invalid_argument("segment_rules: fd_step must be positive");
  SegmentClassification rules;
  rules.m = m;
  rules.fd_step = fd_step;
  for (int t = 1; t < m; ++t) {
    SegmentInfo info;
    info.t = t;
    info.c_lo = segment_left(t);
    info.c_hi = segment_right(t);
    info.sign_f1t =
        second_difference_sign(1, t, info.c_lo, info.c_hi, fd_step);
    info.sign_ft1 =
        t == 1 ? info.sign_f1t
               : second_difference_sign(t, 1, info.c_lo, info.c_hi, fd_step);
    info.mixed_f1t = info.sign_f1t == 0;
    info.mixed_ft1 = info.sign_ft1 == 0;
    // Convex F_{1t} is replaced by its chord in the concave majorant;
    // concave F_{t1} is replaced by its chord in the convex minorant.
    info.eta_rule =
        info.sign_f1t >= 0 ? SegmentRule::chord : SegmentRule::curve;
    info.eps_rule =
        info.sign_ft1 >= 0 ? SegmentRule::curve : SegmentRule::chord;
    rules.segments.push_back(info);
  }
  return rules;
}

double epsilon_by_segment_rules(const SegmentClassification& rules, double c) {
  c = validate_c(c, c_max_of(rules.m), kClampTol, "epsilon_by_segment_rules");
  const SegmentInfo& s = segment_for(rules, c);
  c = std::min(c, s.c_hi);
  if (s.eps_rule == SegmentRule::curve) return f_value(s.t, 1, c);
  return chord_between(s.t, 1, s.c_lo, s.c_hi, c);
}

double eta_by_segment_rules(const SegmentClassification& rules, double c) {
  c = validate_c(c, c_max_of(rules.m), kClampTol, "eta_by_segment_rules");
  const SegmentInfo& s = segment_for(rules, c);
  c = std::min(c, s.c_hi);
  if (s.eta_rule == SegmentRule::curve) return f_value(1, s.t, c);
  return chord_between(1, s.t, s.c_lo, s.c_hi, c);
}

EnvelopeTable build_envelopes(int m, int grid_size) {
  const EnvelopeMethod method =
      m <= 3 ? EnvelopeMethod::closed_form : EnvelopeMethod::hull;
  return build_envelopes(m, grid_size, method);
}

EnvelopeTable build_envelopes(int m, int grid_size, EnvelopeMethod method) {
  if (m < 2) throw std::invalid_argument("build_envelopes: m must be >= 2");
  if (grid_size < 64)
    throw std::invalid_argument("build_envelopes: grid_size must be >= 64");
  if (method == EnvelopeMethod::closed_form && m > 3)
    throw std::invalid_argument(
        "build_envelopes: closed forms exist only for m = 2, 3");
  if (method == EnvelopeMethod::segment_rules && m < 3)
    throw std::invalid_argument(
        "build_envelopes: segment rules require m >= 3");

  EnvelopeTable table;
  table.m = m;
  table.c_max = c_max_of(m);
  table.method = method;

  table.grid.reserve(static_cast<size_t>(grid_size) + m + 1);
  for (int i = 0; i <= grid_size; ++i)
    table.grid.push_back(table.c_max * i / grid_size);
  for (int t = 2; t < m; ++t) table.grid.push_back(segment_left(t));
  std::sort(table.grid.begin(), table.grid.end());
  table.grid.erase(std::unique(table.grid.begin(), table.grid.end(),
                               [](double a, double b) {
                                 return std::abs(a - b) < 1e-15;
                               }),
                   table.grid.end());
  table.grid.back() = table.c_max;

  table.x_vals.reserve(table.grid.size());
  table.y_vals.reserve(table.grid.size());
  std::vector<EnvelopePoint> x_pts, y_pts;
  for (double c : table.grid) {
    const double x = big_x(m, c);
    const double y = big_y(m, c);
    table.x_vals.push_back(x);
    table.y_vals.push_back(y);
    x_pts.push_back({c, x});
    y_pts.push_back({c, y});
  }
  table.eps_vertices = lower_hull(y_pts);
  table.eta_vertices = upper_hull(x_pts);
  if (m >= 3) table.segments = segment_rules(m);
  return table;
}

double epsilon_of(const EnvelopeTable& table, double c) {
  c = validate_c(c, table.c_max, kClampTol, "epsilon_of");
  switch (table.method) {
    case EnvelopeMethod::closed_form:
      return table.m == 2 ? epsilon_m2_closed(c) : epsilon_m3_closed(c);
    case EnvelopeMethod::segment_rules:
      return epsilon_by_segment_rules(*table.segments, c);
    case EnvelopeMethod::hull:
      break;
  }
  return interpolate(table.eps_vertices, c);
}

double eta_of(const EnvelopeTable& table, double c) {
  c = validate_c(c, table.c_max, kClampTol, "eta_of");
  switch (table.method) {
    case EnvelopeMethod::closed_form:
      return table.m == 2 ? eta_m2_closed(c) : eta_m3_closed(c);
    case EnvelopeMethod::segment_rules:
      return eta_by_segment_rules(*table.segments, c);
    case EnvelopeMethod::hull:
      break;
  }
  return interpolate(table.eta_vertices, c);
}

double epsilon_m2_closed(double c) {
  c = validate_c(c, 1.0, kClampTol, "epsilon_m2_closed");
  return f_value(1, 1, c);
}

double eta_m2_closed(double c) {
  c = validate_c(c, 1.0, kClampTol, "eta_m2_closed");
  return c * std::log(2.0);
}

double epsilon_m3_closed(double c) {
  c = validate_c(c, 2.0 / std::sqrt(3.0), kClampTol, "epsilon_m3_closed");
  if (c <= 1.0) return f_value(1, 1, c);
  return std::sqrt(3.0) * std::log(1.5) / (2.0 - std::sqrt(3.0)) * (c - 1.0) +
         std::log(2.0);
}

double eta_m3_closed(double c) {
  c = validate_c(c, 2.0 / std::sqrt(3.0), kClampTol, "eta_m3_closed");
  if (c <= 1.0) return c * std::log(2.0);
  return (2.0 * std::log(1.5) + std::log(6.0) - 3.0 * std::log(3.0)) /
             (3.0 * (std::sqrt(3.0) - 2.0)) * (std::sqrt(3.0) * c - 2.0) +
         std::log(3.0);
}

}  // namespace eofb
