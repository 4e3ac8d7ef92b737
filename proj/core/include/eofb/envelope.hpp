#pragma once

#include <optional>
#include <vector>

namespace eofb {

// Tolerance for concurrence values marginally above c_max (fp guard).
inline constexpr double kClampTol = 1e-9;
inline constexpr int kDefaultEnvelopeGrid = 4096;

/// h(x) = -x log x with h(0) = 0, natural log. Domain [0, 1].
double h_entropy(double x);

/// The two-level Schmidt profile (n1 copies of alpha, n2 copies of beta)
/// with concurrence c: n1*alpha + n2*beta = 1, n1*alpha² + n2*beta² = 1-c²/2.
struct AlphaBeta {
  double alpha;
  double beta;
};

/// Solves the profile constraints. Throws std::domain_error when c lies
/// outside the segment where F_{n1,n2} is defined (negative discriminant or
/// negative beta).
AlphaBeta alpha_beta(int n1, int n2, double c);

/// F_{n1,n2}(c) = n1 h(alpha) + n2 h(beta).
double f_value(int n1, int n2, double c);

/// Maximum marginal entropy over pure states of fixed concurrence c: the
/// largest defined F_{1t}(c), t in [1, m-1].
double big_x(int m, double c);

/// Minimum marginal entropy over pure states of fixed concurrence c:
/// F_{t1}(c) on segment t, c in (sqrt(2(t-1)/t), sqrt(2t/(t+1))].
double big_y(int m, double c);

enum class SegmentRule { curve, chord };

struct SegmentInfo {
  int t = 0;
  double c_lo = 0.0;
  double c_hi = 0.0;
  int sign_f1t = 0;  // estimated sign of F''_{1t} on the interior (0 = mixed)
  int sign_ft1 = 0;
  bool mixed_f1t = false;
  bool mixed_ft1 = false;
  SegmentRule eta_rule = SegmentRule::chord;  // applied to F_{1t}
  SegmentRule eps_rule = SegmentRule::curve;  // applied to F_{t1}
};

/// Per-segment convexity classification driving the chord-vs-curve piecewise
/// construction. Cross-validation aid; the hull remains authoritative.
struct SegmentClassification {
  int m = 0;
  double fd_step = 0.0;
  std::vector<SegmentInfo> segments;
};

/// Classifies every segment t in [1, m-1] by the sign of central second
/// differences of F_{1t} and F_{t1} sampled across the segment interior.
/// Mixed signs are flagged, not fatal.
SegmentClassification segment_rules(int m, double fd_step = 1e-4);

double epsilon_by_segment_rules(const SegmentClassification& rules, double c);
double eta_by_segment_rules(const SegmentClassification& rules, double c);

enum class EnvelopeMethod { hull, segment_rules, closed_form };

struct EnvelopePoint {
  double c;
  double value;
};

/// Sampled X/Y curves plus the piecewise-linear hull envelopes. Immutable
/// after construction. The hull vertex lists are always populated; `method`
/// selects which construction epsilon_of/eta_of evaluate.
struct EnvelopeTable {
  int m = 0;
  double c_max = 0.0;
  EnvelopeMethod method = EnvelopeMethod::hull;
  std::vector<double> grid;
  std::vector<double> x_vals;
  std::vector<double> y_vals;
  std::vector<EnvelopePoint> eps_vertices;
  std::vector<EnvelopePoint> eta_vertices;
  std::optional<SegmentClassification> segments;
};

/// Builds the envelope table for dimension m. epsilon is the greatest convex
/// minorant of {(0,0)} ∪ {(c_i, Y(c_i))} (lower hull), eta the least concave
/// majorant of {(0,0)} ∪ {(c_i, X(c_i))} (upper hull). The grid is uniform
/// with the segment breakpoints inserted exactly, so hull vertices can sit on
/// slope breaks. Default method: closed_form for m <= 3, hull otherwise.
EnvelopeTable build_envelopes(int m, int grid_size = kDefaultEnvelopeGrid);
EnvelopeTable build_envelopes(int m, int grid_size, EnvelopeMethod method);

/// EoF lower-bound transfer function epsilon(c). Values in
/// (c_max, c_max + kClampTol] are clamped; beyond that is a domain error.
double epsilon_of(const EnvelopeTable& table, double c);

/// EoF upper-bound transfer function eta(c); same domain handling.
double eta_of(const EnvelopeTable& table, double c);

// Closed forms. m=2: epsilon is the binary-entropy curve F_11, eta its chord.
double epsilon_m2_closed(double c);
double eta_m2_closed(double c);
// m=3 piecewise forms: F_11 then a chord for epsilon; two chords for eta.
double epsilon_m3_closed(double c);
double eta_m3_closed(double c);

}  // namespace eofb
