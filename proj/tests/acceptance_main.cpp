// Acceptance gate: eight numbered criteria, each printing one PASS/FAIL
// line with its measured margins and wall time.  Run all (default) or a
// single one with --criterion N.  Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "eofb/conc_bounds.hpp"
#include "eofb/densmat.hpp"
#include "eofb/envelope.hpp"
#include "eofb/eof_bounds.hpp"
#include "eofb/rng.hpp"
#include "eofb/roof.hpp"
#include "eofb/states.hpp"

using namespace eofb;

namespace {

struct Criterion {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
  void note(const std::string& what) { details.push_back(what); }
};

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

const double kLog2 = std::log(2.0);
const double kLog3 = std::log(3.0);

// 1. Werner family: marginal-purity upper bound eta(c_upper) = log 3, and
//    the flip-based concurrence reproducing -f log 2.
Criterion criterion_1() {
  constexpr double kTolRounded = 1e-3;
  constexpr double kTolExact = 1e-9;
  Criterion c;
  c.summary = "Werner d=3 upper bounds";
  const EnvelopeTable table = build_envelopes(3);
  for (double f : {-1.0, -0.75, -0.5, -0.25}) {
    const auto rho = werner(3, f);
    const auto conc = concurrence_upper(rho);
    const double eta = eta_of(table, std::min(conc.upper, table.c_max));
    if (std::abs(eta - kLog3) > kTolExact)
      c.fail("eta(c_upper) = " + fmt(eta, "%.12g") + " != log 3 at f = " +
             fmt(f));
    if (std::abs(eta - 1.099) > kTolRounded)
      c.fail("eta(c_upper) misses 1.099 by more than 1e-3 at f = " + fmt(f));
    const double hint = werner_concurrence_hint(3, f);
    const auto pair = eof_bounds_from_concurrence(hint, hint, table);
    if (std::abs(pair.second - (-f) * kLog2) > kTolExact)
      c.fail("upper from hint = " + fmt(pair.second, "%.12g") +
             " != -f log 2 = " + fmt(-f * kLog2, "%.12g") + " at f = " +
             fmt(f));
  }
  return c;
}

// 2. m=3 envelope table against the closed forms.
Criterion criterion_2() {
  constexpr double kTolGrid = 1e-4;
  constexpr double kTolPoint = 1e-9;
  Criterion c;
  c.summary = "m=3 closed-form envelopes";
  const EnvelopeTable table = build_envelopes(3, 4096);
  double worst_eps = 0.0, worst_eta = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = table.c_max * i / 999;
    worst_eps =
        std::max(worst_eps, std::abs(epsilon_of(table, x) - epsilon_m3_closed(x)));
    worst_eta =
        std::max(worst_eta, std::abs(eta_of(table, x) - eta_m3_closed(x)));
  }
  if (worst_eps > kTolGrid)
    c.fail("epsilon deviates from the closed form by " + fmt(worst_eps));
  if (worst_eta > kTolGrid)
    c.fail("eta deviates from the closed form by " + fmt(worst_eta));
  if (std::abs(epsilon_of(table, 1.0) - kLog2) > kTolPoint)
    c.fail("epsilon(1) != log 2");
  if (std::abs(eta_of(table, 1.0) - kLog2) > kTolPoint)
    c.fail("eta(1) != log 2");
  c.note("max |eps - closed| = " + fmt(worst_eps) + ", max |eta - closed| = " +
         fmt(worst_eta) + " over 1000 points");
  return c;
}

// 3. Two-qubit sandwich against the exact EoF.
Criterion criterion_3() {
  constexpr double kSlack = 1e-9;
  constexpr double kTolTight = 1e-6;
  constexpr int kTrials = 1000;
  Criterion c;
  c.summary = "two-qubit sandwich vs exact EoF";
  const EnvelopeTable table = build_envelopes(2);
  int violations = 0;
  double worst_margin = 1e300, worst_tight = 0.0;
  for (int i = 0; i < kTrials; ++i) {
    const auto rho = random_density_matrix(2, 2, 4, mix_seed(0xE0FB0003, i));
    const auto report = eof_bounds(rho, table);
    const double exact = two_qubit_eof_exact(rho);
    if (report.eof_lower > exact + kSlack || exact > report.eof_upper + kSlack)
      ++violations;
    worst_margin = std::min(
        worst_margin,
        std::min(exact - report.eof_lower, report.eof_upper - exact));
    const double c_exact =
        std::min(two_qubit_concurrence_exact(rho), table.c_max);
    worst_tight =
        std::max(worst_tight, std::abs(epsilon_of(table, c_exact) - exact));
  }
  if (violations > 0)
    c.fail(std::to_string(violations) + " sandwich violations out of " +
           std::to_string(kTrials));
  if (worst_tight > kTolTight)
    c.fail("epsilon(C_exact) misses the exact EoF by " + fmt(worst_tight));
  c.note("tightest sandwich margin " + fmt(worst_margin) +
         "; max |eps(C)-E| = " + fmt(worst_tight));
  return c;
}

// 4. Pure-state level-set extrema: Y <= H <= X over random Schmidt vectors.
Criterion criterion_4() {
  constexpr double kSlack = 1e-8;
  constexpr int kTrials = 1000;
  Criterion c;
  c.summary = "pure-state level-set extrema m=2..5";
  for (int m = 2; m <= 5; ++m) {
    const double c_max = max_concurrence(m);
    int violations = 0;
    double min_low = 1e300, min_high = 1e300;
    for (int i = 0; i < kTrials; ++i) {
      const auto psi =
          random_state_vector(m, m, mix_seed(0xE0FB0004, m * 100000 + i));
      const auto mu = schmidt_coefficients(psi, m, m);
      const double conc = std::min(pure_concurrence(mu), c_max);
      const double entropy = pure_eof(mu);
      const double y = big_y(m, conc);
      const double x = big_x(m, conc);
      if (entropy < y - kSlack || entropy > x + kSlack) ++violations;
      min_low = std::min(min_low, entropy - y);
      min_high = std::min(min_high, x - entropy);
    }
    if (violations > 0)
      c.fail("m=" + std::to_string(m) + ": " + std::to_string(violations) +
             " level-set violations");
    c.note("m=" + std::to_string(m) + ": min(H-Y) = " + fmt(min_low) +
           ", min(X-H) = " + fmt(min_high));
  }
  return c;
}

// 5. Two-parameter 3x3 family fixtures; the third sub-check asks for a sign
//    change of the trace-norm candidate that the matrix computation does not
//    produce, so it is expected to fail and reports the measured behavior.
Criterion criterion_5() {
  constexpr double kTolGrid = 1e-10;
  constexpr double kTolCoeff = 5e-3;  // relative
  Criterion c;
  c.summary = "two-param family fixtures";

  double worst_gap = 0.0, worst_pur = 0.0;
  for (int ia = 0; ia < 20; ++ia)
    for (int ix = 0; ix < 20; ++ix) {
      const double a = ia / 19.0;
      const double x = ix / 19.0;
      const auto rho = example2_state(a, x);
      const auto fx = example2_functionals(a, x);
      const double pur_a = purity(partial_trace(rho, Subsystem::A));
      worst_gap = std::max(
          worst_gap, std::abs(purity(rho.mat) - pur_a - fx.purity_gap));
      worst_pur =
          std::max(worst_pur, std::abs(1.0 - pur_a - fx.one_minus_purity_a));
    }
  if (worst_gap > kTolGrid || worst_pur > kTolGrid)
    c.fail("closed forms deviate from matrix functionals by " +
           fmt(std::max(worst_gap, worst_pur)));
  c.note("20x20 functional grid: max errors " + fmt(worst_gap) + " / " +
         fmt(worst_pur));

  {
    const double x = 0.1;
    const double got[6] = {9.0 - 26.0 * x + 13.0 * x * x,
                           6.0 * (9.0 - 22.0 * x + 11.0 * x * x),
                           -9.0 * (-2.0 + x) * x,
                           6.0 + 4.0 * x - 2.0 * x * x,
                           12.0 * (3.0 - 2.0 * x + x * x),
                           -18.0 * (-2.0 + x) * x};
    const double expect[6] = {6.53, 41.46, 1.71, 6.38, 33.72, 3.42};
    for (int i = 0; i < 6; ++i)
      if (std::abs(got[i] - expect[i]) > kTolCoeff * expect[i])
        c.fail("x=0.1 coefficient " + std::to_string(i) + " = " +
               fmt(got[i], "%.8g") + " misses " + fmt(expect[i]));
  }

  {
    // Sign-change scan of the x = 0.6 trace-norm candidate.
    const double x = 0.6;
    double prev = 0.0;
    double min_val = 1e300, min_at = 0.0;
    std::vector<double> boundaries;
    for (int i = 0; i <= 2000; ++i) {
      const double a = i / 2000.0;
      const auto b = concurrence_lower(example2_state(a, x), kComponentPpt);
      if (i > 0 && ((prev < 0.0) != (b.ppt_lower < 0.0)))
        boundaries.push_back(a - 1.0 / 4000.0);
      if (b.ppt_lower < min_val) {
        min_val = b.ppt_lower;
        min_at = a;
      }
      prev = b.ppt_lower;
    }
    bool in_window = false;
    for (double b : boundaries)
      if (b >= 0.195 && b <= 0.215) in_window = true;
    if (!in_window) {
      c.fail("no sign change of the ppt candidate inside a in "
             "[0.195, 0.215] at x = 0.6");
      c.note("candidate minimum over a in [0, 1] is " + fmt(min_val) +
             " at a = " + fmt(min_at) + " (never negative: " +
             std::to_string(boundaries.size()) + " sign changes found)");
      // The a ~ 0.205 feature exists, but in the partial-transpose spectrum,
      // not in the trace norm: locate where the negative-eigenvalue count
      // changes.
      int prev_neg = -1;
      for (int i = 0; i <= 2000; ++i) {
        const double a = i / 2000.0;
        const auto eigs = hermitian_eigenvalues(
            partial_transpose_a(example2_state(a, x)));
        int neg = 0;
        for (double v : eigs)
          if (v < 0.0) ++neg;
        if (prev_neg >= 0 && neg != prev_neg)
          c.note("negative eigenvalue count of the partial transpose "
                 "changes " +
                 std::to_string(prev_neg) + " -> " + std::to_string(neg) +
                 " near a = " + fmt(a));
        prev_neg = neg;
      }
    }
  }
  return c;
}

// 6. Lower-bound orderings along the two documented sweep windows.
Criterion criterion_6() {
  Criterion c;
  c.summary = "component ordering windows";
  const EnvelopeTable table = build_envelopes(3);
  const auto eps_of_component = [&](double value) {
    return epsilon_of(table, std::min(std::max(value, 0.0), table.c_max));
  };

  double min_margin = 1e300;
  for (int i = 0; i <= 32; ++i) {
    const double a = 0.5 + 0.005 * i;
    const auto b = concurrence_lower(example2_state(a, 0.1));
    const double margin =
        eps_of_component(b.ppt_lower) - eps_of_component(b.purity_a_lower);
    min_margin = std::min(min_margin, margin);
    if (margin < 0.0)
      c.fail("ppt-based epsilon below purity-based at a = " + fmt(a) +
             ", x = 0.1");
  }
  c.note("x=0.1 window: min(eps_ppt - eps_purity) = " + fmt(min_margin));

  double min_margin2 = 1e300;
  for (int i = 0; i <= 4; ++i) {
    const double a = 0.57 + 0.005 * i;
    const auto b = concurrence_lower(example2_state(a, 0.001));
    const double margin =
        eps_of_component(b.purity_a_lower) - eps_of_component(b.ppt_lower);
    min_margin2 = std::min(min_margin2, margin);
    if (margin <= 0.0)
      c.fail("purity-based epsilon not above ppt-based at a = " + fmt(a) +
             ", x = 0.001");
  }
  c.note("x=0.001 window: min(eps_purity - eps_ppt) = " + fmt(min_margin2));
  return c;
}

// 7. Roof estimates never undercut the analytical lower bound.
Criterion criterion_7() {
  constexpr double kSlack = 1e-9;
  constexpr int kStates = 100;
  Criterion c;
  c.summary = "roof-oracle consistency on 100 random 3x3 states";
  const EnvelopeTable table = build_envelopes(3);
  double min_slack = 1e300;
  int violations = 0;
  for (int i = 0; i < kStates; ++i) {
    const int rank = 1 + static_cast<int>(mix_seed(0xE0FB0007, 3000 + i) % 4);
    const auto rho = random_density_matrix(3, 3, rank, mix_seed(0xE0FB0007, i));
    const auto bounds = concurrence_lower(rho);
    const double eof_low =
        epsilon_of(table, std::min(bounds.lower, table.c_max));
    const auto roof = convex_roof_estimate(rho, RoofObjective::eof, 12, 16,
                                           mix_seed(0xE0FB0007, 7000 + i));
    if (roof.value < eof_low - kSlack) {
      ++violations;
      c.fail("state " + std::to_string(i) + ": roof " +
             fmt(roof.value, "%.12g") + " < lower bound " +
             fmt(eof_low, "%.12g"));
    }
    min_slack = std::min(min_slack, roof.value - eof_low);
  }
  c.note("min(roof - lower bound) = " + fmt(min_slack) + " across " +
         std::to_string(kStates) + " states (rank 1..4)");
  return c;
}

// 8. Envelope hull properties and the m=3 segment-rule structure.
Criterion criterion_8() {
  constexpr double kTolHull = 1e-9;
  Criterion c;
  c.summary = "envelope hull properties m=2..6";
  for (int m = 2; m <= 6; ++m) {
    const auto table = build_envelopes(m, 2048, EnvelopeMethod::hull);
    const std::string tag = "m=" + std::to_string(m);
    const auto slope = [](const EnvelopePoint& a, const EnvelopePoint& b) {
      return (b.value - a.value) / (b.c - a.c);
    };
    for (std::size_t i = 1; i < table.eps_vertices.size(); ++i) {
      const double s = slope(table.eps_vertices[i - 1], table.eps_vertices[i]);
      if (s < -1e-12) c.fail(tag + ": epsilon decreasing");
      if (i >= 2 &&
          s < slope(table.eps_vertices[i - 2], table.eps_vertices[i - 1]) -
                  kTolHull)
        c.fail(tag + ": epsilon not convex");
    }
    for (std::size_t i = 1; i < table.eta_vertices.size(); ++i) {
      const double s = slope(table.eta_vertices[i - 1], table.eta_vertices[i]);
      if (s < -1e-12) c.fail(tag + ": eta decreasing");
      if (i >= 2 &&
          s > slope(table.eta_vertices[i - 2], table.eta_vertices[i - 1]) +
                  kTolHull)
        c.fail(tag + ": eta not concave");
    }
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
      if (epsilon_of(table, table.grid[i]) > table.y_vals[i] + kTolHull)
        c.fail(tag + ": epsilon exceeds Y");
      if (eta_of(table, table.grid[i]) < table.x_vals[i] - kTolHull)
        c.fail(tag + ": eta below X");
    }
    const double logm = std::log(static_cast<double>(m));
    if (std::abs(epsilon_of(table, 0.0)) > kTolHull ||
        std::abs(eta_of(table, 0.0)) > kTolHull)
      c.fail(tag + ": envelopes nonzero at c = 0");
    if (std::abs(epsilon_of(table, table.c_max) - logm) > kTolHull ||
        std::abs(eta_of(table, table.c_max) - logm) > kTolHull)
      c.fail(tag + ": endpoint (c_max, log m) missed");
  }

  const auto rules = segment_rules(3);
  const bool structure_ok =
      rules.segments.size() == 2 &&
      rules.segments[0].eps_rule == SegmentRule::curve &&
      rules.segments[0].eta_rule == SegmentRule::chord &&
      rules.segments[1].eps_rule == SegmentRule::chord &&
      rules.segments[1].eta_rule == SegmentRule::chord &&
      rules.segments[0].sign_f1t == 1 && rules.segments[1].sign_ft1 == -1 &&
      rules.segments[1].sign_f1t == 1;
  if (!structure_ok) c.fail("m=3 segment rules do not match the piecewise structure");
  const auto seg_table = build_envelopes(3, 2048, EnvelopeMethod::segment_rules);
  double worst = 0.0;
  for (int i = 0; i <= 500; ++i) {
    const double x = seg_table.c_max * i / 500;
    worst = std::max(worst,
                     std::abs(epsilon_of(seg_table, x) - epsilon_m3_closed(x)));
    worst =
        std::max(worst, std::abs(eta_of(seg_table, x) - eta_m3_closed(x)));
  }
  if (worst > kTolHull)
    c.fail("segment-rule construction deviates from the m=3 closed forms by " +
           fmt(worst));
  c.note("segment-rule vs closed-form max deviation " + fmt(worst));
  return c;
}

struct Entry {
  int number;
  double budget_seconds;
  std::function<Criterion()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 64;
    }
  }

  const std::vector<Entry> entries = {
      {1, 1.0, criterion_1},  {2, 1.0, criterion_2},  {3, 30.0, criterion_3},
      {4, 10.0, criterion_4}, {5, 5.0, criterion_5},  {6, 10.0, criterion_6},
      {7, 300.0, criterion_7}, {8, 5.0, criterion_8},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    if (selected != 0 && entry.number != selected) continue;
    const auto start = std::chrono::steady_clock::now();
    Criterion result = entry.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > entry.budget_seconds) {
      result.pass = false;
      result.details.push_back("runtime " + fmt(seconds, "%.2f") +
                               " s exceeds the " +
                               fmt(entry.budget_seconds, "%.0f") + " s budget");
    }
    std::printf("criterion %d: %s - %s (%.2f s)\n", entry.number,
                result.pass ? "PASS" : "FAIL", result.summary.c_str(),
                seconds);
    for (const auto& line : result.details)
      std::printf("    %s\n", line.c_str());
    if (!result.pass) ++failures;
  }
  return failures;
}
