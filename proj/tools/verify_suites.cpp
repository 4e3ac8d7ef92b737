#include "verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "eofb/conc_bounds.hpp"
#include "eofb/densmat.hpp"
#include "eofb/envelope.hpp"
#include "eofb/eof_bounds.hpp"
#include "eofb/rng.hpp"
#include "eofb/roof.hpp"
#include "eofb/state_io.hpp"
#include "eofb/states.hpp"

namespace eofb::verify {

namespace {

class Reporter {
 public:
  Reporter(std::string suite, std::string dump_dir)
      : suite_(std::move(suite)), dump_dir_(std::move(dump_dir)) {}

  void check(bool ok, const std::string& label) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      std::cout << "FAIL [" << suite_ << "] " << label << '\n';
    }
  }

  // Like check, but serializes the offending state for triage.
  void check_state(bool ok, const std::string& label,
                   const BipartiteDensityMatrix& rho) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    std::cout << "FAIL [" << suite_ << "] " << label << '\n';
    const std::string path = dump_dir_ + "/eofb_fail_" + suite_ + "_" +
                             std::to_string(result_.failures) + ".state";
    try {
      save_state(path, rho);
      std::cout << "  offending state written to " << path << '\n';
    } catch (const std::exception& ex) {
      std::cout << "  (could not serialize state: " << ex.what() << ")\n";
    }
  }

  void note(const std::string& text) {
    std::cout << "  " << text << '\n';
  }

  SuiteResult result() const { return result_; }

 private:
  std::string suite_;
  std::string dump_dir_;
  SuiteResult result_;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

SuiteResult suite_two_qubit(int n, std::uint64_t seed,
                            const std::string& dump_dir) {
  Reporter rep("two-qubit", dump_dir);
  const EnvelopeTable table = build_envelopes(2);
  int worst_i = -1;
  double worst_gap = 1.0;
  for (int i = 0; i < n; ++i) {
    const auto rho = random_density_matrix(2, 2, 4, mix_seed(seed, i));
    const auto report = eof_bounds(rho, table);
    const double e_exact = two_qubit_eof_exact(rho);
    const double c_exact = two_qubit_concurrence_exact(rho);
    rep.check_state(report.eof_lower <= e_exact + 1e-9,
                    "state " + std::to_string(i) +
                        ": eof_lower " + fmt(report.eof_lower) +
                        " exceeds exact " + fmt(e_exact),
                    rho);
    rep.check_state(e_exact <= report.eof_upper + 1e-9,
                    "state " + std::to_string(i) + ": exact " + fmt(e_exact) +
                        " exceeds eof_upper " + fmt(report.eof_upper),
                    rho);
    const double eps_at_exact = epsilon_of(table, std::min(c_exact, table.c_max));
    rep.check_state(std::abs(eps_at_exact - e_exact) <= 1e-6,
                    "state " + std::to_string(i) +
                        ": epsilon(C_exact) = " + fmt(eps_at_exact) +
                        " != E_exact = " + fmt(e_exact),
                    rho);
    const double gap = std::min(e_exact - report.eof_lower,
                                report.eof_upper - e_exact);
    if (gap < worst_gap) {
      worst_gap = gap;
      worst_i = i;
    }
  }
  rep.note("sandwich over " + std::to_string(n) +
           " Ginibre 2x2 states; tightest margin " + fmt(worst_gap) +
           " at state " + std::to_string(worst_i));
  return rep.result();
}

SuiteResult suite_pure_sandwich(int n, std::uint64_t seed,
                                const std::string& dump_dir) {
  Reporter rep("pure-sandwich", dump_dir);
  for (int m = 2; m <= 5; ++m) {
    // epsilon minorizes the entropy for every method; the majorant side is
    // only guaranteed for the hull eta, so that check uses a hull table.
    const EnvelopeTable table = build_envelopes(m);
    const EnvelopeTable hull =
        build_envelopes(m, kDefaultEnvelopeGrid, EnvelopeMethod::hull);
    double worst_low = 1.0, worst_high = 1.0;
    for (int i = 0; i < n; ++i) {
      const auto psi =
          random_state_vector(m, m, mix_seed(seed, m * 100000 + i));
      const SchmidtVector mu = schmidt_coefficients(psi, m, m);
      const double c = std::min(pure_concurrence(mu), table.c_max);
      const double entropy = pure_eof(mu);
      const double x = big_x(m, c);
      const double y = big_y(m, c);
      rep.check(y - 1e-8 <= entropy,
                "m=" + std::to_string(m) + " trial " + std::to_string(i) +
                    ": H = " + fmt(entropy) + " below Y(c) = " + fmt(y));
      rep.check(entropy <= x + 1e-8,
                "m=" + std::to_string(m) + " trial " + std::to_string(i) +
                    ": H = " + fmt(entropy) + " above X(c) = " + fmt(x));
      rep.check(epsilon_of(table, c) <= entropy + 1e-8,
                "m=" + std::to_string(m) + " trial " + std::to_string(i) +
                    ": epsilon(c) above H");
      rep.check(entropy <= eta_of(hull, c) + 1e-8,
                "m=" + std::to_string(m) + " trial " + std::to_string(i) +
                    ": H above hull eta(c)");
      worst_low = std::min(worst_low, entropy - y);
      worst_high = std::min(worst_high, x - entropy);
    }
    rep.note("m=" + std::to_string(m) + ": " + std::to_string(n) +
             " Schmidt vectors; min(H-Y) = " + fmt(worst_low) +
             ", min(X-H) = " + fmt(worst_high));
  }
  // Full pipeline on pure densities: both bounds must bracket the entropy.
  // Uses hull tables so the upper side is a genuine majorant for m = 3.
  for (int m = 2; m <= 3; ++m) {
    const EnvelopeTable table =
        build_envelopes(m, kDefaultEnvelopeGrid, EnvelopeMethod::hull);
    for (int i = 0; i < std::min(n, 50); ++i) {
      const auto psi =
          random_state_vector(m, m, mix_seed(seed, m * 200000 + i));
      const auto rho = pure_state_density(psi, m, m);
      const auto report = eof_bounds(rho, table);
      const double entropy = pure_eof(schmidt_coefficients(psi, m, m));
      rep.check_state(report.eof_lower <= entropy + 1e-8 &&
                          entropy <= report.eof_upper + 1e-8,
                      "pure m=" + std::to_string(m) + " trial " +
                          std::to_string(i) + ": bounds [" +
                          fmt(report.eof_lower) + ", " +
                          fmt(report.eof_upper) + "] miss H = " + fmt(entropy),
                      rho);
    }
  }
  return rep.result();
}

SuiteResult suite_envelope_hull(int /*n*/, std::uint64_t /*seed*/,
                                const std::string& dump_dir) {
  Reporter rep("envelope-hull", dump_dir);
  for (int m = 2; m <= 6; ++m) {
    const EnvelopeTable table = build_envelopes(m, kDefaultEnvelopeGrid,
                                                EnvelopeMethod::hull);
    const std::string tag = "m=" + std::to_string(m);

    auto check_hull = [&](const std::vector<EnvelopePoint>& verts,
                          bool convex, const std::string& name) {
      rep.check(verts.size() >= 2, tag + " " + name + ": too few vertices");
      double prev_slope = convex ? -1e300 : 1e300;
      for (std::size_t i = 1; i < verts.size(); ++i) {
        const double dc = verts[i].c - verts[i - 1].c;
        rep.check(dc > 0, tag + " " + name + ": vertex abscissae not increasing");
        const double slope = (verts[i].value - verts[i - 1].value) / dc;
        rep.check(slope >= -1e-12,
                  tag + " " + name + ": decreasing on segment " +
                      std::to_string(i));
        if (convex)
          rep.check(slope >= prev_slope - 1e-9,
                    tag + " " + name + ": slope drop breaks convexity at " +
                        fmt(verts[i - 1].c));
        else
          rep.check(slope <= prev_slope + 1e-9,
                    tag + " " + name + ": slope rise breaks concavity at " +
                        fmt(verts[i - 1].c));
        prev_slope = slope;
      }
    };
    check_hull(table.eps_vertices, true, "epsilon");
    check_hull(table.eta_vertices, false, "eta");

    double max_eps_excess = -1e300, max_eta_deficit = -1e300;
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
      const double c = table.grid[i];
      const double eps = epsilon_of(table, c);
      const double eta = eta_of(table, c);
      max_eps_excess = std::max(max_eps_excess, eps - table.y_vals[i]);
      max_eta_deficit = std::max(max_eta_deficit, table.x_vals[i] - eta);
      rep.check(eps <= eta + 1e-12,
                tag + ": epsilon above eta at c = " + fmt(c));
    }
    rep.check(max_eps_excess <= 1e-9,
              tag + ": epsilon exceeds Y by " + fmt(max_eps_excess));
    rep.check(max_eta_deficit <= 1e-9,
              tag + ": eta falls below X by " + fmt(max_eta_deficit));

    const double logm = std::log(static_cast<double>(m));
    rep.check(std::abs(epsilon_of(table, 0.0)) <= 1e-12 &&
                  std::abs(eta_of(table, 0.0)) <= 1e-12,
              tag + ": envelopes nonzero at c = 0");
    rep.check(std::abs(epsilon_of(table, table.c_max) - logm) <= 1e-9,
              tag + ": epsilon(c_max) != log m");
    rep.check(std::abs(eta_of(table, table.c_max) - logm) <= 1e-9,
              tag + ": eta(c_max) != log m");
    rep.note(tag + ": " + std::to_string(table.eps_vertices.size()) +
             " epsilon vertices, " + std::to_string(table.eta_vertices.size()) +
             " eta vertices; max(eps - Y) = " + fmt(max_eps_excess));
  }
  return rep.result();
}

SuiteResult suite_roof_consistency(int n, std::uint64_t seed,
                                   const std::string& dump_dir) {
  Reporter rep("roof-consistency", dump_dir);
  const EnvelopeTable table = build_envelopes(3);
  double min_slack_eof = 1e300, min_slack_conc = 1e300;
  for (int i = 0; i < n; ++i) {
    const int rank = 1 + static_cast<int>(mix_seed(seed, 900 + i) % 4);
    const auto rho = random_density_matrix(3, 3, rank, mix_seed(seed, i));
    const auto conc = concurrence_bounds(rho);
    const double eof_low = epsilon_of(table, std::min(conc.lower, table.c_max));
    const auto roof_eof = convex_roof_estimate(rho, RoofObjective::eof, 12, 4,
                                               mix_seed(seed, 7000 + i));
    const auto roof_conc = convex_roof_estimate(
        rho, RoofObjective::concurrence, 12, 4, mix_seed(seed, 8000 + i));
    rep.check_state(roof_eof.value >= eof_low - 1e-9,
                    "state " + std::to_string(i) + ": roof EoF " +
                        fmt(roof_eof.value) + " below lower bound " +
                        fmt(eof_low),
                    rho);
    rep.check_state(roof_conc.value >= conc.lower - 1e-9,
                    "state " + std::to_string(i) + ": roof concurrence " +
                        fmt(roof_conc.value) + " below lower bound " +
                        fmt(conc.lower),
                    rho);
    // The roof estimate approximates a quantity that is <= c_upper, but the
    // estimate itself sits above the true roof; large excess is reported
    // without failing the suite.
    if (roof_conc.value > conc.upper + 5e-3)
      rep.note("state " + std::to_string(i) + ": roof concurrence " +
               fmt(roof_conc.value) + " exceeds upper bound " +
               fmt(conc.upper) + " by more than 5e-3");
    min_slack_eof = std::min(min_slack_eof, roof_eof.value - eof_low);
    min_slack_conc = std::min(min_slack_conc, roof_conc.value - conc.lower);
  }
  rep.note(std::to_string(n) + " random 3x3 states; min roof-vs-bound slack: eof " +
           fmt(min_slack_eof) + ", concurrence " + fmt(min_slack_conc));

  // Determinism and restart monotonicity on one fixed state.
  const auto rho0 = random_density_matrix(3, 3, 3, mix_seed(seed, 0));
  const auto a = convex_roof_estimate(rho0, RoofObjective::eof, 9, 2, seed);
  const auto b = convex_roof_estimate(rho0, RoofObjective::eof, 9, 2, seed);
  rep.check(a.value == b.value && a.iterations == b.iterations,
            "roof estimate is not deterministic for a fixed seed");
  const auto wider = convex_roof_estimate(rho0, RoofObjective::eof, 9, 4, seed);
  rep.check(wider.value <= a.value + 1e-15,
            "extra restarts worsened the estimate: " + fmt(wider.value) +
                " > " + fmt(a.value));
  return rep.result();
}

SuiteResult suite_fixtures(int /*n*/, std::uint64_t /*seed*/,
                           const std::string& dump_dir) {
  Reporter rep("fixtures", dump_dir);
  const double log2 = std::log(2.0);
  const double log3 = std::log(3.0);

  // Profile entropy anchors.
  rep.check(std::abs(f_value(1, 1, 1.0) - log2) <= 1e-12,
            "F_11(1) != log 2");
  rep.check(std::abs(f_value(1, 2, 1.0) - 0.8675632284814614) <= 1e-12,
            "F_12(1) != 0.8675632284814614");
  rep.check(std::abs(f_value(1, 2, 2.0 / std::sqrt(3.0)) - log3) <= 1e-12,
            "F_12(c_max) != log 3");
  rep.check(std::abs(big_y(3, 1.0) - log2) <= 1e-12, "Y(3, 1) != log 2");
  rep.check(std::abs(big_x(3, 1.0) - 0.8675632284814614) <= 1e-12,
            "X(3, 1) != max defined F_1t at c = 1");
  rep.note("X(3, 1) = " + fmt(big_x(3, 1.0)) +
           " = F_12(1); the single-family value F_11(1) = log 2 = " +
           fmt(log2) + " is the segment value, not the level-set maximum");

  // m = 3 closed forms against the hull construction.
  const EnvelopeTable closed = build_envelopes(3);
  rep.check(closed.method == EnvelopeMethod::closed_form,
            "default m=3 method is not closed_form");
  rep.check(std::abs(epsilon_of(closed, 1.0) - log2) <= 1e-9,
            "epsilon_3(1) != log 2");
  rep.check(std::abs(eta_of(closed, 1.0) - log2) <= 1e-9,
            "eta_3(1) != log 2");
  rep.check(std::abs(epsilon_of(closed, closed.c_max) - log3) <= 1e-9,
            "epsilon_3(c_max) != log 3");
  const EnvelopeTable hull3 =
      build_envelopes(3, kDefaultEnvelopeGrid, EnvelopeMethod::hull);
  double max_eps_diff = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double c = closed.c_max * i / 1000;
    max_eps_diff = std::max(
        max_eps_diff, std::abs(epsilon_of(closed, c) - epsilon_of(hull3, c)));
  }
  rep.check(max_eps_diff <= 1e-4,
            "m=3 closed-form epsilon deviates from hull by " +
                fmt(max_eps_diff));
  rep.note("m=3 closed-form epsilon vs hull: max |diff| = " +
           fmt(max_eps_diff));

  // Two-qubit exact anchors: 3/4 Bell + 1/4 maximally mixed.
  {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = 1.0 / std::sqrt(2.0);
    bell(3) = 1.0 / std::sqrt(2.0);
    ComplexMatrix mat = 0.75 * (bell * bell.adjoint()).eval();
    mat += 0.25 * ComplexMatrix::Identity(4, 4) / 4.0;
    const auto rho = make_bipartite(2, 2, mat);
    rep.check(std::abs(two_qubit_concurrence_exact(rho) - 0.625) <= 1e-12,
              "Bell mixture concurrence != 5/8");
    rep.check(
        std::abs(two_qubit_eof_exact(rho) - 0.34586174310789886) <= 1e-12,
        "Bell mixture EoF != 0.34586174310789886");
    const auto report = eof_bounds(rho, build_envelopes(2));
    rep.check(report.eof_lower <= 0.34586174310789886 + 1e-12 &&
                  0.34586174310789886 <= report.eof_upper + 1e-12,
              "Bell mixture bounds miss the exact EoF");
  }

  // Pure Bell state: bounds pinch at log 2.
  {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = 1.0 / std::sqrt(2.0);
    bell(3) = 1.0 / std::sqrt(2.0);
    const auto rho = pure_state_density(bell, 2, 2);
    const auto report = eof_bounds(rho, build_envelopes(2));
    rep.check(std::abs(report.eof_lower - log2) <= 1e-9 &&
                  std::abs(report.eof_upper - log2) <= 1e-9,
              "Bell state bounds do not pinch at log 2");
  }

  // Werner d = 3: upper bound log 3 from the marginal purity, and the
  // flip-based concurrence giving -f log 2.
  {
    const EnvelopeTable table3 = build_envelopes(3);
    const auto rho = werner(3, -1.0);
    const auto report = eof_bounds(rho, table3);
    rep.check(std::abs(report.eof_upper - log3) <= 1e-3,
              "Werner f=-1 upper bound != log 3 (1.099)");
    for (double f : {-1.0, -0.75, -0.5, -0.25}) {
      const double hint = werner_concurrence_hint(3, f);
      const auto pair = eof_bounds_from_concurrence(hint, hint, table3);
      rep.check(std::abs(pair.second - (-f) * log2) <= 1e-9,
                "Werner hint upper at f = " + fmt(f) + " is " +
                    fmt(pair.second) + ", expected " + fmt(-f * log2));
    }
  }

  // Maximally mixed 3x3: lower bound 0, upper bound eta(sqrt(4/3)) = log 3.
  {
    const auto rho =
        make_bipartite(3, 3, ComplexMatrix::Identity(9, 9) / 9.0);
    const auto report = eof_bounds(rho, build_envelopes(3));
    rep.check(report.eof_lower == 0.0, "I/9 lower bound != 0");
    rep.check(std::abs(report.conc.upper - std::sqrt(4.0 / 3.0)) <= 1e-12,
              "I/9 c_upper != sqrt(4/3)");
    rep.check(std::abs(report.eof_upper - log3) <= 1e-9,
              "I/9 upper bound != log 3");
  }

  // Two-parameter 3x3 family: closed-form functionals against densmat.
  {
    double max_gap_err = 0.0, max_pur_err = 0.0;
    for (int ia = 0; ia < 20; ++ia)
      for (int ix = 0; ix < 20; ++ix) {
        const double a = ia / 19.0;
        const double x = ix / 19.0;
        const auto rho = example2_state(a, x);
        const auto fx = example2_functionals(a, x);
        const double pur = purity(rho.mat);
        const double pur_a = purity(partial_trace(rho, Subsystem::A));
        max_gap_err =
            std::max(max_gap_err, std::abs((pur - pur_a) - fx.purity_gap));
        max_pur_err = std::max(
            max_pur_err, std::abs((1.0 - pur_a) - fx.one_minus_purity_a));
      }
    rep.check(max_gap_err <= 1e-10,
              "two-param purity gap closed form off by " + fmt(max_gap_err));
    rep.check(max_pur_err <= 1e-10,
              "two-param marginal purity closed form off by " +
                  fmt(max_pur_err));
    rep.note("two-param functional grid 20x20: max errors " +
             fmt(max_gap_err) + ", " + fmt(max_pur_err));
  }

  // x = 0.1 numeric coefficients of the two functionals.
  {
    const double x = 0.1;
    const double c0 = 9.0 - 26.0 * x + 13.0 * x * x;
    const double c2 = 6.0 * (9.0 - 22.0 * x + 11.0 * x * x);
    const double c4 = -9.0 * (-2.0 + x) * x;
    const double d0 = 6.0 + 4.0 * x - 2.0 * x * x;
    const double d2 = 12.0 * (3.0 - 2.0 * x + x * x);
    const double d4 = -18.0 * (-2.0 + x) * x;
    const double expect[6] = {6.53, 41.46, 1.71, 6.38, 33.72, 3.42};
    const double got[6] = {c0, c2, c4, d0, d2, d4};
    for (int i = 0; i < 6; ++i)
      rep.check(std::abs(got[i] - expect[i]) <= 5e-3 * expect[i],
                "x=0.1 coefficient " + std::to_string(i) + " is " +
                    fmt(got[i]) + ", expected " + fmt(expect[i]));
  }
  return rep.result();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "two-qubit", "pure-sandwich", "envelope-hull", "roof-consistency",
      "fixtures"};
  return names;
}

bool known_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, int n, unsigned long long seed,
                      const std::string& dump_dir) {
  if (name == "two-qubit")
    return suite_two_qubit(n > 0 ? n : 1000, seed, dump_dir);
  if (name == "pure-sandwich")
    return suite_pure_sandwich(n > 0 ? n : 1000, seed, dump_dir);
  if (name == "envelope-hull") return suite_envelope_hull(n, seed, dump_dir);
  if (name == "roof-consistency")
    return suite_roof_consistency(n > 0 ? n : 20, seed, dump_dir);
  if (name == "fixtures") return suite_fixtures(n, seed, dump_dir);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace eofb::verify
