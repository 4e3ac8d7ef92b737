#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eofb/densmat.hpp"
#include "eofb/envelope.hpp"
#include "eofb/eof_bounds.hpp"
#include "eofb/state_io.hpp"
#include "eofb/states.hpp"
#include "verify_suites.hpp"

namespace {

using eofb::BipartiteDensityMatrix;
using eofb::EnvelopeTable;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_row(const std::vector<double>& vals) {
  std::string row;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) row += ',';
    row += fmt12(vals[i]);
  }
  return row;
}

struct Sweep {
  std::string name;
  std::vector<double> values;
};

// "name=start:stop:step", endpoints inclusive within half a step.
Sweep parse_sweep(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw CLI::ValidationError("--sweep", "expected name=start:stop:step");
  Sweep sweep;
  sweep.name = spec.substr(0, eq);
  const std::string range = spec.substr(eq + 1);
  double start, stop, step;
  char c1, c2;
  std::istringstream in(range);
  if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      (in >> std::ws, !in.eof()))
    throw CLI::ValidationError("--sweep", "expected name=start:stop:step");
  if (step == 0.0 || (stop - start) * step < 0.0)
    throw CLI::ValidationError("--sweep", "step does not reach stop");
  const double tol = std::abs(step) / 2.0;
  for (int i = 0;; ++i) {
    const double v = start + i * step;
    if ((step > 0 && v > stop + tol) || (step < 0 && v < stop - tol)) break;
    sweep.values.push_back(v);
  }
  return sweep;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

const char* kBoundsHeader =
    "param,c_lower_ppt,c_lower_ccnr,c_lower_purityA,c_lower_purityB,"
    "c_lower,c_upper,eof_lower,eof_upper,"
    "eof_lower_ppt,eof_lower_ccnr,eof_lower_purityA,eof_lower_purityB";

std::vector<double> bounds_row(double param, const eofb::EofBoundsReport& r) {
  return {param,
          r.conc.ppt_lower,
          r.conc.ccnr_lower,
          r.conc.purity_a_lower,
          r.conc.purity_b_lower,
          r.conc.lower,
          r.conc.upper,
          r.eof_lower,
          r.eof_upper,
          r.eps_ppt,
          r.eps_ccnr,
          r.eps_purity_a,
          r.eps_purity_b};
}

void print_report(const eofb::EofBoundsReport& r) {
  std::cout << "state: " << (r.swapped ? r.n : r.m) << " x "
            << (r.swapped ? r.m : r.n);
  if (r.swapped)
    std::cout << "  (analyzed as " << r.m << " x " << r.n
              << "; subsystems relabeled so that dim A <= dim B)";
  std::cout << '\n';
  std::cout << "concurrence lower bounds:\n";
  std::cout << "  ppt        " << fmt12(r.conc.ppt_lower) << '\n';
  std::cout << "  ccnr       " << fmt12(r.conc.ccnr_lower) << '\n';
  std::cout << "  purity A   " << fmt12(r.conc.purity_a_lower)
            << (r.conc.purity_a_clamped ? "  (radicand clamped to 0)" : "")
            << '\n';
  std::cout << "  purity B   " << fmt12(r.conc.purity_b_lower)
            << (r.conc.purity_b_clamped ? "  (radicand clamped to 0)" : "")
            << '\n';
  std::cout << "  combined   " << fmt12(r.conc.lower) << '\n';
  std::cout << "concurrence upper bound: " << fmt12(r.conc.upper) << "  (A "
            << fmt12(r.conc.upper_a) << ", B " << fmt12(r.conc.upper_b)
            << ")\n";
  std::cout << "EoF bounds: " << fmt12(r.eof_lower)
            << " <= E <= " << fmt12(r.eof_upper) << '\n';
  std::cout << "per-component EoF lower bounds: ppt " << fmt12(r.eps_ppt)
            << ", ccnr " << fmt12(r.eps_ccnr) << ", purity A "
            << fmt12(r.eps_purity_a) << ", purity B "
            << fmt12(r.eps_purity_b) << '\n';
}

int cmd_bounds(const std::string& path, int grid, const std::string& out) {
  const BipartiteDensityMatrix rho = eofb::load_state(path);
  const EnvelopeTable table = eofb::build_envelopes(rho.dim_a, grid);
  const auto report = eof_bounds(rho, table);
  print_report(report);
  std::ofstream file;
  std::ostream& os = open_out(out, file);
  os << kBoundsHeader << '\n' << csv_row(bounds_row(0.0, report)) << '\n';
  return 0;
}

int cmd_envelope(int m, int grid, const std::string& method_name,
                 const std::string& out) {
  EnvelopeTable table;
  if (method_name == "default") {
    table = eofb::build_envelopes(m, grid);
  } else {
    eofb::EnvelopeMethod method = eofb::EnvelopeMethod::hull;
    if (method_name == "closed-form")
      method = eofb::EnvelopeMethod::closed_form;
    else if (method_name == "segment-rules")
      method = eofb::EnvelopeMethod::segment_rules;
    table = eofb::build_envelopes(m, grid, method);
  }
  std::ofstream file;
  std::ostream& os = open_out(out, file);
  os << "c,X,Y,epsilon,eta\n";
  for (std::size_t i = 0; i < table.grid.size(); ++i) {
    const double c = table.grid[i];
    os << csv_row({c, table.x_vals[i], table.y_vals[i],
                   epsilon_of(table, c), eta_of(table, c)})
       << '\n';
  }
  return 0;
}

int cmd_example_werner(int d, const Sweep& sweep, int grid,
                       const std::string& out) {
  if (sweep.name != "f")
    throw CLI::ValidationError("--sweep", "werner sweeps over f");
  const EnvelopeTable table = eofb::build_envelopes(d, grid);
  std::ofstream file;
  std::ostream& os = open_out(out, file);
  const bool with_hint = (d == 3);
  os << kBoundsHeader << (with_hint ? ",eof_upper_hint" : "") << '\n';
  for (double f : sweep.values) {
    const auto rho = eofb::werner(d, f);
    const auto report = eof_bounds(rho, table);
    auto row = bounds_row(f, report);
    if (with_hint) {
      const double hint = eofb::werner_concurrence_hint(d, f);
      row.push_back(eofb::eof_bounds_from_concurrence(hint, hint, table).second);
    }
    os << csv_row(row) << '\n';
  }
  return 0;
}

int cmd_example_two_param(double a, double x, const Sweep& sweep, int grid,
                          const std::string& out) {
  if (sweep.name != "a" && sweep.name != "x")
    throw CLI::ValidationError("--sweep", "two-param sweeps over a or x");
  const EnvelopeTable table = eofb::build_envelopes(3, grid);
  std::ofstream file;
  std::ostream& os = open_out(out, file);
  os << kBoundsHeader << '\n';
  for (double v : sweep.values) {
    const double av = sweep.name == "a" ? v : a;
    const double xv = sweep.name == "x" ? v : x;
    const auto rho = eofb::example2_state(av, xv);
    const auto report = eof_bounds(rho, table);
    os << csv_row(bounds_row(v, report)) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Analytical lower/upper bounds on the entanglement of formation of "
      "bipartite density matrices"};
  app.require_subcommand(1);

  std::string bounds_path, bounds_out;
  int bounds_grid = eofb::kDefaultEnvelopeGrid;
  auto* bounds = app.add_subcommand(
      "bounds", "EoF bounds for a density matrix read from a state file");
  bounds->add_option("state-file", bounds_path, "path to the state file")
      ->required();
  bounds->add_option("--grid", bounds_grid, "envelope grid size")
      ->check(CLI::PositiveNumber);
  bounds->add_option("--out", bounds_out, "write the CSV row here");

  int env_m = 0, env_grid = eofb::kDefaultEnvelopeGrid;
  std::string env_method = "default", env_out;
  auto* envelope = app.add_subcommand(
      "envelope", "tabulate X, Y and the transfer functions for dimension m");
  envelope->add_option("--m", env_m, "smaller subsystem dimension")
      ->required()
      ->check(CLI::Range(2, 64));
  envelope->add_option("--grid", env_grid, "grid size")
      ->check(CLI::PositiveNumber);
  envelope
      ->add_option("--method", env_method, "envelope construction")
      ->check(CLI::IsMember(
          {"default", "hull", "closed-form", "segment-rules"}));
  envelope->add_option("--out", env_out, "output CSV path");

  std::string ex_family, ex_sweep, ex_out;
  int ex_d = 3, ex_grid = eofb::kDefaultEnvelopeGrid;
  double ex_a = 0.0, ex_x = 0.0;
  auto* example = app.add_subcommand(
      "example", "bound sweeps over the built-in state families");
  example->add_option("--family", ex_family, "state family")
      ->required()
      ->check(CLI::IsMember({"werner", "two-param"}));
  example->add_option("--sweep", ex_sweep, "sweep spec name=start:stop:step")
      ->required();
  example->add_option("--d", ex_d, "werner local dimension")
      ->check(CLI::Range(2, 64));
  example->add_option("--a", ex_a, "two-param fixed a");
  example->add_option("--x", ex_x, "two-param fixed x");
  example->add_option("--grid", ex_grid, "envelope grid size")
      ->check(CLI::PositiveNumber);
  example->add_option("--out", ex_out, "output CSV path");

  std::string ver_suite, ver_dump = ".";
  int ver_n = 0;
  std::uint64_t ver_seed = 12345;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", ver_suite, "suite name")
      ->required()
      ->check(CLI::IsMember(eofb::verify::suite_names()));
  verify->add_option("--n", ver_n, "number of random trials (0 = default)");
  verify->add_option("--seed", ver_seed, "random seed");
  verify->add_option("--dump-dir", ver_dump,
                     "directory for serialized failing states");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(bounds))
      return cmd_bounds(bounds_path, bounds_grid, bounds_out);
    if (app.got_subcommand(envelope))
      return cmd_envelope(env_m, env_grid, env_method, env_out);
    if (app.got_subcommand(example)) {
      const Sweep sweep = parse_sweep(ex_sweep);
      if (ex_family == "werner")
        return cmd_example_werner(ex_d, sweep, ex_grid, ex_out);
      return cmd_example_two_param(ex_a, ex_x, sweep, ex_grid, ex_out);
    }
    if (app.got_subcommand(verify)) {
      const auto result =
          eofb::verify::run_suite(ver_suite, ver_n, ver_seed, ver_dump);
      std::cout << "suite " << ver_suite << ": " << result.checks
                << " checks, " << result.failures << " failures\n";
      return result.failures == 0 ? 0 : 1;
    }
  } catch (const eofb::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << '\n';
    return kExitParse;
  } catch (const CLI::Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "validation error: " << ex.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& ex) {
    std::cerr << "validation error: " << ex.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
