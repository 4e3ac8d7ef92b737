#include "eofb/state_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace eofb {

namespace {

bool skippable(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

bool next_content_line(std::istream& in, std::string* line) {
  while (std::getline(in, *line))
    if (!skippable(*line)) return true;
  return false;
}

Complex parse_entry(const std::string& token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos)
    throw ParseError("entry '" + token + "' is missing the re,im comma");
  std::size_t used = 0;
  double re, im;
  try {
    re = std::stod(token.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string imag_part = token.substr(comma + 1);
    im = std::stod(imag_part, &used);
    if (used != imag_part.size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw ParseError("entry '" + token + "' is not a pair of numbers");
  }
  return Complex(re, im);
}

}  // namespace

void save_state(std::ostream& out, const BipartiteDensityMatrix& rho) {
  const long d = rho.mat.rows();
  out << "dims " << rho.dim_a << ' ' << rho.dim_b << '\n';
  char buf[64];
  for (long r = 0; r < d; ++r) {
    for (long c = 0; c < d; ++c) {
      const Complex z = rho.mat(r, c);
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
      if (c) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

void save_state(const std::string& path, const BipartiteDensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  save_state(out, rho);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

BipartiteDensityMatrix load_state(std::istream& in) {
  std::string line;
  if (!next_content_line(in, &line)) throw ParseError("empty state file");

  std::istringstream header(line);
  std::string tag;
  int m = 0, n = 0;
  if (!(header >> tag >> m >> n) || tag != "dims")
    throw ParseError("first line must be 'dims <m> <n>'");
  std::string trailing;
  if (header >> trailing) throw ParseError("unexpected text after dims header");
  if (m < 1 || n < 1) throw ParseError("dims must be positive");

  const long d = static_cast<long>(m) * n;
  ComplexMatrix mat(d, d);
  for (long r = 0; r < d; ++r) {
    if (!next_content_line(in, &line))
      throw ParseError("expected " + std::to_string(d) + " matrix rows, got " +
                       std::to_string(r));
    std::istringstream row(line);
    std::string token;
    for (long c = 0; c < d; ++c) {
      if (!(row >> token))
        throw ParseError("row " + std::to_string(r) + " has fewer than " +
                         std::to_string(d) + " entries");
      mat(r, c) = parse_entry(token);
    }
    if (row >> token)
      throw ParseError("row " + std::to_string(r) + " has more than " +
                       std::to_string(d) + " entries");
  }
  if (next_content_line(in, &line))
    throw ParseError("unexpected trailing content after matrix rows");

  return make_bipartite(m, n, mat);
}

BipartiteDensityMatrix load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_state(in);
}

}  // namespace eofb
