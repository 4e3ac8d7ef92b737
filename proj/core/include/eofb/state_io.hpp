#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "eofb/densmat.hpp"

namespace eofb {

// Raised when a state file is structurally malformed (bad header, wrong
// entry count, unparsable numbers).  Validation failures of a well-formed
// matrix (non-Hermitian, negative, wrong trace) surface as the usual
// std::invalid_argument from make_bipartite instead.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Text format:
//   dims <m> <n>
// followed by m*n lines of m*n entries each, row-major, every entry
// written as re,im with no interior spaces.  Entries on a line are
// separated by whitespace.  Blank lines and lines starting with '#'
// are ignored.
void save_state(std::ostream& out, const BipartiteDensityMatrix& rho);
void save_state(const std::string& path, const BipartiteDensityMatrix& rho);

BipartiteDensityMatrix load_state(std::istream& in);
BipartiteDensityMatrix load_state(const std::string& path);

}  // namespace eofb
