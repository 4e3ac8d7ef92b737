#pragma once

#include <string>
#include <vector>

namespace eofb::verify {

struct SuiteResult {
  int checks = 0;
  int failures = 0;
};

const std::vector<std::string>& suite_names();
bool known_suite(const std::string& name);

// Runs one named suite.  n scales the number of random trials where the
// suite is randomized, seed makes it reproducible, and dump_dir is where
// offending states are serialized when a randomized check fails.
SuiteResult run_suite(const std::string& name, int n, unsigned long long seed,
                      const std::string& dump_dir);

}  // namespace eofb::verify
