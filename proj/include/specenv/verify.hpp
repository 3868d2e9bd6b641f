#pragma once

#include <string>
#include <vector>

#include "specenv/grid.hpp"

namespace specenv {

struct VerifyCheck {
  std::string check;
  double expected = 0.0;
  double actual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Named check suites mirroring the acceptance gates:
/// norms, l1, kernels, specmap, similarity, envelope, all.
/// Results come back sorted by check name.
std::vector<VerifyCheck> run_verify_suite(const std::string& suite,
                                          unsigned long long seed = 12345);

bool all_pass(const std::vector<VerifyCheck>& checks);

}  // namespace specenv
