#pragma once

/**
 * @file identities.hpp
 * @brief The named identity suite run by `hyperlat verify`.
 *
 * Every identity is evaluated on the spec's lattice, equation, n and window.
 * On the exact backend "holds" means literal equality; on the approx backend
 * values are compared with ScalarTraits<double>::near at the given tolerance.
 */

#include <string>
#include <vector>

#include "hyperlat/spec_parser.hpp"

namespace hyperlat {

struct IdentityResult {
  std::string name;
  bool passed = false;
  std::string detail;  // why it failed; empty on success
};

/// Deterministic: random inputs come from fixed seeds.
std::vector<IdentityResult> run_identity_suite(const ProblemSpec& spec, double tol = 1e-9);

}  // namespace hyperlat
