#pragma once

/**
 * @file report.hpp
 * @brief CSV and JSON renderings of the CLI results.
 *
 * CSV: `,` separator, `\n` line endings, no quoting. JSON: keys in a fixed
 * order, two-space indent. Scalars are canonical Rational text on the exact
 * backend and `%.17g` on the approx backend.
 */

#include <string>
#include <vector>

#include "hyperlat/identities.hpp"
#include "hyperlat/rodrigues.hpp"

namespace hyperlat {

enum class Format { csv, json };

/// Rows s,value,residual over the output window. `residual` is L[y] with
/// the spec's lambda on that window.
template <FieldScalar T>
std::string render_solution(const SolutionReport<T>& report, const GridFunction<T>& residual, Format format);

/// sigma*, tau* and −tau_{-2}(s+1) on the window, then lambda*, kappa_{-1}
/// and lambda − kappa_{-1}.
template <FieldScalar T>
std::string render_adjoint(const HyperEquation& eq, const Window& window, Format format);

/// k, nu(k), alpha(k), kappa_k, kappa_{2k+1}, mu_k, lambda_k, mu^_k for k = 0..n.
template <FieldScalar T>
std::string render_table(const HyperEquation& eq, std::int64_t n, Format format);

std::string render_identities(const std::vector<IdentityResult>& results, Format format);

}  // namespace hyperlat
