#pragma once

/**
 * @file spec_parser.hpp
 * @brief The flat `key = value` problem format.
 *
 *   # a comment
 *   lattice = quadratic
 *   ct1 = 1
 *   ct2 = 1
 *   ct3 = 0
 *   sigma = 0, 0, 1        # sigma~(0), sigma~'(0), sigma~''/2
 *   tau = 1, 2             # tau~(0), tau~'
 *   n = 2
 *   window = 6..18         # inclusive, half-integers allowed: 13/2..37/2
 *
 * Optional keys: lambda, sum_base, P, backend (exact|approx),
 * allow_degenerate (true|false). The q-quadratic family takes p, c1, c2, c3
 * instead of ct1..ct3.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlat/half_int.hpp"
#include "hyperlat/hyper_equation.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/rational.hpp"
#include "hyperlat/scalar.hpp"

namespace hyperlat {

inline constexpr std::int64_t default_max_n = 16;

struct ProblemSpec {
  Lattice lattice;
  std::array<Rational, 3> sigma;
  std::array<Rational, 2> tau;
  std::optional<Rational> lambda;  // absent: lambda_n
  std::int64_t n = 0;
  Window window;
  std::optional<HalfInt> sum_base;
  std::optional<std::vector<Rational>> P;
  Backend backend = Backend::exact;
  bool allow_degenerate = false;

  /// The equation with lambda (or lambda_n when absent).
  HyperEquation equation() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

enum class Severity { error, warning };

struct ParseDiagnostic {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes
  std::string message;
  Severity severity = Severity::error;

  /// "line:column: error: message"
  std::string str() const;
};

struct ParseResult {
  std::optional<ProblemSpec> spec;  // set iff no diagnostic is an error
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return spec.has_value(); }
};

/// Never throws; every problem comes back as a diagnostic.
ParseResult parse_spec(std::string_view text, std::int64_t max_n = default_max_n);

/// Canonical text; defaults and absent optional keys are omitted.
std::string render_spec(const ProblemSpec& spec);

}  // namespace hyperlat
