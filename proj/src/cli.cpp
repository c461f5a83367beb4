#include "hyperlat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/identities.hpp"
#include "hyperlat/report.hpp"
#include "hyperlat/rodrigues.hpp"
#include "hyperlat/spec_parser.hpp"

namespace hyperlat {

namespace {

struct RunConfig {
  std::string command;
  std::string spec_path;
  std::string format = "csv";
  std::string out_path;
  std::string kind = "polynomial";
  std::string tol = "1e-9";
};

class UsageError : public Error {
 public:
  using Error::Error;
};

double parse_tolerance(const std::string& text) {
  double v = -1;
  try {
    v = parse_rational(text).to_double();
  } catch (const Error&) {
    std::size_t used = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
    }
    if (used != text.size()) v = -1;
  }
  if (!(v >= 0)) throw UsageError("--tol must be a nonnegative rational or float");
  return v;
}

ProblemSpec load_spec(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const ParseResult r = parse_spec(buf.str());
  for (const auto& d : r.diagnostics) err << path << ":" << d.str() << "\n";
  if (!r.ok()) throw UsageError("spec '" + path + "' has errors");
  return *r.spec;
}

template <FieldScalar T>
int solve(const ProblemSpec& spec, const RunConfig& cfg, Format format, double tol, std::string& report,
          std::ostream& err) {
  const HyperEquation eq = spec.equation();
  SolutionReport<T> r = [&] {
    if (cfg.kind == "polynomial") return rodrigues_polynomial<T>(eq, spec.n, spec.window);
    if (cfg.kind == "second") return second_solution<T>(eq, spec.n, spec.window, spec.sum_base);
    return generalized_solution<T>(eq, spec.n, spec.window, *spec.P, spec.sum_base);
  }();
  // The generators run at lambda_n; the residual reported is that of the spec's lambda.
  const GridFunction<T> residual = apply_L(eq, r.solution);
  report = render_solution(r, residual, format);
  if (r.construction.inadmissible_at) {
    err << "warning: lambda_n coincides with lambda_" << *r.construction.inadmissible_at << "\n";
  }
  bool ok = false;
  if constexpr (ScalarTraits<T>::exact) {
    ok = residual.is_identically_zero();
  } else {
    ok = max_abs(residual) <= tol;
  }
  if (!ok) {
    err << "residual is not " << (ScalarTraits<T>::exact ? "identically zero" : "within tolerance")
        << " (max |residual| = " << ScalarTraits<T>::text(max_abs(residual)) << ")\n";
    return exit_failure;
  }
  return exit_ok;
}

int dispatch(const RunConfig& cfg, std::string& report, std::ostream& err) {
  const ProblemSpec spec = load_spec(cfg.spec_path, err);
  const Format format = cfg.format == "json" ? Format::json : Format::csv;
  const double tol = parse_tolerance(cfg.tol);
  const bool exact = spec.backend == Backend::exact;

  if (cfg.command == "solve") {
    if (cfg.kind == "generalized" && !spec.P) throw UsageError("--kind generalized requires P in the spec");
    return exact ? solve<Rational>(spec, cfg, format, tol, report, err) : solve<double>(spec, cfg, format, tol, report, err);
  }
  if (cfg.command == "verify") {
    const auto results = run_identity_suite(spec, tol);
    report = render_identities(results, format);
    const auto failed = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    if (failed != results.end()) {
      err << "identity failed: " << failed->name << ": " << failed->detail << "\n";
      return exit_failure;
    }
    return exit_ok;
  }
  const HyperEquation eq = spec.equation();
  if (cfg.command == "adjoint") {
    report = exact ? render_adjoint<Rational>(eq, spec.window, format) : render_adjoint<double>(eq, spec.window, format);
    return exit_ok;
  }
  report = exact ? render_table<Rational>(eq, spec.n, format) : render_table<double>(eq, spec.n, format);
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Rodrigues-type solutions of hypergeometric difference equations on nonuniform lattices", "hyperlat"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec_path, "problem specification file")->required();
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report here instead of standard output");
  };
  CLI::App* solve_cmd = app.add_subcommand("solve", "build a solution and check its residual");
  common(solve_cmd);
  solve_cmd->add_option("--kind", cfg.kind, "polynomial, second or generalized")
      ->check(CLI::IsMember({"polynomial", "second", "generalized"}));
  solve_cmd->add_option("--tol", cfg.tol, "residual tolerance on the approx backend");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suite");
  common(verify_cmd);
  verify_cmd->add_option("--tol", cfg.tol, "comparison tolerance on the approx backend");
  common(app.add_subcommand("adjoint", "adjoint coefficients on the window"));
  common(app.add_subcommand("table", "lattice scalars and eigenvalue ladder for k = 0..n"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::string report;
  int code = exit_ok;
  try {
    code = dispatch(cfg, report, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Singularity& e) {
    err << "singularity: " << e.what() << "\n";
    code = exit_singularity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = exit_failure;
  }
  if (!report.empty()) {
    if (cfg.out_path.empty()) {
      out << report;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file || !(file << report)) {
        err << "error: cannot write '" << cfg.out_path << "'\n";
        return exit_usage;
      }
    }
  }
  return code;
}

}  // namespace hyperlat
