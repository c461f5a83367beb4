#include "hyperlat/report.hpp"

#include <sstream>

#include "hyperlat/adjoint.hpp"
#include "json.hpp"

namespace hyperlat {

namespace {

using Json = nlohmann::ordered_json;

template <FieldScalar T>
std::string text(const T& v) {
  return ScalarTraits<T>::text(v);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

template <FieldScalar T>
std::string render_solution(const SolutionReport<T>& report, const GridFunction<T>& residual, Format format) {
  const Window& w = report.construction.layout.output;
  if (format == Format::csv) {
    std::ostringstream out;
    out << "s,value,residual\n";
    for (HalfInt s = w.start; s <= w.last(); ++s) {
      out << s.str() << "," << text(report.solution.at(s)) << "," << text(residual.at(s)) << "\n";
    }
    return out.str();
  }
  Json values = Json::array();
  Json res = Json::array();
  for (HalfInt s = w.start; s <= w.last(); ++s) {
    values.push_back(text(report.solution.at(s)));
    res.push_back(text(residual.at(s)));
  }
  Json provenance;
  provenance["N"] = report.kind == SolutionKind::polynomial ? Json(nullptr) : Json(report.construction.layout.sum_base.str());
  if (report.kind == SolutionKind::generalized) {
    Json P = Json::array();
    for (const auto& c : report.construction.P) P.push_back(c.str());
    provenance["P"] = P;
  } else {
    provenance["P"] = nullptr;
  }
  Json j;
  j["kind"] = to_string(report.kind);
  j["n"] = report.construction.n;
  j["lambda_n"] = report.construction.lambda_n.str();
  j["window"] = {{"start", w.start.str()}, {"length", w.length}};
  j["values"] = values;
  j["residual"] = res;
  j["residual_max_abs"] = text(max_abs(residual));
  j["provenance"] = provenance;
  return dump(j);
}

template <FieldScalar T>
std::string render_adjoint(const HyperEquation& eq, const Window& window, Format format) {
  const auto adj = adjoint_coeffs<T>(eq, window);
  const auto lc = eq.leading();
  const T kappa_m1 = kappa<T>(eq.lattice(), lc.sigma2, lc.tau1, -1);
  const T lambda = from_rational<T>(eq.lambda());
  if (format == Format::csv) {
    std::ostringstream out;
    out << "s,sigma_star,tau_star,minus_tau_m2_next\n";
    for (HalfInt s = window.start; s <= window.last(); ++s) {
      out << s.str() << "," << text(sigma_star<T>(eq, s)) << "," << text(tau_star<T>(eq, s)) << ","
          << text(-tau_k<T>(eq, -2, s + 1)) << "\n";
    }
    out << "\nquantity,value\n";
    out << "lambda_star," << text(adj.lambda_star) << "\n";
    out << "kappa_m1," << text(kappa_m1) << "\n";
    out << "lambda_minus_kappa_m1," << text(lambda - kappa_m1) << "\n";
    return out.str();
  }
  Json rows = Json::array();
  for (HalfInt s = window.start; s <= window.last(); ++s) {
    Json row;
    row["s"] = s.str();
    row["sigma_star"] = text(sigma_star<T>(eq, s));
    row["tau_star"] = text(tau_star<T>(eq, s));
    row["minus_tau_m2_next"] = text(-tau_k<T>(eq, -2, s + 1));
    rows.push_back(row);
  }
  Json j;
  j["rows"] = rows;
  j["lambda_star"] = text(adj.lambda_star);
  j["kappa_m1"] = text(kappa_m1);
  j["lambda_minus_kappa_m1"] = text(lambda - kappa_m1);
  return dump(j);
}

template <FieldScalar T>
std::string render_table(const HyperEquation& eq, std::int64_t n, Format format) {
  const Lattice& lat = eq.lattice();
  const auto lc = eq.leading();
  static const char* const columns[] = {"k", "nu", "alpha", "kappa", "kappa_2k1", "mu", "lambda", "hat_mu"};
  std::vector<std::vector<std::string>> rows;
  for (std::int64_t k = 0; k <= n; ++k) {
    rows.push_back({std::to_string(k), text(lat.nu<T>(k)), text(lat.alpha<T>(k)),
                    text(kappa<T>(lat, lc.sigma2, lc.tau1, k)), text(kappa<T>(lat, lc.sigma2, lc.tau1, 2 * k + 1)),
                    text(mu_k<T>(eq, k)), text(lambda_n<T>(eq, k)), text(hat_mu_n<T>(eq, k))});
  }
  if (format == Format::csv) {
    std::ostringstream out;
    for (std::size_t c = 0; c < 8; ++c) out << (c ? "," : "") << columns[c];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << "\n";
    }
    return out.str();
  }
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json o;
    o["k"] = std::stoll(row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) o[columns[c]] = row[c];
    arr.push_back(o);
  }
  return dump(Json{{"rows", arr}});
}

std::string render_identities(const std::vector<IdentityResult>& results, Format format) {
  if (format == Format::csv) {
    std::ostringstream out;
    out << "identity,result\n";
    for (const auto& r : results) out << r.name << "," << (r.passed ? "PASS" : "FAIL") << "\n";
    return out.str();
  }
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"identity", r.name}, {"result", r.passed ? "PASS" : "FAIL"}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return dump(Json{{"identities", arr}, {"all_passed", all}});
}

#define HYPERLAT_INSTANTIATE(T)                                                                                   \
  template std::string render_solution<T>(const SolutionReport<T>&, const GridFunction<T>&, Format);            \
  template std::string render_adjoint<T>(const HyperEquation&, const Window&, Format);                          \
  template std::string render_table<T>(const HyperEquation&, std::int64_t, Format);

HYPERLAT_INSTANTIATE(Rational)
HYPERLAT_INSTANTIATE(double)

#undef HYPERLAT_INSTANTIATE

}  // namespace hyperlat
