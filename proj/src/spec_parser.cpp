#include "hyperlat/spec_parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

// Windows and sum bases stay well inside what the generators can evaluate.
constexpr std::int64_t max_abs_point = 1000;
constexpr std::int64_t max_window_length = 1000;

const std::set<std::string> common_keys{"lattice", "sigma",    "tau",     "lambda",          "n",
                                        "window",  "sum_base", "P",       "backend",         "allow_degenerate"};
const std::vector<std::string> q_keys{"p", "c1", "c2", "c3"};
const std::vector<std::string> quad_keys{"ct1", "ct2", "ct3"};

bool is_space(char c) { return c == ' ' || c == '\t'; }
bool is_key_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_key_char(char c) { return is_key_start(c) || (c >= '0' && c <= '9'); }

struct Entry {
  std::string key;
  int line;
  int key_column;
  std::string value;
  int value_column;
};

class Parser {
 public:
  Parser(std::string_view text, std::int64_t max_n) : text_(text), max_n_(max_n) {}

  ParseResult run();

 private:
  void error(int line, int column, std::string message) {
    diags_.push_back({line, column, std::move(message), Severity::error});
  }
  void warning(int line, int column, std::string message) {
    diags_.push_back({line, column, std::move(message), Severity::warning});
  }
  bool has_errors() const {
    return std::any_of(diags_.begin(), diags_.end(), [](const auto& d) { return d.severity == Severity::error; });
  }

  void lex_line(std::string_view line, int number);

  std::optional<Rational> rational(std::string_view text, int line, int column);
  std::optional<Rational> rational_entry(const Entry& e) { return rational(e.value, e.line, e.value_column); }
  std::optional<std::vector<Rational>> list(const Entry& e, std::optional<std::size_t> expected);
  std::optional<HalfInt> half_int(std::string_view text, int line, int column, const std::string& what);
  std::optional<Window> window(const Entry& e);
  std::optional<bool> boolean(const Entry& e);

  std::string_view text_;
  std::int64_t max_n_;
  std::vector<ParseDiagnostic> diags_;
  std::vector<Entry> entries_;
};

void Parser::lex_line(std::string_view line, int number) {
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return static_cast<int>(at) + 1; };
  while (i < line.size() && is_space(line[i])) ++i;
  if (i == line.size() || line[i] == '#') return;
  if (!is_key_start(line[i])) {
    error(number, col(i), "expected a key");
    return;
  }
  const std::size_t key_begin = i;
  while (i < line.size() && is_key_char(line[i])) ++i;
  const std::string key(line.substr(key_begin, i - key_begin));
  while (i < line.size() && is_space(line[i])) ++i;
  if (i == line.size() || line[i] != '=') {
    error(number, col(i), "expected '=' after '" + key + "'");
    return;
  }
  ++i;
  while (i < line.size() && is_space(line[i])) ++i;
  const std::size_t value_begin = i;
  std::size_t value_end = line.find('#', value_begin);
  if (value_end == std::string_view::npos) value_end = line.size();
  while (value_end > value_begin && is_space(line[value_end - 1])) --value_end;
  if (value_end == value_begin) {
    error(number, col(value_begin), "missing value for '" + key + "'");
    return;
  }
  entries_.push_back({key, number, col(key_begin), std::string(line.substr(value_begin, value_end - value_begin)),
                      col(value_begin)});
}

std::optional<Rational> Parser::rational(std::string_view text, int line, int column) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    error(line, column + static_cast<int>(e.offset()), "'" + std::string(text) + "' is not a rational number");
  } catch (const DivisionByZero&) {
    error(line, column, "'" + std::string(text) + "' has a zero denominator");
  }
  return std::nullopt;
}

std::optional<std::vector<Rational>> Parser::list(const Entry& e, std::optional<std::size_t> expected) {
  std::vector<Rational> out;
  bool ok = true;
  std::size_t begin = 0;
  const std::string_view v = e.value;
  for (;;) {
    std::size_t end = v.find(',', begin);
    const bool last = end == std::string_view::npos;
    if (last) end = v.size();
    std::size_t a = begin;
    std::size_t b = end;
    while (a < b && is_space(v[a])) ++a;
    while (b > a && is_space(v[b - 1])) --b;
    if (a == b) {
      error(e.line, e.value_column + static_cast<int>(a), "empty entry in the list for '" + e.key + "'");
      ok = false;
    } else if (auto r = rational(v.substr(a, b - a), e.line, e.value_column + static_cast<int>(a))) {
      out.push_back(*r);
    } else {
      ok = false;
    }
    if (last) break;
    begin = end + 1;
  }
  if (!ok) return std::nullopt;
  if (expected && out.size() != *expected) {
    error(e.line, e.value_column,
          "'" + e.key + "' takes " + std::to_string(*expected) + " values, got " + std::to_string(out.size()));
    return std::nullopt;
  }
  return out;
}

std::optional<HalfInt> Parser::half_int(std::string_view text, int line, int column, const std::string& what) {
  const auto r = rational(text, line, column);
  if (!r) return std::nullopt;
  const auto h = HalfInt::from_rational(*r);
  if (!h) {
    error(line, column, what + " must be an integer or half-integer");
    return std::nullopt;
  }
  if (h->twice() > 2 * max_abs_point || h->twice() < -2 * max_abs_point) {
    error(line, column, what + " must lie within -" + std::to_string(max_abs_point) + ".." +
                            std::to_string(max_abs_point));
    return std::nullopt;
  }
  return h;
}

std::optional<Window> Parser::window(const Entry& e) {
  const std::size_t dots = e.value.find("..");
  if (dots == std::string::npos) {
    error(e.line, e.value_column, "window must have the form start..end");
    return std::nullopt;
  }
  auto trimmed = [&](std::size_t a, std::size_t b) {
    while (a < b && is_space(e.value[a])) ++a;
    while (b > a && is_space(e.value[b - 1])) --b;
    return std::pair{a, b};
  };
  const auto [a0, a1] = trimmed(0, dots);
  const auto [b0, b1] = trimmed(dots + 2, e.value.size());
  const auto first = half_int(std::string_view(e.value).substr(a0, a1 - a0), e.line, e.value_column + static_cast<int>(a0),
                              "window start");
  const auto last = half_int(std::string_view(e.value).substr(b0, b1 - b0), e.line, e.value_column + static_cast<int>(b0),
                             "window end");
  if (!first || !last) return std::nullopt;
  const auto w = window_between(*first, *last);
  if (!w) {
    error(e.line, e.value_column, "window end must not precede its start and must be a whole number of steps from it");
    return std::nullopt;
  }
  if (w->length > max_window_length) {
    error(e.line, e.value_column, "window must hold at most " + std::to_string(max_window_length) + " points");
    return std::nullopt;
  }
  return w;
}

std::optional<bool> Parser::boolean(const Entry& e) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  error(e.line, e.value_column, "'" + e.key + "' must be true or false");
  return std::nullopt;
}

ParseResult Parser::run() {
  int number = 1;
  std::size_t begin = 0;
  for (;;) {
    std::size_t end = text_.find('\n', begin);
    const bool last = end == std::string_view::npos;
    if (last) end = text_.size();
    std::string_view line = text_.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lex_line(line, number);
    if (last) break;
    begin = end + 1;
    ++number;
  }

  std::map<std::string, const Entry*> by_key;
  for (const auto& e : entries_) {
    const bool known = common_keys.count(e.key) != 0 ||
                       std::find(q_keys.begin(), q_keys.end(), e.key) != q_keys.end() ||
                       std::find(quad_keys.begin(), quad_keys.end(), e.key) != quad_keys.end();
    if (!known) {
      error(e.line, e.key_column, "unknown key '" + e.key + "'");
      continue;
    }
    const auto [it, inserted] = by_key.emplace(e.key, &e);
    if (!inserted) {
      error(e.line, e.key_column,
            "duplicate key '" + e.key + "' (first set on line " + std::to_string(it->second->line) + ")");
    }
  }
  auto get = [&](const std::string& key) -> const Entry* {
    const auto it = by_key.find(key);
    return it == by_key.end() ? nullptr : it->second;
  };

  std::optional<LatticeFamily> family;
  if (const Entry* e = get("lattice")) {
    if (e->value == "qquadratic") {
      family = LatticeFamily::q_quadratic;
    } else if (e->value == "quadratic") {
      family = LatticeFamily::quadratic;
    } else {
      error(e->line, e->value_column, "lattice must be qquadratic or quadratic");
    }
  }

  std::vector<std::string> required{"lattice"};
  if (family) {
    const auto& own = *family == LatticeFamily::q_quadratic ? q_keys : quad_keys;
    const auto& other = *family == LatticeFamily::q_quadratic ? quad_keys : q_keys;
    required.insert(required.end(), own.begin(), own.end());
    for (const auto& k : other) {
      if (const Entry* e = get(k)) {
        error(e->line, e->key_column, "key '" + k + "' does not apply to the " +
                                          std::string(*family == LatticeFamily::q_quadratic ? "qquadratic" : "quadratic") +
                                          " lattice");
      }
    }
  }
  for (const char* k : {"sigma", "tau", "n", "window"}) required.emplace_back(k);
  std::vector<std::string> missing;
  for (const auto& k : required) {
    if (get(k) == nullptr) missing.push_back(k);
  }
  if (!missing.empty()) {
    std::string msg = missing.size() == 1 ? "missing required key: " : "missing required keys: ";
    for (std::size_t i = 0; i < missing.size(); ++i) msg += (i ? ", " : "") + missing[i];
    error(1, 1, msg);
  }

  // Field values. Each helper reports its own errors.
  std::optional<Rational> p;
  std::array<std::optional<Rational>, 3> c;
  if (family == LatticeFamily::q_quadratic) {
    if (const Entry* e = get("p")) {
      p = rational_entry(*e);
      if (p && (p->is_zero() || *p == Rational(1) || *p == Rational(-1))) {
        error(e->line, e->value_column, "p must not be 0, 1, or -1");
        p.reset();
      }
    }
  }
  if (family) {
    const auto& own = *family == LatticeFamily::q_quadratic ? std::vector<std::string>{"c1", "c2", "c3"} : quad_keys;
    for (std::size_t i = 0; i < 3; ++i) {
      if (const Entry* e = get(own[i])) c[i] = rational_entry(*e);
    }
  }
  std::optional<std::vector<Rational>> sigma;
  std::optional<std::vector<Rational>> tau;
  if (const Entry* e = get("sigma")) sigma = list(*e, 3);
  if (const Entry* e = get("tau")) tau = list(*e, 2);
  std::optional<Rational> lambda;
  if (const Entry* e = get("lambda")) lambda = rational_entry(*e);

  std::optional<std::int64_t> n;
  if (const Entry* e = get("n")) {
    std::optional<Rational> r;
    try {
      r = parse_rational(e->value);
    } catch (const Error&) {
    }
    if (!r || !r->is_integer() || r->sign() < 0) {
      error(e->line, e->value_column, "n must be a nonnegative integer");
    } else if (*r > Rational(static_cast<long>(max_n_))) {
      error(e->line, e->value_column, "n must be at most " + std::to_string(max_n_));
    } else {
      n = static_cast<std::int64_t>(r->numerator().get_si());
    }
  }

  std::optional<Window> win;
  const Entry* window_entry = get("window");
  if (window_entry) win = window(*window_entry);
  if (win && n && win->length < *n + 5) {
    error(window_entry->line, window_entry->value_column,
          "window must hold at least n + 5 = " + std::to_string(*n + 5) + " points (has " +
              std::to_string(win->length) + ")");
  }

  std::optional<HalfInt> sum_base;
  if (const Entry* e = get("sum_base")) {
    sum_base = half_int(e->value, e->line, e->value_column, "sum_base");
    if (sum_base && win) {
      const HalfInt limit = win->start - 1;
      const auto steps = unit_steps(*sum_base, limit);
      if (!steps || *steps < 0) {
        error(e->line, e->value_column,
              "sum_base must lie at or left of window start - 1 = " + limit.str() + " by whole steps");
        sum_base.reset();
      }
    }
  }

  std::optional<std::vector<Rational>> P;
  if (const Entry* e = get("P")) {
    P = list(*e, std::nullopt);
    if (P && n && P->size() != static_cast<std::size_t>(*n + 1)) {
      error(e->line, e->value_column,
            "P must have n + 1 = " + std::to_string(*n + 1) + " coefficients, got " + std::to_string(P->size()));
    }
  }

  Backend backend = Backend::exact;
  if (const Entry* e = get("backend")) {
    if (e->value == "exact") {
      backend = Backend::exact;
    } else if (e->value == "approx") {
      backend = Backend::approx;
    } else {
      error(e->line, e->value_column, "backend must be exact or approx");
    }
  }
  bool allow_degenerate = false;
  if (const Entry* e = get("allow_degenerate")) allow_degenerate = boolean(*e).value_or(false);

  if (has_errors()) return ParseResult{std::nullopt, std::move(diags_)};

  const Entry* lattice_entry = get("lattice");
  std::optional<Lattice> lattice;
  try {
    lattice = *family == LatticeFamily::q_quadratic ? Lattice::q_quadratic(*p, *c[0], *c[1], *c[2], allow_degenerate)
                                                    : Lattice::quadratic(*c[0], *c[1], *c[2], allow_degenerate);
  } catch (const Error& ex) {
    error(lattice_entry->line, lattice_entry->value_column, ex.what());
    return ParseResult{std::nullopt, std::move(diags_)};
  }
  if (!lattice->meets_strict_definition()) {
    warning(lattice_entry->line, lattice_entry->value_column,
            "lattice coefficients do not meet the strict nonuniformity condition");
  }

  ProblemSpec spec{*lattice,
                   {(*sigma)[0], (*sigma)[1], (*sigma)[2]},
                   {(*tau)[0], (*tau)[1]},
                   lambda,
                   *n,
                   *win,
                   sum_base,
                   P,
                   backend,
                   allow_degenerate};
  return ParseResult{std::move(spec), std::move(diags_)};
}

}  // namespace

HyperEquation ProblemSpec::equation() const {
  const HyperEquation eq(lattice, sigma, tau, 0);
  return eq.with_lambda(lambda ? *lambda : lambda_n<Rational>(eq, n));
}

std::string ParseDiagnostic::str() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         (severity == Severity::error ? "error: " : "warning: ") + message;
}

ParseResult parse_spec(std::string_view text, std::int64_t max_n) {
  try {
    return Parser(text, max_n).run();
  } catch (const std::exception& e) {
    return ParseResult{std::nullopt, {{1, 1, std::string("internal error: ") + e.what(), Severity::error}}};
  }
}

std::string render_spec(const ProblemSpec& spec) {
  std::ostringstream out;
  const Lattice& lat = spec.lattice;
  const auto& c = lat.coefficients();
  if (lat.family() == LatticeFamily::q_quadratic) {
    out << "lattice = qquadratic\n";
    out << "p = " << lat.p() << "\n";
    out << "c1 = " << c[0] << "\nc2 = " << c[1] << "\nc3 = " << c[2] << "\n";
  } else {
    out << "lattice = quadratic\n";
    out << "ct1 = " << c[0] << "\nct2 = " << c[1] << "\nct3 = " << c[2] << "\n";
  }
  out << "sigma = " << spec.sigma[0] << ", " << spec.sigma[1] << ", " << spec.sigma[2] << "\n";
  out << "tau = " << spec.tau[0] << ", " << spec.tau[1] << "\n";
  if (spec.lambda) out << "lambda = " << *spec.lambda << "\n";
  out << "n = " << spec.n << "\n";
  out << "window = " << spec.window.start.str() << ".." << spec.window.last().str() << "\n";
  if (spec.sum_base) out << "sum_base = " << spec.sum_base->str() << "\n";
  if (spec.P) {
    out << "P = ";
    for (std::size_t i = 0; i < spec.P->size(); ++i) out << (i ? ", " : "") << (*spec.P)[i];
    out << "\n";
  }
  if (spec.backend == Backend::approx) out << "backend = approx\n";
  if (spec.allow_degenerate) out << "allow_degenerate = true\n";
  return out.str();
}

}  // namespace hyperlat
