#include "heunterm/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "heunterm/report.hpp"

namespace heunterm::cli {

namespace {

using report::json;

double parse_double_strict(std::string s, const std::string& what) {
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw DomainError("cannot parse '" + what + "' as a number");
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (const char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw DomainError("empty complex literal");
  const char tail = s.back();
  if (tail != 'j' && tail != 'J') return Complex(parse_double_strict(s, text));
  s.pop_back();  // imaginary part present
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }
  std::string re_str, im_str;
  if (split == std::string::npos) {
    im_str = s;
  } else {
    re_str = s.substr(0, split);
    im_str = s.substr(split);
  }
  double im;
  if (im_str.empty() || im_str == "+") im = 1.0;
  else if (im_str == "-") im = -1.0;
  else im = parse_double_strict(im_str, text);
  const double re = re_str.empty() ? 0.0 : parse_double_strict(re_str, text);
  return {re, im};
}

namespace {

constexpr const char* kSchema = "heunterm/1";

std::string format_complex17(Complex z) {
  std::string s = report::double17(z.real());
  if (z.imag() != 0.0) {
    const std::string im = report::double17(z.imag());
    if (!im.empty() && im.front() != '-') s += "+";
    s += im + "j";
  }
  return s;
}

Complex json_to_complex(const json& v, const std::string& name) {
  if (v.is_number()) return Complex(v.get<double>());
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_object()) {
    const double re = v.contains("re") ? v.at("re").get<double>() : 0.0;
    const double im = v.contains("im") ? v.at("im").get<double>() : 0.0;
    return {re, im};
  }
  throw DomainError("parameter '" + name + "' must be a number, string, or {re, im} object");
}

// Raw option state shared by the solve and eval commands.
struct ParameterFlags {
  std::string equation;
  int order = 0;
  bool order_set = false;
  std::string request_path;
  std::string a, alpha, beta, gamma, delta, epsilon;
  double tol = 1e-14;
  bool tol_set = false;
  int max_terms = 10000;
  bool max_terms_set = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

struct OutputFlags {
  std::string format = "json";
  std::string out_path;
};

void add_parameter_options(CLI::App* cmd, ParameterFlags& p) {
  cmd->add_option("--equation", p.equation, "general or confluent");
  cmd->add_option("-N,--order", p.order, "termination order (last kept coefficient index)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--request", p.request_path, "JSON request file; flags override its fields");
  cmd->add_option("--a", p.a, "third finite singular point (general equation)");
  cmd->add_option("--alpha", p.alpha);
  cmd->add_option("--beta", p.beta, "(general equation)");
  cmd->add_option("--gamma", p.gamma);
  cmd->add_option("--delta", p.delta, "constrained; may be omitted");
  cmd->add_option("--epsilon", p.epsilon, "general: constrained to -N; confluent: free, nonzero");
  cmd->add_option("--tol", p.tol, "relative series tolerance");
  cmd->add_option("--max-terms", p.max_terms)->check(CLI::PositiveNumber);
  cmd->add_option("--seed", p.seed, "seed for verification sample grids");
}

void add_output_options(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
}

void mark_counts(CLI::App* cmd, ParameterFlags& p) {
  p.order_set = cmd->count("--order") > 0;
  p.tol_set = cmd->count("--tol") > 0;
  p.max_terms_set = cmd->count("--max-terms") > 0;
  p.seed_set = cmd->count("--seed") > 0;
}

std::optional<Complex> resolve_param(const std::string& flag_value, const json& request,
                                     const char* key) {
  if (!flag_value.empty()) return parse_complex(flag_value);
  if (request.contains("parameters") && request.at("parameters").contains(key))
    return json_to_complex(request.at("parameters").at(key), key);
  return std::nullopt;
}

Complex require_param(const std::optional<Complex>& v, const char* key) {
  if (!v) throw DomainError(std::string("missing required parameter '") + key + "'");
  return *v;
}

void forbid_param(const std::optional<Complex>& v, const char* key, const char* equation) {
  if (v)
    throw DomainError(std::string("parameter '") + key + "' does not apply to the " + equation +
                      " equation");
}

SolveRequest build_request(const ParameterFlags& p) {
  json request = json::object();
  if (!p.request_path.empty()) {
    std::ifstream in(p.request_path);
    if (!in) throw DomainError("cannot open request file '" + p.request_path + "'");
    try {
      in >> request;
    } catch (const json::parse_error& err) {
      throw DomainError(std::string("request file is not valid JSON: ") + err.what());
    }
  }

  SolveRequest req;

  std::string equation = p.equation;
  if (equation.empty() && request.contains("equation"))
    equation = request.at("equation").get<std::string>();
  if (equation == "general") req.equation = Equation::general;
  else if (equation == "confluent") req.equation = Equation::confluent;
  else if (equation.empty()) throw DomainError("missing --equation (general or confluent)");
  else throw DomainError("unknown equation '" + equation + "'");

  if (p.order_set) req.order = p.order;
  else if (request.contains("order")) req.order = request.at("order").get<int>();
  else throw DomainError("missing --order");
  if (req.order < 0) throw DomainError("order must be >= 0");

  if (request.contains("window")) {
    const json& w = request.at("window");
    if (w.contains("max_terms")) req.window.max_terms = w.at("max_terms").get<int>();
    if (w.contains("rel_tol")) req.window.rel_tol = w.at("rel_tol").get<double>();
    if (w.contains("abs_tol")) req.window.abs_tol = w.at("abs_tol").get<double>();
  }
  if (p.tol_set) {
    req.window.rel_tol = p.tol;
    req.window.abs_tol = p.tol * 1e-2;
  }
  if (p.max_terms_set) req.window.max_terms = p.max_terms;
  req.window.validate();

  if (p.seed_set) req.seed = p.seed;
  else if (request.contains("seed")) req.seed = request.at("seed").get<std::uint64_t>();

  const auto a = resolve_param(p.a, request, "a");
  const auto alpha = resolve_param(p.alpha, request, "alpha");
  const auto beta = resolve_param(p.beta, request, "beta");
  const auto gamma = resolve_param(p.gamma, request, "gamma");
  const auto delta = resolve_param(p.delta, request, "delta");
  const auto epsilon = resolve_param(p.epsilon, request, "epsilon");
  const Complex order_value(-static_cast<double>(req.order));

  if (req.equation == Equation::general) {
    const Complex va = require_param(a, "a");
    const Complex valpha = require_param(alpha, "alpha");
    const Complex vbeta = require_param(beta, "beta");
    const Complex vgamma = require_param(gamma, "gamma");
    if (epsilon) {
      if (std::abs(*epsilon - order_value) > 1e-12)
        throw DomainError("terminating expansions of this order need epsilon = " +
                          report::double17(order_value.real()));
    } else {
      req.notes.push_back("epsilon defaulted to " + report::double17(order_value.real()));
    }
    req.general = general_params(va, Complex(0.0), valpha, vbeta, vgamma, order_value);
    if (delta) {
      if (std::abs(*delta - req.general.delta) > 1e-12)
        throw DomainError("delta conflicts with the exponent-sum constraint; expected " +
                          format_complex17(req.general.delta));
    } else {
      req.notes.push_back("delta derived from the exponent-sum constraint: " +
                          format_complex17(req.general.delta));
    }
  } else {
    forbid_param(a, "a", "confluent");
    forbid_param(beta, "beta", "confluent");
    const Complex valpha = require_param(alpha, "alpha");
    const Complex vgamma = require_param(gamma, "gamma");
    const Complex vepsilon = require_param(epsilon, "epsilon");
    if (delta) {
      if (std::abs(*delta - order_value) > 1e-12)
        throw DomainError("terminating expansions of this order need delta = " +
                          report::double17(order_value.real()));
    } else {
      req.notes.push_back("delta defaulted to " + report::double17(order_value.real()));
    }
    req.confluent = confluent_params(Complex(0.0), valpha, vgamma, order_value, vepsilon);
  }
  return req;
}

json window_json(const SeriesWindow& w) {
  return json{{"max_terms", w.max_terms}, {"rel_tol", w.rel_tol}, {"abs_tol", w.abs_tol}};
}

json request_json(const SolveRequest& req) {
  json parameters;
  if (req.equation == Equation::general) {
    parameters = json{{"a", report::complex_json(req.general.a)},
                      {"alpha", report::complex_json(req.general.alpha)},
                      {"beta", report::complex_json(req.general.beta)},
                      {"gamma", report::complex_json(req.general.gamma)},
                      {"delta", report::complex_json(req.general.delta)},
                      {"epsilon", report::complex_json(req.general.epsilon)}};
  } else {
    parameters = json{{"alpha", report::complex_json(req.confluent.alpha)},
                      {"gamma", report::complex_json(req.confluent.gamma)},
                      {"delta", report::complex_json(req.confluent.delta)},
                      {"epsilon", report::complex_json(req.confluent.epsilon)}};
  }
  return json{{"equation", req.equation == Equation::general ? "general" : "confluent"},
              {"order", req.order},
              {"parameters", parameters},
              {"window", window_json(req.window)},
              {"seed", req.seed},
              {"notes", req.notes}};
}

void emit(const std::string& text, const OutputFlags& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + o.out_path + "'");
  f << text;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---- solve ----

struct SolvedSet {
  std::vector<general::Termination> general;
  std::vector<confluent::Termination> confluent;
  std::vector<SolutionVerification> checks;
  bool is_general = false;

  std::size_t size() const { return is_general ? general.size() : confluent.size(); }
};

SolvedSet solve_request(const SolveRequest& req) {
  SolvedSet s;
  s.is_general = req.equation == Equation::general;
  const std::uint64_t grid_seed = req.seed ^ kDefaultGridSeed;
  if (s.is_general) {
    s.general = general::terminate(req.general, req.order);
    for (const general::Termination& t : s.general)
      s.checks.push_back(verify_solution(t, req.window, grid_seed));
  } else {
    s.confluent = confluent::terminate(req.confluent, req.order);
    for (const confluent::Termination& t : s.confluent)
      s.checks.push_back(verify_solution(t, req.window, grid_seed));
  }
  return s;
}

int run_solve(const ParameterFlags& p, const OutputFlags& o, std::ostream& out) {
  const SolveRequest req = build_request(p);
  const SolvedSet s = solve_request(req);
  const VerificationThresholds thr{};
  bool all_pass = true;
  for (const SolutionVerification& v : s.checks) all_pass = all_pass && v.pass(thr);

  if (o.format == "json") {
    json solutions = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      json t = s.is_general ? report::termination_json(s.general[i])
                            : report::termination_json(s.confluent[i]);
      t["solution_index"] = i;
      t["verification"] = report::verification_json(s.checks[i], thr);
      solutions.push_back(std::move(t));
    }
    const json body{{"schema", kSchema},       {"command", "solve"},
                    {"request", request_json(req)}, {"solutions", solutions},
                    {"all_pass", all_pass}};
    emit(report::dump(body), o, out);
  } else {
    std::ostringstream csv;
    report::csv_row(csv, {"solution_index", "order", "q_re", "q_im", "reduced_order",
                          "effective_order", "closure_next", "closure_next2",
                          "eigenvector_residual", "max_ode_residual", "oracle_max_deviation",
                          "pass"});
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Complex q = s.is_general ? s.general[i].chosen_q : s.confluent[i].chosen_q;
      const bool reduced = s.is_general ? s.general[i].reduced_order : s.confluent[i].reduced_order;
      const int eff = s.is_general ? s.general[i].effective_order : s.confluent[i].effective_order;
      const SolutionVerification& v = s.checks[i];
      report::csv_row(csv, {std::to_string(i), std::to_string(req.order),
                            report::double17(q.real()), report::double17(q.imag()),
                            bool_str(reduced), std::to_string(eff),
                            report::double17(v.closure_next), report::double17(v.closure_next2),
                            report::double17(v.eigenvector_residual),
                            report::double17(v.max_ode_residual),
                            report::double17(v.oracle_max_deviation), bool_str(v.pass(thr))});
    }
    emit(csv.str(), o, out);
  }
  return all_pass ? 0 : 1;
}

// ---- eval ----

struct EvalFlags {
  std::vector<std::string> z_values;
  double grid_start = 0.0, grid_stop = 0.0;
  int grid_count = 10;
  bool grid_set = false;
  int solution_index = -1;  // -1 = all
  std::string q_select;
  bool serial = false;
};

std::vector<Complex> eval_points(const EvalFlags& e, Equation equation) {
  std::vector<Complex> pts;
  if (!e.z_values.empty()) {
    for (const std::string& zs : e.z_values) pts.push_back(parse_complex(zs));
    return pts;
  }
  double start = e.grid_start, stop = e.grid_stop;
  int count = e.grid_count;
  if (!e.grid_set) {
    start = equation == Equation::general ? -0.8 : -3.0;
    stop = -start;
  }
  if (count < 1) throw DomainError("grid count must be >= 1");
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    pts.emplace_back(start + (stop - start) * t, 0.0);
  }
  return pts;
}

std::vector<std::size_t> select_solutions(const EvalFlags& e, const SolvedSet& s) {
  if (!e.q_select.empty()) {
    const Complex want = parse_complex(e.q_select);
    std::size_t best = 0;
    double best_dist = 1e300;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Complex q = s.is_general ? s.general[i].chosen_q : s.confluent[i].chosen_q;
      const double dist = std::abs(q - want);
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    const Complex q = s.is_general ? s.general[best].chosen_q : s.confluent[best].chosen_q;
    if (best_dist > 1e-6 * std::max(1.0, std::abs(q)))
      throw DomainError("--q does not match any admissible accessory parameter");
    return {best};
  }
  if (e.solution_index >= 0) {
    if (static_cast<std::size_t>(e.solution_index) >= s.size())
      throw DomainError("--solution-index out of range");
    return {static_cast<std::size_t>(e.solution_index)};
  }
  std::vector<std::size_t> all(s.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

int run_eval(const ParameterFlags& p, const EvalFlags& e, const OutputFlags& o,
             std::ostream& out) {
  const SolveRequest req = build_request(p);
  const SolvedSet s = solve_request(req);
  const std::vector<Complex> pts = eval_points(e, req.equation);

  json solutions = json::array();
  std::ostringstream csv;
  if (o.format == "csv")
    report::csv_row(csv, {"solution_index", "z_re", "z_im", "phi_re", "phi_im", "dphi_re",
                          "dphi_im", "d2phi_re", "d2phi_im", "ode_residual", "singular",
                          "outside_disk"});

  for (const std::size_t i : select_solutions(e, s)) {
    const std::vector<GridPoint> grid =
        s.is_general
            ? (e.serial ? evaluate_grid_serial(s.general[i], pts, req.window)
                        : evaluate_grid_parallel(s.general[i], pts, req.window))
            : (e.serial ? evaluate_grid_serial(s.confluent[i], pts, req.window)
                        : evaluate_grid_parallel(s.confluent[i], pts, req.window));
    const Complex q = s.is_general ? s.general[i].chosen_q : s.confluent[i].chosen_q;
    if (o.format == "json") {
      json rows = json::array();
      for (const GridPoint& gp : grid) {
        json row{{"z", report::complex_json(gp.z)},
                 {"singular", gp.singular},
                 {"outside_disk", gp.outside_disk}};
        if (gp.evaluated) {
          row["phi"] = report::complex_json(gp.phi);
          row["dphi"] = report::complex_json(gp.dphi);
          row["d2phi"] = report::complex_json(gp.d2phi);
        } else {
          row["phi"] = nullptr;
          row["dphi"] = nullptr;
          row["d2phi"] = nullptr;
        }
        if (gp.evaluated && !gp.singular && !gp.outside_disk)
          row["ode_residual"] = gp.ode_residual;
        else
          row["ode_residual"] = nullptr;
        rows.push_back(std::move(row));
      }
      solutions.push_back(json{{"solution_index", i},
                               {"q", report::complex_json(q)},
                               {"points", rows}});
    } else {
      for (const GridPoint& gp : grid) {
        std::vector<std::string> row{std::to_string(i), report::double17(gp.z.real()),
                                     report::double17(gp.z.imag())};
        if (gp.evaluated) {
          row.push_back(report::double17(gp.phi.real()));
          row.push_back(report::double17(gp.phi.imag()));
          row.push_back(report::double17(gp.dphi.real()));
          row.push_back(report::double17(gp.dphi.imag()));
          row.push_back(report::double17(gp.d2phi.real()));
          row.push_back(report::double17(gp.d2phi.imag()));
        } else {
          for (int blank = 0; blank < 6; ++blank) row.emplace_back();
        }
        row.push_back(gp.evaluated && !gp.singular && !gp.outside_disk
                          ? report::double17(gp.ode_residual)
                          : std::string());
        row.push_back(bool_str(gp.singular));
        row.push_back(bool_str(gp.outside_disk));
        report::csv_row(csv, row);
      }
    }
  }

  if (o.format == "json") {
    const json body{{"schema", kSchema},           {"command", "eval"},
                    {"request", request_json(req)}, {"solutions", solutions}};
    emit(report::dump(body), o, out);
  } else {
    emit(csv.str(), o, out);
  }
  return 0;
}

// ---- verify ----

struct VerifyFlags {
  std::string equation = "general";
  int n_min = 0;
  int n_max = 2;
  int trials = 50;
  std::uint64_t seed = 0;
  bool serial = false;
  double tol = 1e-14;
  bool tol_set = false;
  int max_terms = 10000;
  bool max_terms_set = false;
};

int run_verify(const VerifyFlags& f, const OutputFlags& o, std::ostream& out) {
  SweepConfig cfg;
  if (f.equation == "general") cfg.equation = Equation::general;
  else if (f.equation == "confluent") cfg.equation = Equation::confluent;
  else throw DomainError("unknown equation '" + f.equation + "'");
  cfg.n_min = f.n_min;
  cfg.n_max = f.n_max;
  cfg.trials_per_order = f.trials;
  cfg.seed = f.seed;
  if (f.tol_set) {
    cfg.window.rel_tol = f.tol;
    cfg.window.abs_tol = f.tol * 1e-2;
  }
  if (f.max_terms_set) cfg.window.max_terms = f.max_terms;
  cfg.validate();

  const std::vector<TrialRecord> records =
      f.serial ? run_sweep_serial(cfg) : run_sweep_parallel(cfg);
  const SweepSummary summary = summarize_sweep(records);

  if (o.format == "json") {
    json orders = json::array();
    for (const OrderSummary& row : summary.orders) {
      orders.push_back(json{{"order", row.order},
                            {"trials", row.trials},
                            {"passed", row.passed},
                            {"failed", row.failed},
                            {"degenerate", row.degenerate},
                            {"worst", report::verification_json(row.worst, cfg.thresholds)}});
    }
    const json body{{"schema", kSchema},
                    {"command", "verify"},
                    {"equation", f.equation},
                    {"n_min", cfg.n_min},
                    {"n_max", cfg.n_max},
                    {"trials_per_order", cfg.trials_per_order},
                    {"seed", cfg.seed},
                    {"orders", orders},
                    {"totals", json{{"passed", summary.passed},
                                    {"failed", summary.failed},
                                    {"degenerate", summary.degenerate}}},
                    {"all_pass", summary.all_pass()}};
    emit(report::dump(body), o, out);
  } else {
    std::ostringstream csv;
    report::csv_row(csv, {"order", "trials", "passed", "failed", "degenerate", "worst_closure",
                          "worst_eigenvector", "worst_ode", "worst_oracle"});
    for (const OrderSummary& row : summary.orders) {
      report::csv_row(csv,
                      {std::to_string(row.order), std::to_string(row.trials),
                       std::to_string(row.passed), std::to_string(row.failed),
                       std::to_string(row.degenerate),
                       report::double17(std::max(row.worst.closure_next, row.worst.closure_next2)),
                       report::double17(row.worst.eigenvector_residual),
                       report::double17(row.worst.max_ode_residual),
                       report::double17(row.worst.oracle_max_deviation)});
    }
    emit(csv.str(), o, out);
  }
  return summary.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"terminating hypergeometric expansions of Heun-class equations"};
  app.require_subcommand(1);

  ParameterFlags solve_p, eval_p;
  OutputFlags solve_o, eval_o, verify_o;
  EvalFlags eval_e;
  VerifyFlags verify_f;

  CLI::App* solve = app.add_subcommand(
      "solve", "compute the admissible accessory parameters and expansions");
  add_parameter_options(solve, solve_p);
  add_output_options(solve, solve_o);

  CLI::App* eval = app.add_subcommand("eval", "evaluate terminating solutions on z points");
  add_parameter_options(eval, eval_p);
  add_output_options(eval, eval_o);
  eval->add_option("--z", eval_e.z_values, "evaluation point, repeatable (re or re+imj)");
  eval->add_option("--grid-start", eval_e.grid_start);
  eval->add_option("--grid-stop", eval_e.grid_stop);
  eval->add_option("--grid-count", eval_e.grid_count)->check(CLI::PositiveNumber);
  eval->add_option("--solution-index", eval_e.solution_index,
                   "evaluate only this solution (default: all)");
  eval->add_option("--q", eval_e.q_select, "select the solution with this accessory parameter");
  eval->add_flag("--serial", eval_e.serial, "force the serial evaluation path");

  CLI::App* verify = app.add_subcommand("verify", "randomized self-verification sweep");
  verify->add_option("--equation", verify_f.equation)
      ->check(CLI::IsMember({"general", "confluent"}));
  verify->add_option("--n-min", verify_f.n_min)->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", verify_f.n_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", verify_f.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_f.seed);
  verify->add_option("--tol", verify_f.tol);
  verify->add_option("--max-terms", verify_f.max_terms)->check(CLI::PositiveNumber);
  verify->add_flag("--serial", verify_f.serial, "run the reference serial sweep");
  add_output_options(verify, verify_o);

  std::vector<const char*> argv;
  argv.push_back("heunterm");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) {
      mark_counts(solve, solve_p);
      return run_solve(solve_p, solve_o, out);
    }
    if (eval->parsed()) {
      mark_counts(eval, eval_p);
      eval_e.grid_set = eval->count("--grid-start") > 0 || eval->count("--grid-stop") > 0;
      return run_eval(eval_p, eval_e, eval_o, out);
    }
    verify_f.tol_set = verify->count("--tol") > 0;
    verify_f.max_terms_set = verify->count("--max-terms") > 0;
    return run_verify(verify_f, verify_o, out);
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace heunterm::cli
