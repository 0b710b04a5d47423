#include "heunterm/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace heunterm::report {

std::string double17(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string escape_string(const std::string& s) {
  // Reuse the library's escaping by dumping a standalone string value.
  return json(s).dump();
}

void dump_impl(const json& j, std::string& out, int indent, int level) {
  const std::string pad = indent < 0 ? "" : std::string(static_cast<std::size_t>(indent * (level + 1)), ' ');
  const std::string close_pad = indent < 0 ? "" : std::string(static_cast<std::size_t>(indent * level), ' ');
  const char* nl = indent < 0 ? "" : "\n";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += escape_string(item.key());
        out += indent < 0 ? ":" : ": ";
        dump_impl(item.value(), out, indent, level + 1);
      }
      out += nl;
      out += close_pad;
      out += "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      bool first = true;
      for (const auto& item : j) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        dump_impl(item, out, indent, level + 1);
      }
      out += nl;
      out += close_pad;
      out += "]";
      return;
    }
    case json::value_t::number_float:
      out += double17(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump(const json& j, int indent) {
  std::string out;
  dump_impl(j, out, indent, 0);
  if (indent >= 0) out += "\n";
  return out;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json complex_list_json(const std::vector<Complex>& v) {
  json arr = json::array();
  for (const Complex& z : v) arr.push_back(complex_json(z));
  return arr;
}

json verification_json(const SolutionVerification& v, const VerificationThresholds& thr) {
  return json{{"closure_next", v.closure_next},
              {"closure_next2", v.closure_next2},
              {"eigenvector_residual", v.eigenvector_residual},
              {"max_ode_residual", v.max_ode_residual},
              {"oracle_max_deviation", v.oracle_max_deviation},
              {"ode_points", v.ode_points},
              {"pass", v.pass(thr)}};
}

namespace {

json pfq_json(const PFqSpec& spec) {
  json upper = json::array();
  for (const Complex& u : spec.upper) upper.push_back(complex_json(u));
  json lower = json::array();
  for (const Complex& l : spec.lower) lower.push_back(complex_json(l));
  return json{{"upper", upper},
              {"lower", lower},
              {"omega", complex_json(spec.omega)},
              {"augmented_pairs", spec.augmented_pairs}};
}

template <class Term>
json termination_json_impl(const Term& t) {
  json a_coeff = json::array();
  for (const Complex& c : t.a_poly.coefficients()) a_coeff.push_back(complex_json(c));
  return json{{"order", t.order},
              {"q", complex_json(t.chosen_q)},
              {"q_admissible", complex_list_json(t.q_admissible)},
              {"d", complex_list_json(t.d)},
              {"a_poly", a_coeff},
              {"e", complex_list_json(t.e)},
              {"pfq", pfq_json(t.solution)},
              {"reduced_order", t.reduced_order},
              {"effective_order", t.effective_order}};
}

}  // namespace

json termination_json(const general::Termination& t) { return termination_json_impl(t); }

json termination_json(const confluent::Termination& t) { return termination_json_impl(t); }

std::string csv_field(const std::string& raw) {
  const bool needs_quote = raw.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quote) return raw;
  std::string out = "\"";
  for (const char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  bool first = true;
  for (const std::string& f : fields) {
    if (!first) out << ",";
    first = false;
    out << csv_field(f);
  }
  out << "\r\n";
}

}  // namespace heunterm::report
