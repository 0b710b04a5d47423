#ifndef HEUNTERM_REPORT_HPP_
#define HEUNTERM_REPORT_HPP_

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "heunterm/sweep.hpp"
#include "heunterm/verification.hpp"

namespace heunterm::report {

using json = nlohmann::json;

/// Shortest-faithful decimal for a double (printf %.17g trimmed is not used;
/// a fixed 17-significant-digit form keeps reports byte-identical).
std::string double17(double v);

/// Deterministic JSON dump: keys in sorted order (nlohmann's default map),
/// floating point numbers rendered by double17. indent < 0 means compact.
std::string dump(const json& j, int indent = 2);

json complex_json(Complex z);
json complex_list_json(const std::vector<Complex>& v);
json verification_json(const SolutionVerification& v, const VerificationThresholds& thr);
json termination_json(const general::Termination& t);
json termination_json(const confluent::Termination& t);

/// RFC 4180 field quoting; applied only when the field needs it.
std::string csv_field(const std::string& raw);
void csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace heunterm::report

#endif  // HEUNTERM_REPORT_HPP_
