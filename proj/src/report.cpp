#include "fueterkit/report.hpp"

#include <iomanip>
#include <sstream>

namespace fueterkit {

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["algebra"] = r.algebra;
  if (!r.weights.empty()) j["weights"] = r.weights;
  j["order"] = r.order;
  j["status"] = r.pass ? "pass" : "fail";
  j["max_error"] = r.max_error;
  if (!r.details.empty()) j["witness"] = r.details;
  return j;
}

std::string render_table(const std::vector<CheckReport>& reports) {
  size_t wc = 5, wa = 7;
  for (auto& r : reports) {
    wc = std::max(wc, r.check.size());
    wa = std::max(wa, r.algebra.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(wc) + 2) << "check"
     << std::setw(static_cast<int>(wa) + 2) << "algebra" << std::setw(8) << "status"
     << "max_error\n";
  for (auto& r : reports) {
    os << std::left << std::setw(static_cast<int>(wc) + 2) << r.check
       << std::setw(static_cast<int>(wa) + 2) << r.algebra << std::setw(8)
       << (r.pass ? "pass" : "FAIL") << std::scientific << std::setprecision(3) << r.max_error
       << "\n";
  }
  return os.str();
}

Json suite_json(const Json& config, const std::vector<CheckReport>& reports) {
  Json j;
  j["schema"] = kReportSchema;
  j["config"] = config;
  Json checks = Json::array();
  int failed = 0;
  for (auto& r : reports) {
    checks.push_back(report_to_json(r));
    if (!r.pass) ++failed;
  }
  j["checks"] = checks;
  j["summary"] = Json{{"total", reports.size()}, {"failed", failed}};
  return j;
}

}  // namespace fueterkit
