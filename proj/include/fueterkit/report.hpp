#pragma once

#include <string>
#include <vector>

#include "fueterkit/io.hpp"

namespace fueterkit {

inline constexpr const char* kReportSchema = "fueterkit-report/1";

struct CheckReport {
  std::string check;
  std::string algebra;
  std::string weights;
  int order = 0;
  bool pass = false;
  double max_error = 0;
  Json details = Json::object();
};

Json report_to_json(const CheckReport& r);
std::string render_table(const std::vector<CheckReport>& reports);

/// Wraps a report list in the versioned suite envelope.
Json suite_json(const Json& config, const std::vector<CheckReport>& reports);

}  // namespace fueterkit
