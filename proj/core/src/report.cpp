#include "detgb/report.hpp"

namespace detgb {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::resource_limit: return "resource-limit";
  }
  return "unknown";
}

Json Report::to_json(bool include_timings) const {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["inputs"] = inputs;
  j["verdict"] = to_string(verdict);
  j["certificate"] = certificate;
  j["statistics"] = statistics;
  if (include_timings) {
    j["timings"] = Json{{"wall_ms", wall_ms}};
  }
  return j;
}

}  // namespace detgb
