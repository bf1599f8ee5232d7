#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace detgb {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, inconclusive, resource_limit };

std::string to_string(Verdict v);

// Machine-readable verification result. Serializes deterministically: keys
// in insertion order, no floating-point noise except the optional timing
// block, which callers can drop for byte-stable comparisons.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Verdict verdict = Verdict::pass;
  Json certificate = Json::object();
  Json statistics = Json::object();
  double wall_ms = 0.0;

  Json to_json(bool include_timings = true) const;

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

}  // namespace detgb
