#include "qverify/report.hpp"

namespace qverify {

std::optional<std::string> renderCapped(const Poly& p, std::size_t maxChars) {
  // Every nonzero term renders to at least one character.
  if (p.termSpan() > maxChars) return std::nullopt;
  std::string text = toString(p);
  if (text.size() > maxChars) return std::nullopt;
  return text;
}

nlohmann::ordered_json toJson(const IdentityReport& report) {
  auto optional = [](const auto& value) -> nlohmann::ordered_json {
    if (value) return *value;
    return nullptr;
  };
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params) params[key] = value;

  nlohmann::ordered_json out;
  out["identityId"] = report.identityId;
  out["params"] = std::move(params);
  out["passed"] = report.passed;
  out["lhs"] = optional(report.lhs);
  out["rhs"] = optional(report.rhs);
  out["firstMismatchExp"] = optional(report.firstMismatchExp);
  out["negativeWitness"] = optional(report.negativeWitness);
  out["elapsedMillis"] = report.elapsedMillis;
  if (report.cap) {
    out["cap"] = *report.cap;
    out["notes"] = report.notes;
  }
  return out;
}

}  // namespace qverify
