#include "ctoda/report.hpp"

#include <chrono>

namespace ctoda {

nlohmann::json SuiteReport::to_json(bool with_timestamp) const {
  nlohmann::json j;
  j["group"] = group;
  j["status"] = all_pass() ? "pass" : "fail";
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je;
    je["proposition_id"] = e.proposition_id;
    je["quote_anchor"] = e.quote_anchor;
    je["pairs_checked"] = e.pairs_checked;
    je["status"] = e.pass ? "pass" : "fail";
    if (!e.counterexample.is_null()) je["counterexample"] = e.counterexample;
    es.push_back(std::move(je));
  }
  j["entries"] = std::move(es);
  j["engine_metadata"] = engine_metadata;
  if (with_timestamp) {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  return j;
}

}  // namespace ctoda
