#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ctoda {

/// One verified statement. quote_anchor is a short human-readable label of
/// the identity being checked, e.g. "[g_Z, g_Zdag] in h".
struct CheckEntry {
  std::string proposition_id;
  std::string quote_anchor;
  long pairs_checked = 0;
  bool pass = true;
  nlohmann::json counterexample;  // null unless failed

  void fail(nlohmann::json ce) {
    pass = false;
    if (counterexample.is_null()) counterexample = std::move(ce);
  }
};

struct SuiteReport {
  std::string group;
  std::vector<CheckEntry> entries;
  nlohmann::json engine_metadata;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  void append(CheckEntry e) { entries.push_back(std::move(e)); }
  void append(std::vector<CheckEntry> es) {
    for (auto& e : es) entries.push_back(std::move(e));
  }
  nlohmann::json to_json(bool with_timestamp = false) const;
};

}  // namespace ctoda
