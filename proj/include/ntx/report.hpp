#pragma once

#include <string>
#include <vector>

namespace ntx {

enum class Verdict { pass, fail, skipped, info };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    case Verdict::info: return "info";
  }
  return "?";
}

/// One check as it appears in reports. A failure carries witnesses, a skip carries its reason in hypotheses.
struct CheckRecord {
  std::string name;
  std::string anchor;      ///< the statement under test, paraphrased
  std::string hypotheses;  ///< hypothesis status or skip reason
  Verdict verdict = Verdict::info;
  std::vector<std::string> witnesses;
  std::vector<std::string> facts;
  double runtime_ms = 0;
};

}  // namespace ntx
