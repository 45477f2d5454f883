#pragma once

#include <map>
#include <string>

#include <json.hpp>

namespace gff {

enum class Verdict { kPass, kSoftPass, kFail };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kSoftPass: return "soft-pass";
    default: return "fail";
  }
}

/// Named statistic with its tolerance and verdict. "soft-pass" marks a missed
/// soft (advisory) criterion; "fail" is reserved for hard criteria.
struct TestReport {
  std::string name;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::kPass;
  long replicates = 0;
  std::map<std::string, double> extra;
  std::string note;

  nlohmann::json to_json() const {
    nlohmann::json j{{"name", name},
                     {"estimate", estimate},
                     {"stderr", stderr_},
                     {"tolerance", tolerance},
                     {"verdict", to_string(verdict)},
                     {"replicates", replicates}};
    if (!extra.empty()) j["extra"] = extra;
    if (!note.empty()) j["note"] = note;
    return j;
  }

  static Verdict judge(bool ok, bool hard) {
    if (ok) return Verdict::kPass;
    return hard ? Verdict::kFail : Verdict::kSoftPass;
  }
};

}  // namespace gff
