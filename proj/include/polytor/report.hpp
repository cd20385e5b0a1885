#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polytor {

struct Violation {
  std::string case_name;
  std::string detail;
};

// Outcome of a verification suite. Fails iff at least one violation was recorded.
struct Report {
  std::string suite;
  std::int64_t checked = 0;
  std::vector<Violation> violations;
  // Informational lines (conventions used, measured quantities); not part of the pass/fail verdict.
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
  std::string status() const { return passed() ? "pass" : "fail"; }

  void check(bool ok, const std::string& case_name, const std::string& detail = "") {
    ++checked;
    if (!ok) violations.push_back({case_name, detail});
  }
  void merge(const Report& other);

  std::string to_json(int indent = 2) const;
  std::string to_table() const;
  static Report from_json(const std::string& text);
};

}  // namespace polytor
