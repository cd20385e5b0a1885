#include "polytor/report.hpp"

#include <json.hpp>

#include <sstream>

namespace polytor {

void Report::merge(const Report& other) {
  checked += other.checked;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string Report::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["status"] = status();
  j["checked"] = checked;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) j["violations"].push_back({{"case", v.case_name}, {"detail", v.detail}});
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(indent);
}

std::string Report::to_table() const {
  std::ostringstream os;
  os << "suite    " << suite << "\n";
  os << "status   " << status() << "\n";
  os << "checked  " << checked << "\n";
  os << "violations " << violations.size() << "\n";
  for (const auto& v : violations) os << "  " << v.case_name << " : " << v.detail << "\n";
  for (const auto& n : notes) os << "note     " << n << "\n";
  return os.str();
}

Report Report::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.checked = j.at("checked").get<std::int64_t>();
  for (const auto& v : j.at("violations")) r.violations.push_back({v.at("case"), v.at("detail")});
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace polytor
