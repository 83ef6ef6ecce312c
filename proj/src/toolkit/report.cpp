#include "esakia/toolkit/report.hpp"

#include <cstdio>

namespace esakia {

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report::Report(std::string command, std::string_view input)
    : command_(std::move(command)), digest_(fnv1a64(input)) {}

void Report::add(std::string name, std::string anchor, bool pass, Json value, std::string detail) {
  verdicts_.push_back({std::move(name), std::move(anchor), pass, std::move(value), std::move(detail)});
}

bool Report::passed() const {
  for (const Verdict& v : verdicts_)
    if (!v.pass) return false;
  return true;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const Verdict& v : verdicts_)
    if (!v.pass) out.push_back(v.name);
  return out;
}

Json Report::to_json(bool with_timings) const {
  Json out;
  out["command"] = command_;
  out["digest"] = digest_;
  out["pass"] = passed();
  Json verdicts = Json::array();
  for (const Verdict& v : verdicts_) {
    Json e;
    e["name"] = v.name;
    e["anchor"] = v.anchor;
    e["pass"] = v.pass;
    e["value"] = v.value;
    if (!v.detail.empty()) e["detail"] = v.detail;
    verdicts.push_back(std::move(e));
  }
  out["verdicts"] = std::move(verdicts);
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [name, seconds] : timings_) t[name] = seconds;
    out["timings"] = std::move(t);
  }
  out["data"] = data_;
  return out;
}

}  // namespace esakia
