#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esakia/toolkit/documents.hpp"

namespace esakia {

/// One named check. `pass` says whether the property held; `value` carries
/// what was measured, which for recognizers (is it a tree?) may be false on a
/// passing verdict.
struct Verdict {
  std::string name;
  std::string anchor;  // the property family the verdict belongs to
  bool pass = true;
  Json value;
  std::string detail;
};

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

class Report {
 public:
  Report() = default;
  /// The digest is taken over `input`, usually the document text.
  Report(std::string command, std::string_view input);

  void add(std::string name, std::string anchor, bool pass, Json value = nullptr,
           std::string detail = {});
  void add(Verdict v) { verdicts_.push_back(std::move(v)); }
  void time(std::string name, double seconds) { timings_.emplace_back(std::move(name), seconds); }

  /// Runs f and records its wall time under `name`.
  template <typename F>
  decltype(auto) timed(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    struct Stop {
      Report& r;
      const std::string& name;
      std::chrono::steady_clock::time_point start;
      ~Stop() {
        r.time(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      }
    } stop{*this, name, start};
    return f();
  }

  const std::string& command() const { return command_; }
  const std::string& digest() const { return digest_; }
  const std::vector<Verdict>& verdicts() const { return verdicts_; }
  Json& data() { return data_; }
  const Json& data() const { return data_; }
  bool passed() const;
  std::vector<std::string> failures() const;

  /// {"command","digest","pass","verdicts":[...],"timings":{...},"data":{...}}
  Json to_json(bool with_timings = true) const;

 private:
  std::string command_;
  std::string digest_;
  std::vector<Verdict> verdicts_;
  std::vector<std::pair<std::string, double>> timings_;
  Json data_ = Json::object();
};

}  // namespace esakia
