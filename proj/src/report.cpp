#include "matcat/report.hpp"

#include <fmt/format.h>

#include <array>
#include <map>
#include "json.hpp"

namespace matcat {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

void Report::pass(const std::string& check, long instances, std::string details) {
  entries.push_back({check, Status::Pass, {}, std::move(details), instances});
}

void Report::fail(const std::string& check, std::vector<int> locus, std::string details) {
  entries.push_back({check, Status::Fail, std::move(locus), std::move(details), 1});
}

void Report::skip(const std::string& check, std::string details) {
  entries.push_back({check, Status::Skipped, {}, std::move(details), 0});
}

void Report::merge(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool Report::ok() const { return violations() == 0; }

std::size_t Report::violations() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.status == Status::Fail) ++n;
  return n;
}

std::size_t Report::count(const std::string& check, Status s) const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.check == check && e.status == s) ++n;
  return n;
}

const CheckResult* Report::first_failure(const std::string& check) const {
  for (const auto& e : entries)
    if (e.check == check && e.status == Status::Fail) return &e;
  return nullptr;
}

std::string Report::json_lines() const {
  std::string out;
  for (const auto& e : entries) {
    nlohmann::json j;
    j["check"] = e.check;
    j["status"] = status_name(e.status);
    if (e.status == Status::Fail) j["locus"] = e.locus;
    if (e.status == Status::Pass) j["instances"] = e.instances;
    if (!e.details.empty()) j["details"] = e.details;
    out += j.dump() + "\n";
  }
  return out;
}

std::string Report::summary() const {
  // check -> (passed instances, failures, skipped)
  std::map<std::string, std::array<long, 3>> rows;
  std::vector<std::string> order;
  for (const auto& e : entries) {
    if (!rows.count(e.check)) order.push_back(e.check);
    auto& r = rows[e.check];
    if (e.status == Status::Pass) r[0] += e.instances;
    if (e.status == Status::Fail) r[1] += 1;
    if (e.status == Status::Skipped) r[2] += 1;
  }
  std::string out = fmt::format("{:<24} {:>9} {:>9} {:>8}\n", "check", "passed", "failed", "skipped");
  for (const auto& name : order) {
    const auto& r = rows[name];
    out += fmt::format("{:<24} {:>9} {:>9} {:>8}\n", name, r[0], r[1], r[2]);
  }
  out += fmt::format("{} violation(s)\n", violations());
  return out;
}

}  // namespace matcat
