#pragma once

#include <string>
#include <vector>

namespace matcat {

enum class Status { Pass, Fail, Skipped };

// One line of a validation report. Loci are 1-based.
struct CheckResult {
  std::string check;
  Status status = Status::Pass;
  std::vector<int> locus;
  std::string details;
  long instances = 0;
};

struct Report {
  std::vector<CheckResult> entries;

  void pass(const std::string& check, long instances, std::string details = {});
  void fail(const std::string& check, std::vector<int> locus, std::string details);
  void skip(const std::string& check, std::string details);
  void merge(const Report& other);

  bool ok() const;
  std::size_t violations() const;
  std::size_t count(const std::string& check, Status s) const;
  bool has_failure(const std::string& check) const { return count(check, Status::Fail) > 0; }
  // first failing entry for a check, or nullptr
  const CheckResult* first_failure(const std::string& check) const;

  std::string json_lines() const;
  std::string summary() const;
};

const char* status_name(Status s);

}  // namespace matcat
