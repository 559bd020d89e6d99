#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace pcalab {

enum class Verdict { Pass, Fail, Refused };

const char* to_string(Verdict v);

/// Outcome of one check. A failing report carries a counterexample and a
/// passing existential check carries its witnesses.
struct Report {
  std::string subject;
  std::string check;
  Verdict verdict = Verdict::Pass;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::string counterexample;
  std::string note;
  double elapsed_ms = 0.0;

  bool passed() const { return verdict == Verdict::Pass; }
  Report& witness(std::string name, std::string value) {
    witnesses.emplace_back(std::move(name), std::move(value));
    return *this;
  }
};

using Reports = std::vector<Report>;

Report pass(std::string subject, std::string check);
Report fail(std::string subject, std::string check, std::string counterexample);
Report refused(std::string subject, std::string check, std::string why);

bool all_pass(const Reports& rs);
const Report* find_check(const Reports& rs, const std::string& check);

/// Stamps every report in `rs` that has no timing yet with the time since
/// construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const;
  void stamp(Reports& rs) const;
  void stamp(Report& r) const;

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string format_text(const Report& r);
/// One JSON object, no trailing newline.
std::string format_machine(const Report& r, bool with_timing = true);

}  // namespace pcalab
