#include "pcalab/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace pcalab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Refused:
      return "refused";
  }
  return "?";
}

Report pass(std::string subject, std::string check) {
  Report r;
  r.subject = std::move(subject);
  r.check = std::move(check);
  return r;
}

Report fail(std::string subject, std::string check, std::string counterexample) {
  Report r = pass(std::move(subject), std::move(check));
  r.verdict = Verdict::Fail;
  r.counterexample = std::move(counterexample);
  return r;
}

Report refused(std::string subject, std::string check, std::string why) {
  Report r = pass(std::move(subject), std::move(check));
  r.verdict = Verdict::Refused;
  r.note = std::move(why);
  return r;
}

bool all_pass(const Reports& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.passed(); });
}

const Report* find_check(const Reports& rs, const std::string& check) {
  for (const auto& r : rs)
    if (r.check == check) return &r;
  return nullptr;
}

double Stopwatch::ms() const {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
      .count();
}

void Stopwatch::stamp(Report& r) const {
  if (r.elapsed_ms == 0.0) r.elapsed_ms = ms();
}

void Stopwatch::stamp(Reports& rs) const {
  const double t = ms();
  for (auto& r : rs)
    if (r.elapsed_ms == 0.0) r.elapsed_ms = t;
}

std::string format_text(const Report& r) {
  std::string out = "[";
  out += to_string(r.verdict);
  out += "] ";
  if (!r.subject.empty()) out += r.subject + " ";
  out += r.check;
  for (const auto& [k, v] : r.witnesses) out += "  " + k + "=" + v;
  if (!r.counterexample.empty()) out += "\n    counterexample: " + r.counterexample;
  if (!r.note.empty()) out += "\n    note: " + r.note;
  return out;
}

std::string format_machine(const Report& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["subject"] = r.subject;
  j["check"] = r.check;
  j["verdict"] = to_string(r.verdict);
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.witnesses) w[k] = v;
  j["witnesses"] = std::move(w);
  j["counterexample"] = r.counterexample;
  if (!r.note.empty()) j["note"] = r.note;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

}  // namespace pcalab
