#include "hf/report.hpp"

#include <chrono>
#include <ctime>

namespace hf {

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::budget: return "budget";
  }
  return "?";
}

void Report::merge(Report other) {
  for (auto& c : other.cases) {
    c.id = other.suite + "/" + c.id;
    cases.push_back(std::move(c));
  }
  context[other.suite] = std::move(other.context);
}

Totals Report::totals() const {
  Totals t;
  for (const auto& c : cases) {
    switch (c.verdict) {
      case Verdict::pass: ++t.pass; break;
      case Verdict::fail: ++t.fail; break;
      case Verdict::budget: ++t.budget; break;
    }
  }
  return t;
}

int Report::exit_code() const {
  const Totals t = totals();
  if (t.fail) return 1;
  if (t.budget) return 2;
  return 0;
}

nlohmann::ordered_json Report::to_json(bool timestamp) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["context"] = context;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["verdict"] = verdict_name(c.verdict);
    if (c.counterexample) e["counterexample"] = *c.counterexample;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["cases"] = std::move(arr);
  const Totals t = totals();
  j["totals"] = {{"pass", t.pass}, {"fail", t.fail}, {"budget", t.budget}};
  if (timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
  }
  return j;
}

std::string Report::to_human() const {
  std::string out = suite + "\n";
  for (const auto& c : cases) {
    out += "  ";
    out += verdict_name(c.verdict);
    out += "  " + c.id;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    if (c.counterexample) out += "  counterexample " + c.counterexample->dump();
    out += '\n';
  }
  const Totals t = totals();
  out += "totals: " + std::to_string(t.pass) + " pass, " + std::to_string(t.fail) + " fail, " +
         std::to_string(t.budget) + " budget\n";
  return out;
}

}  // namespace hf
