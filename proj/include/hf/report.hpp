#pragma once

// Suite results. Every failing case carries the assignment that broke it and
// a closure that re-evaluates that assignment from scratch.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hf {

enum class Verdict { pass, fail, budget };

const char* verdict_name(Verdict v) noexcept;

struct Case {
  std::string id;
  Verdict verdict = Verdict::pass;
  // Variable -> printed value for failures; free-form notes otherwise.
  std::optional<nlohmann::ordered_json> counterexample;
  std::string detail;
  // Returns true when the failure reproduces.
  std::function<bool()> recheck;
};

struct Totals {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t budget = 0;
};

struct Report {
  std::string suite;
  nlohmann::ordered_json context = nlohmann::ordered_json::object();
  std::vector<Case> cases;

  void add(Case c) { cases.push_back(std::move(c)); }
  // Appends other's cases after ours; ids are prefixed with other's suite name.
  void merge(Report other);

  Totals totals() const;
  bool all_pass() const { return totals().fail == 0 && totals().budget == 0; }
  // 0 all pass, 1 any fail, 2 only budget incompletions.
  int exit_code() const;

  nlohmann::ordered_json to_json(bool timestamp = true) const;
  std::string to_human() const;
};

}  // namespace hf
