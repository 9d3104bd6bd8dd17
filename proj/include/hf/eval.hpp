#pragma once

// Tarskian evaluation over finite cutoffs.
//
// Arithmetic values are Codes and set values are HFSets. Bounded quantifiers
// enumerate their bound; unbounded ones range over 0..nat_cutoff-1 or
// decode(0..set_cutoff-1) and mark the result as holding only at the cutoff.
// Unbounded quantifiers read existentially (exists under an even number of
// negations, forall under an odd one) search witness_scale times further, so
// that `forall x. exists y. x < y` holds at every cutoff.
//
// Formulas are compiled to a slot-indexed tree first. Closed subterms are
// evaluated once and reused. Three witness shapes are recognized so that
// quantifiers over exponentially large bounds stay tractable:
//   exists v < B. L = K + v                        v = L - K
//   exists n < B. exists m < B'. L = c*n + K + m   (n, m) = divmod(L - K, c), B' <= c
//   Q u < T. (bit(u, T) -> φ)  /  (bit(u, T) & φ)  u ranges over the bits of T
// Each candidate is checked against the bounds and the body is evaluated in
// full; solve_witnesses = false disables all three.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hf/arith.hpp"
#include "hf/ast.hpp"

namespace hf {

struct EvalStats {
  std::atomic<std::uint64_t> literal_ops{0};
  std::atomic<std::uint64_t> fast_ops{0};
  std::atomic<std::uint64_t> solver_hits{0};
  std::atomic<std::uint64_t> solver_fallbacks{0};
};

struct EvalContext {
  std::uint64_t nat_cutoff = 256;
  std::uint64_t set_cutoff = 256;
  std::uint64_t witness_scale = 2;
  std::size_t code_budget = std::size_t{1} << 20;
  // _a operations run literally when both operand codes are at most this and
  // the segment walk fits literal_walk_budget; otherwise on codes.
  std::uint64_t literal_cutoff = 64;
  std::uint64_t literal_walk_budget = std::uint64_t{1} << 20;
  ArithMode::Kind arith_mode = ArithMode::Kind::fast;
  // Largest range a bounded quantifier may enumerate.
  std::uint64_t enumeration_budget = std::uint64_t{1} << 20;
  bool solve_witnesses = true;
  // Fault injection for harness self-tests: S_a(∅) yields {{∅}}.
  bool corrupt_successor = false;
  // Read by the suites that build the membership formula themselves.
  bool corrupt_bit_formula = false;
  std::shared_ptr<EvalStats> stats = std::make_shared<EvalStats>();

  Limits limits() const { return {code_budget, Limits{}.max_members}; }
};

struct EvalResult {
  bool value = false;
  // Some unbounded quantifier was truncated at a cutoff.
  bool at_cutoff = false;
};

using ArithEnv = std::map<std::string, Code>;
using SetEnv = std::map<std::string, HFSet>;

// Throw UnboundVariable, BudgetExceeded, or LanguageMismatch for symbols
// outside the language.
EvalResult eval_arith(const ArithFormula& f, const ArithEnv& env, const EvalContext& ctx);
EvalResult eval_set(const SetFormula& f, const SetEnv& env, const EvalContext& ctx);
Code eval_arith_term(const TermPtr& t, const ArithEnv& env, const EvalContext& ctx);
HFSet eval_set_term(const TermPtr& t, const SetEnv& env, const EvalContext& ctx);

// A formula compiled against a fixed list of free variables, reusable
// across many assignments. Not safe for concurrent calls on one instance.
template <typename V>
class CompiledFormula {
 public:
  CompiledFormula(const FormulaPtr& f, Language lang, std::vector<std::string> params, const EvalContext& ctx);
  ~CompiledFormula();
  CompiledFormula(CompiledFormula&&) noexcept;
  CompiledFormula& operator=(CompiledFormula&&) noexcept;

  EvalResult operator()(std::span<const V> args) const;
  const std::vector<std::string>& params() const noexcept { return params_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::vector<std::string> params_;
};

using CompiledArith = CompiledFormula<Code>;
using CompiledSet = CompiledFormula<HFSet>;

// Replaces the free variable v by a literal value.
FormulaPtr specialize(const FormulaPtr& f, const std::string& v, const Code& value);
FormulaPtr specialize(const FormulaPtr& f, const std::string& v, HFSet value);

}  // namespace hf
