#pragma once

// Verification suites. Each returns a Report with one case per checked item;
// failures carry a replayable counterexample.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "hf/corpus.hpp"
#include "hf/eval.hpp"
#include "hf/interp.hpp"
#include "hf/report.hpp"

namespace hf {

// Extensionality, Foundation, Pair/Sum/Power, separation instances from the
// corpus (free variable u, parameters y and p), Dedekind finiteness for sets
// of size <= 4 and the Weak Hierarchy Principle, over decode(0..set_cutoff-1).
Report check_axioms(const EvalContext& ctx, const std::vector<CorpusEntry>& separation);

// One Point Extension Induction for predicates with free variable x. Tags
// `holds` or `hypothesis-fails` state the expected branch.
Report check_opei(const std::vector<CorpusEntry>& predicates, const EvalContext& ctx);

// mem(x, y) against the d-image of the bit formula for all codes x, y below
// max_code, using ctx.arith_mode for the _a operations.
Report check_theorem6(const EvalContext& ctx, std::uint64_t max_code);

// phi against m2(m1(phi)) for every assignment of values below max_value.
// Entries outside the composed maps' domain are listed in context.skipped.
Report check_roundtrip(const std::vector<CorpusEntry>& corpus, const InterpMap& m1, const InterpMap& m2,
                       const EvalContext& ctx, std::uint64_t max_value = 256);

// c-images of arithmetic laws evaluated on sets of sizes 0..4, compared with
// the laws on the cardinalities. Tag `false` marks an expected-false entry.
Report check_cardinal_model(const std::vector<CorpusEntry>& laws, const EvalContext& ctx);

// encode(S_a(x)) = encode(x) + 1 and the numeral carry pattern for codes below max_code.
Report check_successor(std::uint64_t max_code);

// The representative sets used by the cardinal suite: two of each size 1..4 plus ∅.
std::vector<HFSet> cardinal_samples();

}  // namespace hf
