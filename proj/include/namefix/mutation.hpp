#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "namefix/ast.hpp"
#include "namefix/extraction.hpp"
#include "namefix/rng.hpp"

namespace namefix {

// A fixed/buggy statement pair produced by one mutation. The fixed side is a
// private clone of the record's statement; the buggy side is another clone
// with the defect injected at `site_path`. Exactly one of `call` / `binop` is
// populated, matching `bug_type`. For wrong-operator pairs the embedded binop
// record carries the drawn replacement in `bo` and `seed_draw` holds the index
// drawn from the candidate list (0 for the other bug types).
struct MutationPair {
    BugType bug_type = BugType::SwappedArgs;
    std::string file;
    AstNodePtr fixed_stmt;
    AstNodePtr buggy_stmt;
    NodePath site_path;
    std::uint64_t seed_draw = 0;
    std::optional<CallSiteRecord> call;
    std::optional<BinOpRecord> binop;
};

// Operator families used when drawing a wrong-operator replacement. An
// operator is only ever replaced by another member of its own family.
// `instanceof` and `in` belong to no family.
const std::vector<std::string>& arithmetic_operators();
const std::vector<std::string>& comparison_operators();
const std::vector<std::string>& logical_operators();
const std::vector<std::string>& bitwise_shift_operators();

// Returns the family containing `op`, or nullptr when `op` is ungrouped.
const std::vector<std::string>* operator_group(const std::string& op);

// Operators for which swapping the operands cannot change the result when
// both operands are side-effect free.
bool is_commutative_operator(const std::string& op);

// Per-record RNG seed: stable across runs and independent of iteration order.
std::uint64_t record_rng_seed(std::uint64_t global_seed, const std::string& file,
                              std::size_t ordinal);

// Swaps the two arguments of the recorded call. Throws DegenerateMutation
// when both arguments print to the same token sequence.
MutationPair mutate_swap_args(const CallSiteRecord& record);

// Replaces the recorded operator with another member of its family, drawn
// uniformly from the family minus the original. Throws DegenerateMutation for
// ungrouped operators.
MutationPair mutate_wrong_operator(const BinOpRecord& record, SeededRng& rng);

// Swaps the two operands of the recorded operation. Throws DegenerateMutation
// when the operands print identically, or when `exclude_commutative` is set
// and the operator is commutative.
MutationPair mutate_swap_operands(const BinOpRecord& record,
                                  bool exclude_commutative = false);

}  // namespace namefix
