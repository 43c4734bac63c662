#include "namefix/mutation.hpp"

#include <algorithm>

#include "namefix/errors.hpp"

namespace namefix {
namespace {

AstNode* node_at(AstNode& root, const NodePath& path) {
    AstNode* n = &root;
    for (std::size_t index : path) {
        if (index >= n->children.size()) {
            throw MissingContext("mutation site path escapes the statement");
        }
        n = n->children[index].get();
    }
    return n;
}

}  // namespace

const std::vector<std::string>& arithmetic_operators() {
    static const std::vector<std::string> ops = {"+", "-", "*", "/", "%"};
    return ops;
}

const std::vector<std::string>& comparison_operators() {
    static const std::vector<std::string> ops = {"<",  "<=", ">",  ">=",
                                                 "==", "!=", "===", "!=="};
    return ops;
}

const std::vector<std::string>& logical_operators() {
    static const std::vector<std::string> ops = {"&&", "||"};
    return ops;
}

const std::vector<std::string>& bitwise_shift_operators() {
    static const std::vector<std::string> ops = {"&",  "|",  "^",
                                                 "<<", ">>", ">>>"};
    return ops;
}

const std::vector<std::string>* operator_group(const std::string& op) {
    for (const auto* group : {&arithmetic_operators(), &comparison_operators(),
                              &logical_operators(), &bitwise_shift_operators()}) {
        if (std::find(group->begin(), group->end(), op) != group->end()) {
            return group;
        }
    }
    return nullptr;
}

bool is_commutative_operator(const std::string& op) {
    static const std::vector<std::string> ops = {"+",  "*",   "==", "!=", "===",
                                                 "!==", "&",  "|",  "^",
                                                 "&&", "||"};
    return std::find(ops.begin(), ops.end(), op) != ops.end();
}

std::uint64_t record_rng_seed(std::uint64_t global_seed, const std::string& file,
                              std::size_t ordinal) {
    return stable_hash(global_seed, file, static_cast<std::uint64_t>(ordinal));
}

MutationPair mutate_swap_args(const CallSiteRecord& record) {
    if (join_tokens(record.a1) == join_tokens(record.a2)) {
        throw DegenerateMutation("swapping identical arguments of " + record.c);
    }
    MutationPair pair;
    pair.bug_type = BugType::SwappedArgs;
    pair.file = record.file;
    pair.site_path = record.site_path;
    pair.fixed_stmt = clone(*record.statement);
    pair.buggy_stmt = clone(*record.statement);
    AstNode* site = node_at(*pair.buggy_stmt, record.site_path);
    if (site->kind != NodeKind::CallExpression || site->children.size() != 3) {
        throw MissingContext("mutation site is not a two-argument call");
    }
    std::swap(site->children[1], site->children[2]);
    pair.call = record;
    return pair;
}

MutationPair mutate_wrong_operator(const BinOpRecord& record, SeededRng& rng) {
    const std::vector<std::string>* group = operator_group(record.o);
    if (group == nullptr) {
        throw DegenerateMutation("operator " + record.o + " has no replacement family");
    }
    std::vector<std::string> candidates;
    candidates.reserve(group->size());
    for (const std::string& op : *group) {
        if (op != record.o) {
            candidates.push_back(op);
        }
    }
    if (candidates.empty()) {
        throw DegenerateMutation("operator " + record.o + " has no alternatives");
    }
    std::uint64_t draw = rng.bounded(candidates.size());

    MutationPair pair;
    pair.bug_type = BugType::WrongBinop;
    pair.file = record.file;
    pair.site_path = record.site_path;
    pair.seed_draw = draw;
    pair.fixed_stmt = clone(*record.statement);
    pair.buggy_stmt = clone(*record.statement);
    AstNode* site = node_at(*pair.buggy_stmt, record.site_path);
    if ((site->kind != NodeKind::BinaryExpression &&
         site->kind != NodeKind::LogicalExpression) ||
        site->op != record.o) {
        throw MissingContext("mutation site does not carry the recorded operator");
    }
    site->op = candidates[draw];
    // && <-> || moves between node kinds; keep the tree honest about it.
    site->kind = (site->op == "&&" || site->op == "||")
                     ? NodeKind::LogicalExpression
                     : NodeKind::BinaryExpression;

    BinOpRecord with_bug = record;
    with_bug.bo = candidates[draw];
    pair.binop = std::move(with_bug);
    return pair;
}

MutationPair mutate_swap_operands(const BinOpRecord& record,
                                  bool exclude_commutative) {
    if (exclude_commutative && is_commutative_operator(record.o)) {
        throw DegenerateMutation("operator " + record.o + " is commutative");
    }
    if (join_tokens(record.lo) == join_tokens(record.ro)) {
        throw DegenerateMutation("swapping identical operands of " + record.o);
    }
    MutationPair pair;
    pair.bug_type = BugType::WrongOperands;
    pair.file = record.file;
    pair.site_path = record.site_path;
    pair.fixed_stmt = clone(*record.statement);
    pair.buggy_stmt = clone(*record.statement);
    AstNode* site = node_at(*pair.buggy_stmt, record.site_path);
    if ((site->kind != NodeKind::BinaryExpression &&
         site->kind != NodeKind::LogicalExpression) ||
        site->children.size() != 2) {
        throw MissingContext("mutation site is not a binary operation");
    }
    std::swap(site->children[0], site->children[1]);
    pair.binop = record;
    return pair;
}

}  // namespace namefix
