#ifndef NAMEFIX_EXTRACTION_HPP
#define NAMEFIX_EXTRACTION_HPP

#include "namefix/ast.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace namefix {

enum class BugType { SwappedArgs, WrongBinop, WrongOperands };

const char* bug_type_name(BugType t); // swapped_args / wrong_binop / wrong_operands
std::optional<BugType> bug_type_from_name(const std::string& name);

enum class TypeTag {
    Number,
    String,
    Boolean,
    Function,
    Object,
    Array,
    Regex,
    Null,
    Undefined,
    Unknown,
};

const char* type_tag_name(TypeTag t);
std::optional<TypeTag> type_tag_from_name(const std::string& name);

// One record per call with exactly two arguments. Field letters follow the
// dataset schema: C callee, B base, A1/A2 printed argument tokens, A reduced
// argument names, AT observed types, SAT synthesized types.
struct CallSiteRecord {
    std::string file;
    std::string c;
    std::string b;
    std::vector<std::string> a1;
    std::vector<std::string> a2;
    std::array<std::string, 2> a;
    std::array<TypeTag, 2> at{TypeTag::Unknown, TypeTag::Unknown};
    std::array<TypeTag, 2> sat{TypeTag::Unknown, TypeTag::Unknown};
    AstNodePtr statement;  // enclosing statement (cloned, owned)
    NodePath site_path;    // call node within statement
    std::size_t ordinal = 0;
};

// One record per binary/logical operation. LO/RO printed operand tokens,
// O current operator, CO correct operator, BO buggy operator (empty until a
// mutation draws one), OPS reduced operand names, OT observed operand types.
struct BinOpRecord {
    std::string file;
    std::vector<std::string> lo;
    std::vector<std::string> ro;
    std::string o;
    std::string co;
    std::string bo;
    std::array<std::string, 2> ops;
    std::array<TypeTag, 2> ot{TypeTag::Unknown, TypeTag::Unknown};
    AstNodePtr statement;
    NodePath site_path;
    std::size_t ordinal = 0;
};

// Synthesized argument types per callee key ("B.C" or "C"). Observed types
// win over hash draws; conflicts resolve by majority, ties by first
// occurrence. The palette excludes unknown, so applied SAT never is.
struct TypeMap {
    std::uint64_t seed = 0;
    std::map<std::string, std::array<TypeTag, 2>> by_callee;
};

// Calls in source (pre-)order; operations child-first (post-order).
std::vector<CallSiteRecord> extract_call_sites(const AstNode& root, const std::string& file);
std::vector<BinOpRecord> extract_binops(const AstNode& root, const std::string& file);

// Literals map to their literal category; function/array/object expressions
// to theirs; identifiers, calls and member reads are unknown.
TypeTag infer_type(const AstNode& expr);

std::string callee_key(const CallSiteRecord& r);

// Splits a call's callee into (base, name): {"", "f"} for f(...) and
// {"a.b", "push"} for a.b.push(...). Empty when the callee has no usable
// name (computed member, literal callee, call result, ...).
std::optional<std::pair<std::string, std::string>> call_callee_parts(const AstNode& call);

// True when the subtree contains a node the printer cannot render.
bool contains_opaque(const AstNode& n);
TypeMap synthesize_types(const std::vector<CallSiteRecord>& records, std::uint64_t seed);
void apply_types(std::vector<CallSiteRecord>& records, const TypeMap& types);

// Reduced name of an expression: identifier or literal text, otherwise the
// rightmost identifier (falling back to rightmost literal, then kind).
std::string reduce_to_name(const AstNode& expr);

} // namespace namefix

#endif
