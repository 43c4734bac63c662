#include "namefix/extraction.hpp"

#include "namefix/errors.hpp"
#include "namefix/rng.hpp"

#include <algorithm>

namespace namefix {

const char* bug_type_name(BugType t) {
    switch (t) {
        case BugType::SwappedArgs: return "swapped_args";
        case BugType::WrongBinop: return "wrong_binop";
        case BugType::WrongOperands: return "wrong_operands";
    }
    return "?";
}

std::optional<BugType> bug_type_from_name(const std::string& name) {
    if (name == "swapped_args") return BugType::SwappedArgs;
    if (name == "wrong_binop") return BugType::WrongBinop;
    if (name == "wrong_operands") return BugType::WrongOperands;
    return std::nullopt;
}

const char* type_tag_name(TypeTag t) {
    switch (t) {
        case TypeTag::Number: return "number";
        case TypeTag::String: return "string";
        case TypeTag::Boolean: return "boolean";
        case TypeTag::Function: return "function";
        case TypeTag::Object: return "object";
        case TypeTag::Array: return "array";
        case TypeTag::Regex: return "regex";
        case TypeTag::Null: return "null";
        case TypeTag::Undefined: return "undefined";
        case TypeTag::Unknown: return "unknown";
    }
    return "?";
}

std::optional<TypeTag> type_tag_from_name(const std::string& name) {
    static const std::pair<const char*, TypeTag> table[] = {
        {"number", TypeTag::Number},   {"string", TypeTag::String},
        {"boolean", TypeTag::Boolean}, {"function", TypeTag::Function},
        {"object", TypeTag::Object},   {"array", TypeTag::Array},
        {"regex", TypeTag::Regex},     {"null", TypeTag::Null},
        {"undefined", TypeTag::Undefined}, {"unknown", TypeTag::Unknown},
    };
    for (const auto& [n, t] : table)
        if (name == n) return t;
    return std::nullopt;
}

TypeTag infer_type(const AstNode& expr) {
    switch (expr.kind) {
        case NodeKind::Literal:
            switch (expr.literal_tag) {
                case LiteralTag::Number: return TypeTag::Number;
                case LiteralTag::String: return TypeTag::String;
                case LiteralTag::Boolean: return TypeTag::Boolean;
                case LiteralTag::Null: return TypeTag::Null;
                case LiteralTag::Regex: return TypeTag::Regex;
            }
            return TypeTag::Unknown;
        case NodeKind::FunctionExpression:
            return TypeTag::Function;
        case NodeKind::ArrayExpression:
            return TypeTag::Array;
        case NodeKind::ObjectExpression:
            return TypeTag::Object;
        default:
            return TypeTag::Unknown;
    }
}

namespace {

// Rightmost (last in source order) identifier under n, else literal.
void rightmost(const AstNode& n, const AstNode** ident, const AstNode** lit) {
    if (n.kind == NodeKind::Identifier)
        *ident = &n;
    else if (n.kind == NodeKind::Literal)
        *lit = &n;
    for (const auto& c : n.children) rightmost(*c, ident, lit);
}

// Dotted text of an identifier/member chain; empty when the expression is
// not a plain chain.
std::string chain_text(const AstNode& n) {
    if (n.kind == NodeKind::Identifier) return n.name;
    if (n.kind == NodeKind::Literal) return n.value;
    if (n.kind == NodeKind::MemberExpression && !n.computed &&
        n.children.size() == 2 && n.children[1]->kind == NodeKind::Identifier) {
        std::string base = chain_text(*n.children[0]);
        if (base.empty()) return "";
        return base + "." + n.children[1]->name;
    }
    return "";
}

bool is_record_statement(NodeKind k) {
    return k == NodeKind::ExpressionStatement || k == NodeKind::VariableDeclaration ||
           k == NodeKind::ReturnStatement || k == NodeKind::IfStatement;
}

// Walks the tree tracking the nearest enclosing record statement and the
// path from that statement to the current node.
template <typename Fn>
void walk_with_statement(const AstNode& node, const AstNode* stmt, NodePath path, Fn&& fn) {
    if (is_record_statement(node.kind)) {
        stmt = &node;
        path.clear();
    }
    fn(node, stmt, path);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        NodePath child_path = path;
        child_path.push_back(i);
        walk_with_statement(*node.children[i], stmt, std::move(child_path), fn);
    }
}

} // namespace

std::string reduce_to_name(const AstNode& expr) {
    if (expr.kind == NodeKind::Identifier) return expr.name;
    if (expr.kind == NodeKind::Literal) return expr.value;
    const AstNode* ident = nullptr;
    const AstNode* lit = nullptr;
    rightmost(expr, &ident, &lit);
    if (ident) return ident->name;
    if (lit) return lit->value;
    return node_kind_name(expr.kind);
}

std::string callee_key(const CallSiteRecord& r) {
    return r.b.empty() ? r.c : r.b + "." + r.c;
}

std::optional<std::pair<std::string, std::string>> call_callee_parts(const AstNode& call) {
    if (call.kind != NodeKind::CallExpression || call.children.empty()) return std::nullopt;
    const AstNode& callee = *call.children[0];
    if (callee.kind == NodeKind::Identifier) {
        return std::make_pair(std::string(), callee.name);
    }
    if (callee.kind == NodeKind::MemberExpression && !callee.computed &&
        callee.children.size() == 2 && callee.children[1]->kind == NodeKind::Identifier) {
        std::string base = chain_text(*callee.children[0]);
        if (base.empty()) base = reduce_to_name(*callee.children[0]);
        return std::make_pair(base, callee.children[1]->name);
    }
    return std::nullopt;
}

bool contains_opaque(const AstNode& n) {
    if (n.kind == NodeKind::Opaque) return true;
    for (const auto& c : n.children) {
        if (contains_opaque(*c)) return true;
    }
    return false;
}

std::vector<CallSiteRecord> extract_call_sites(const AstNode& root, const std::string& file) {
    std::vector<CallSiteRecord> out;
    walk_with_statement(root, nullptr, NodePath{}, [&](const AstNode& n, const AstNode* stmt,
                                                       const NodePath& p) {
        if (n.kind != NodeKind::CallExpression || n.children.size() != 3) return;
        auto parts = call_callee_parts(n);
        if (!parts) return; // no nameable callee
        if (stmt ? contains_opaque(*stmt) : contains_opaque(n)) return;
        CallSiteRecord r;
        r.b = parts->first;
        r.c = parts->second;
        const AstNode& arg1 = *n.children[1];
        const AstNode& arg2 = *n.children[2];
        r.file = file;
        r.a1 = token_texts(print_tokens(arg1));
        r.a2 = token_texts(print_tokens(arg2));
        r.a = {reduce_to_name(arg1), reduce_to_name(arg2)};
        r.at = {infer_type(arg1), infer_type(arg2)};
        if (stmt) {
            r.statement = clone(*stmt);
            r.site_path = p;
        } else {
            auto wrapper = make_node(NodeKind::ExpressionStatement);
            wrapper->children.push_back(clone(n));
            r.statement = wrapper;
            r.site_path = {0};
        }
        r.ordinal = out.size();
        out.push_back(std::move(r));
    });
    return out;
}

std::vector<BinOpRecord> extract_binops(const AstNode& root, const std::string& file) {
    std::vector<BinOpRecord> out;
    // Post-order: operands of nested operations are recorded before the
    // enclosing operation.
    auto visit = [&](const AstNode& n, auto&& self) -> void {
        for (const auto& c : n.children) self(*c, self);
        if (n.kind != NodeKind::BinaryExpression && n.kind != NodeKind::LogicalExpression) return;
        if (contains_opaque(n)) return;
        BinOpRecord r;
        r.file = file;
        const AstNode& left = *n.children.at(0);
        const AstNode& right = *n.children.at(1);
        r.lo = token_texts(print_tokens(left));
        r.ro = token_texts(print_tokens(right));
        r.o = n.op;
        r.co = n.op;
        r.ops = {reduce_to_name(left), reduce_to_name(right)};
        r.ot = {infer_type(left), infer_type(right)};
        auto wrapper = make_node(NodeKind::ExpressionStatement);
        wrapper->children.push_back(clone(n));
        r.statement = wrapper;
        r.site_path = {0};
        r.ordinal = out.size();
        out.push_back(std::move(r));
    };
    visit(root, visit);
    return out;
}

TypeMap synthesize_types(const std::vector<CallSiteRecord>& records, std::uint64_t seed) {
    static const TypeTag palette[6] = {TypeTag::Number, TypeTag::String,  TypeTag::Boolean,
                                       TypeTag::Function, TypeTag::Object, TypeTag::Array};
    struct Vote {
        std::map<TypeTag, std::size_t> count;
        std::map<TypeTag, std::size_t> first_seen;
    };
    std::map<std::string, std::array<Vote, 2>> votes;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const CallSiteRecord& r = records[i];
        auto& v = votes[callee_key(r)];
        for (int pos = 0; pos < 2; ++pos) {
            TypeTag t = r.at[static_cast<std::size_t>(pos)];
            if (t == TypeTag::Unknown) continue;
            auto& slot = v[static_cast<std::size_t>(pos)];
            if (++slot.count[t] == 1) slot.first_seen[t] = i;
        }
    }
    TypeMap out;
    out.seed = seed;
    for (auto& [key, v] : votes) {
        std::uint64_t h = stable_hash(seed, key);
        std::array<TypeTag, 2> pair{palette[h % 6], palette[(h / 6) % 6]};
        for (std::size_t pos = 0; pos < 2; ++pos) {
            const Vote& slot = v[pos];
            if (slot.count.empty()) continue;
            TypeTag best = TypeTag::Unknown;
            std::size_t best_count = 0;
            std::size_t best_first = 0;
            for (const auto& [tag, cnt] : slot.count) {
                std::size_t first = slot.first_seen.at(tag);
                if (cnt > best_count || (cnt == best_count && first < best_first)) {
                    best = tag;
                    best_count = cnt;
                    best_first = first;
                }
            }
            pair[pos] = best;
        }
        out.by_callee[key] = pair;
    }
    return out;
}

void apply_types(std::vector<CallSiteRecord>& records, const TypeMap& types) {
    for (auto& r : records) {
        auto it = types.by_callee.find(callee_key(r));
        if (it == types.by_callee.end())
            throw MissingContext("no synthesized types for callee '" + callee_key(r) + "'");
        r.sat = it->second;
    }
}

} // namespace namefix
