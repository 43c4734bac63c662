#include "namefix/representation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <tuple>
#include <unordered_map>

#include "namefix/errors.hpp"

namespace namefix {
namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

const char* const kRepNames[kRepresentationCount] = {
    "WT1", "WT2", "DB1", "DB2", "DB3", "FS1", "FS2",
    "FS3", "FS4", "TF1", "AST1", "AST2", "AST3", "AST4",
};

const AstNode* node_at_path(const AstNode& root, const NodePath& path) {
    const AstNode* n = &root;
    for (std::size_t index : path) {
        if (index >= n->children.size()) return nullptr;
        n = n->children[index].get();
    }
    return n;
}

// One argument (or operand) that carries a type annotation.
struct TaggedArg {
    const AstNode* owner = nullptr; // annotated call / operation
    const AstNode* arg = nullptr;   // argument root
    TypeTag tag = TypeTag::Unknown;
    int slot = 0;
};

void collect_calls(const AstNode& n, std::vector<const AstNode*>& out) {
    if (n.kind == NodeKind::CallExpression) out.push_back(&n);
    for (const auto& c : n.children) collect_calls(*c, out);
}

// For the swapped-argument defect every two-argument call whose callee has a
// recorded type signature is annotated; the mutated call's annotations follow
// its arguments, so the buggy side reads them in reversed order. For the
// operator defects only the mutated operation's two operands are annotated,
// with types inferred from the operand expressions themselves.
std::vector<TaggedArg> tag_plan(const AstNode& stmt, const EncodeContext& ctx) {
    std::vector<TaggedArg> plan;
    if (ctx.bug_type == BugType::SwappedArgs) {
        if (ctx.types == nullptr) return plan;
        const AstNode* site = node_at_path(stmt, ctx.site_path);
        std::vector<const AstNode*> calls;
        collect_calls(stmt, calls);
        for (const AstNode* call : calls) {
            if (call->children.size() != 3) continue;
            auto parts = call_callee_parts(*call);
            if (!parts) continue;
            std::string key =
                parts->first.empty() ? parts->second : parts->first + "." + parts->second;
            auto it = ctx.types->by_callee.find(key);
            if (it == ctx.types->by_callee.end()) continue;
            std::array<TypeTag, 2> tags = it->second;
            if (call == site && ctx.site_args_swapped) std::swap(tags[0], tags[1]);
            plan.push_back({call, call->children[1].get(), tags[0], 0});
            plan.push_back({call, call->children[2].get(), tags[1], 1});
        }
        return plan;
    }
    const AstNode* site = node_at_path(stmt, ctx.site_path);
    if (site != nullptr &&
        (site->kind == NodeKind::BinaryExpression ||
         site->kind == NodeKind::LogicalExpression) &&
        site->children.size() == 2) {
        plan.push_back({site, site->children[0].get(), infer_type(*site->children[0]), 0});
        plan.push_back({site, site->children[1].get(), infer_type(*site->children[1]), 1});
    }
    return plan;
}

bool is_identifier_cat(TokenCategory c) { return c == TokenCategory::Identifier; }

bool is_literal_cat(TokenCategory c) {
    return c == TokenCategory::LiteralNumber || c == TokenCategory::LiteralString ||
           c == TokenCategory::LiteralOther;
}

// Index of the token the annotation attaches to: the last identifier inside
// the range, else the last literal, else none.
std::size_t name_token_in(const TokenSeq& tokens, std::size_t begin, std::size_t end) {
    for (std::size_t i = end; i > begin; --i) {
        if (is_identifier_cat(tokens[i - 1].cat)) return i - 1;
    }
    for (std::size_t i = end; i > begin; --i) {
        if (is_literal_cat(tokens[i - 1].cat)) return i - 1;
    }
    return npos;
}

std::vector<std::string> encode_wt1(const AstNode& stmt) {
    return token_texts(print_tokens(stmt));
}

// ---- WT2: subtoken splitting -------------------------------------------

bool is_piece_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '$';
}

// Splittable identifiers are runs of [A-Za-z0-9$] pieces joined by single
// underscores; anything else (leading, trailing or doubled underscores,
// exotic characters) is kept whole so the encoding stays reversible.
bool is_splittable_identifier(const std::string& s) {
    if (s.empty() || s.front() == '_' || s.back() == '_') return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '_') {
            if (i + 1 < s.size() && s[i + 1] == '_') return false;
            continue;
        }
        if (!is_piece_char(s[i])) return false;
    }
    return true;
}

void split_identifier(const std::string& s, std::vector<std::string>& out) {
    auto lower = [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; };
    auto upper = [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; };
    auto alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '$'; };
    auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };

    std::string piece(1, s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) {
        char prev = s[i - 1];
        char cur = s[i];
        if (cur == '_') continue;
        const char* marker = nullptr;
        if (prev == '_') {
            marker = "<UNDER>";
        } else if (lower(prev) && upper(cur)) {
            marker = "<CAMEL>";
        } else if ((alpha(prev) && digit(cur)) || (digit(prev) && alpha(cur))) {
            marker = "<NUM>";
        }
        if (marker != nullptr) {
            out.push_back(piece);
            out.emplace_back(marker);
            piece.clear();
        }
        piece.push_back(cur);
    }
    out.push_back(piece);
}

std::vector<std::string> encode_wt2(const AstNode& stmt, const EncodeContext& ctx) {
    std::vector<std::string> out;
    for (const Token& t : print_tokens(stmt)) {
        switch (t.cat) {
            case TokenCategory::Identifier:
                if (is_splittable_identifier(t.text)) {
                    split_identifier(t.text, out);
                } else {
                    out.push_back(t.text);
                }
                break;
            case TokenCategory::LiteralString:
                out.emplace_back("<STRING>");
                if (ctx.wt2_originals) ctx.wt2_originals->push_back(t.text);
                break;
            case TokenCategory::LiteralNumber:
                if (t.text == "0" || t.text == "1") {
                    out.push_back(t.text);
                } else {
                    out.emplace_back("<NUMBER>");
                    if (ctx.wt2_originals) ctx.wt2_originals->push_back(t.text);
                }
                break;
            default:
                out.push_back(t.text);
                break;
        }
    }
    return out;
}

// ---- DB1/DB2/DB3: marked tokens with argument types ---------------------

std::vector<std::string> encode_db(const AstNode& stmt, const EncodeContext& ctx, int level) {
    if (level >= 2 && ctx.bug_type == BugType::SwappedArgs && ctx.types == nullptr) {
        throw MissingContext("typed token encoding needs argument types");
    }
    PrintedTokens pt = print_tokens_with_ranges(stmt);
    std::vector<TaggedArg> plan = tag_plan(stmt, ctx);

    std::map<std::size_t, std::string> type_after_prefix; // level 2
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> replaced; // level 3
    for (const TaggedArg& ta : plan) {
        auto it = pt.ranges.find(ta.arg);
        if (it == pt.ranges.end()) continue;
        auto [begin, end] = it->second;
        if (level == 2) {
            std::size_t name = name_token_in(pt.tokens, begin, end);
            if (name != npos) type_after_prefix[name] = type_tag_name(ta.tag);
        } else if (level == 3) {
            replaced.emplace_back(begin, end, type_tag_name(ta.tag));
        }
    }
    std::sort(replaced.begin(), replaced.end());

    std::vector<std::string> out;
    std::size_t i = 0;
    std::size_t r = 0;
    while (i < pt.tokens.size()) {
        while (r < replaced.size() && std::get<0>(replaced[r]) < i) ++r;
        if (r < replaced.size() && std::get<0>(replaced[r]) == i) {
            out.emplace_back("ID");
            out.push_back(std::get<2>(replaced[r]));
            i = std::get<1>(replaced[r]);
            ++r;
            continue;
        }
        const Token& t = pt.tokens[i];
        if (is_identifier_cat(t.cat)) {
            out.emplace_back("ID");
        } else if (is_literal_cat(t.cat)) {
            out.emplace_back("LIT");
        }
        if (level == 2) {
            auto it = type_after_prefix.find(i);
            if (it != type_after_prefix.end()) out.push_back(it->second);
        }
        out.push_back(t.text);
        ++i;
    }
    return out;
}

// ---- FS1-FS4: call signature only ---------------------------------------

std::vector<std::string> encode_fs(const AstNode& stmt, const EncodeContext& ctx,
                                   RepresentationId rep) {
    const AstNode* site = node_at_path(stmt, ctx.site_path);
    if (site == nullptr || site->kind != NodeKind::CallExpression ||
        site->children.size() != 3) {
        throw MissingContext("signature encoding needs the recorded call site");
    }
    auto parts = call_callee_parts(*site);
    if (!parts) throw MissingContext("signature encoding needs a nameable callee");
    if (ctx.types == nullptr) throw MissingContext("signature encoding needs argument types");
    std::string key = parts->first.empty() ? parts->second : parts->first + "." + parts->second;
    auto it = ctx.types->by_callee.find(key);
    if (it == ctx.types->by_callee.end()) {
        throw MissingContext("no recorded types for callee '" + key + "'");
    }
    std::array<TypeTag, 2> tags = it->second;
    if (ctx.site_args_swapped) std::swap(tags[0], tags[1]);

    std::vector<std::string> out;
    if (!parts->first.empty()) {
        const std::string& base = parts->first;
        std::string piece;
        for (char c : base) {
            if (c == '.') {
                out.push_back(piece);
                out.emplace_back(".");
                piece.clear();
            } else {
                piece.push_back(c);
            }
        }
        out.push_back(piece);
        out.emplace_back(".");
    }
    out.push_back(parts->second);
    out.emplace_back("(");
    for (int slot = 0; slot < 2; ++slot) {
        if (slot == 1) out.emplace_back(",");
        const AstNode& arg = *site->children[static_cast<std::size_t>(1 + slot)];
        bool literal_arg = arg.kind == NodeKind::Literal;
        if (rep == RepresentationId::FS2 || rep == RepresentationId::FS4) {
            out.push_back("arg" + std::to_string(slot));
        }
        if (rep == RepresentationId::FS3 || rep == RepresentationId::FS4) {
            out.emplace_back(literal_arg ? "LIT" : "ID");
        }
        out.emplace_back(type_tag_name(tags[static_cast<std::size_t>(slot)]));
    }
    out.emplace_back(")");
    return out;
}

// ---- TF1: numbered abstraction slots -------------------------------------

std::vector<std::string> encode_tf1(const AstNode& stmt, const EncodeContext& ctx) {
    if (ctx.idioms == nullptr) throw MissingContext("abstraction encoding needs an idiom set");
    AbstractionMap local;
    AbstractionMap* slots = ctx.abstraction != nullptr ? ctx.abstraction : &local;

    PrintedTokens pt = print_tokens_with_ranges(stmt);
    std::vector<TaggedArg> plan = tag_plan(stmt, ctx);

    // Token positions with a forced category: callee names become Method,
    // and annotated arguments take the category of their recorded type.
    std::map<std::size_t, std::string> forced;
    std::vector<const AstNode*> calls;
    collect_calls(stmt, calls);
    for (const AstNode* call : calls) {
        if (call->children.empty()) continue;
        const AstNode& callee = *call->children[0];
        const AstNode* name_node = nullptr;
        if (callee.kind == NodeKind::Identifier) {
            name_node = &callee;
        } else if (callee.kind == NodeKind::MemberExpression && !callee.computed &&
                   callee.children.size() == 2 &&
                   callee.children[1]->kind == NodeKind::Identifier) {
            name_node = callee.children[1].get();
        }
        if (name_node == nullptr) continue;
        auto it = pt.ranges.find(name_node);
        if (it != pt.ranges.end() && it->second.second == it->second.first + 1) {
            forced.emplace(it->second.first, "Method");
        }
    }
    for (const TaggedArg& ta : plan) {
        const char* category = nullptr;
        switch (ta.tag) {
            case TypeTag::Number:
                category = "Number";
                break;
            case TypeTag::String:
                category = "String";
                break;
            case TypeTag::Function:
                category = "Method";
                break;
            default:
                break;
        }
        if (category == nullptr) continue;
        auto it = pt.ranges.find(ta.arg);
        if (it == pt.ranges.end()) continue;
        std::size_t name = name_token_in(pt.tokens, it->second.first, it->second.second);
        if (name != npos) forced.emplace(name, category);
    }

    std::vector<std::string> out;
    for (std::size_t i = 0; i < pt.tokens.size(); ++i) {
        const Token& t = pt.tokens[i];
        if (t.cat == TokenCategory::Punctuation || t.cat == TokenCategory::Operator ||
            t.cat == TokenCategory::Keyword || t.cat == TokenCategory::Marker) {
            out.push_back(t.text);
            continue;
        }
        if (ctx.idioms->contains(t.text)) {
            out.push_back(t.text);
            continue;
        }
        auto f = forced.find(i);
        if (f != forced.end()) {
            out.push_back(slots->abstract_for(f->second, t.text));
        } else if (t.cat == TokenCategory::LiteralNumber) {
            out.push_back(slots->abstract_for("Number", t.text));
        } else if (t.cat == TokenCategory::LiteralString) {
            out.push_back(slots->abstract_for("String", t.text));
        } else {
            out.push_back(slots->abstract_for("Var", t.text));
        }
    }
    return out;
}

// ---- AST1-AST4: linearized trees -----------------------------------------

bool is_variadic_kind(NodeKind k) {
    return k == NodeKind::Program || k == NodeKind::CallExpression ||
           k == NodeKind::BlockStatement || k == NodeKind::ArrayExpression ||
           k == NodeKind::ObjectExpression;
}

void emit_kinds_only(const AstNode& n, std::vector<std::string>& out) {
    out.emplace_back(node_kind_name(n.kind));
    for (const auto& c : n.children) emit_kinds_only(*c, out);
}

// Pre-order linearization. A node in tail position (last child of a tail
// parent, with the synthetic root being tail) needs no explicit terminator:
// the end of its region bounds it. Every other variadic node closes with
// "End", and an if-statement announces its alternate with "Else".
void emit_ast(const AstNode& n, bool tail, RepresentationId rep,
              const std::unordered_map<const AstNode*, TypeTag>& tags,
              std::vector<std::string>& out) {
    if (rep == RepresentationId::AST3) {
        auto it = tags.find(&n);
        if (it != tags.end()) {
            out.emplace_back(node_kind_name(n.kind));
            out.emplace_back(type_tag_name(it->second));
            return;
        }
    }
    out.emplace_back(node_kind_name(n.kind));
    if (rep == RepresentationId::AST2) {
        auto it = tags.find(&n);
        if (it != tags.end()) out.emplace_back(type_tag_name(it->second));
    }
    switch (n.kind) {
        case NodeKind::Identifier:
            out.push_back(n.name);
            break;
        case NodeKind::Literal:
            out.push_back(n.value);
            break;
        case NodeKind::BinaryExpression:
        case NodeKind::LogicalExpression:
        case NodeKind::AssignmentExpression:
        case NodeKind::UnaryExpression:
            out.push_back(n.op);
            break;
        case NodeKind::VariableDeclaration:
            out.push_back(n.name); // declaration keyword
            break;
        case NodeKind::FunctionDeclaration:
        case NodeKind::FunctionExpression:
            if (!n.name.empty()) out.push_back(n.name);
            break;
        case NodeKind::MemberExpression:
            if (n.computed) out.emplace_back("computed");
            break;
        default:
            break;
    }
    if (n.kind == NodeKind::IfStatement && n.children.size() == 3) {
        emit_ast(*n.children[0], false, rep, tags, out);
        emit_ast(*n.children[1], false, rep, tags, out);
        out.emplace_back("Else");
        emit_ast(*n.children[2], tail, rep, tags, out);
    } else {
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            emit_ast(*n.children[i], tail && i + 1 == n.children.size(), rep, tags, out);
        }
    }
    if (is_variadic_kind(n.kind) && !tail) out.emplace_back("End");
}

std::vector<std::string> encode_ast(const AstNode& stmt, const EncodeContext& ctx,
                                    RepresentationId rep) {
    std::vector<std::string> out;
    if (rep == RepresentationId::AST4) {
        const AstNode* site = node_at_path(stmt, ctx.site_path);
        if (site == nullptr) throw MissingContext("shape encoding needs the mutation site");
        emit_kinds_only(*site, out);
        return out;
    }
    std::unordered_map<const AstNode*, TypeTag> tags;
    if (rep == RepresentationId::AST2 || rep == RepresentationId::AST3) {
        // Only reachable for the swapped-argument defect (applicability), so
        // the annotations always come from the recorded signatures.
        if (ctx.types == nullptr) {
            throw MissingContext("typed tree encoding needs argument types");
        }
        for (const TaggedArg& ta : tag_plan(stmt, ctx)) tags.emplace(ta.arg, ta.tag);
    }
    out.emplace_back(node_kind_name(NodeKind::Program));
    emit_ast(stmt, true, rep, tags, out);
    return out;
}

}  // namespace

const std::vector<RepresentationId>& all_representations() {
    static const std::vector<RepresentationId> reps = [] {
        std::vector<RepresentationId> v;
        for (std::size_t i = 0; i < kRepresentationCount; ++i) {
            v.push_back(static_cast<RepresentationId>(i));
        }
        return v;
    }();
    return reps;
}

const char* representation_name(RepresentationId rep) {
    return kRepNames[static_cast<std::size_t>(rep)];
}

RepresentationId representation_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kRepresentationCount; ++i) {
        if (name == kRepNames[i]) return static_cast<RepresentationId>(i);
    }
    throw ConfigError("unknown representation '" + name + "'");
}

bool is_automatically_patchable(RepresentationId rep) {
    switch (rep) {
        case RepresentationId::WT1:
        case RepresentationId::WT2:
        case RepresentationId::DB1:
        case RepresentationId::DB2:
        case RepresentationId::TF1:
        case RepresentationId::AST1:
        case RepresentationId::AST2:
            return true;
        default:
            return false;
    }
}

bool applicable(RepresentationId rep, BugType bug) {
    switch (rep) {
        case RepresentationId::FS1:
        case RepresentationId::FS2:
        case RepresentationId::FS3:
        case RepresentationId::FS4:
        case RepresentationId::AST2:
        case RepresentationId::AST3:
            return bug == BugType::SwappedArgs;
        default:
            return true;
    }
}

IdiomSet build_idiom_set(const std::vector<std::vector<std::string>>& streams,
                         std::size_t top_n) {
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& stream : streams) {
        for (const auto& tok : stream) ++counts[tok];
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    IdiomSet set;
    for (std::size_t i = 0; i < ranked.size() && i < top_n; ++i) {
        set.tokens.insert(ranked[i].first);
    }
    for (const std::string& kw : js_keywords()) set.tokens.insert(kw);
    return set;
}

std::string AbstractionMap::abstract_for(const std::string& category,
                                         const std::string& lexeme) {
    auto it = by_lexeme_.find(lexeme);
    if (it != by_lexeme_.end()) return it->second;
    int index = ++counters_[category];
    std::string name = category + "_" + std::to_string(index);
    by_lexeme_.emplace(lexeme, name);
    reverse_.emplace(name, lexeme);
    return name;
}

std::vector<std::string> encode(RepresentationId rep, const AstNode& statement,
                                const EncodeContext& ctx) {
    if (!applicable(rep, ctx.bug_type)) {
        throw NotApplicable(std::string(representation_name(rep)) +
                            " is not defined for " + bug_type_name(ctx.bug_type));
    }
    switch (rep) {
        case RepresentationId::WT1:
            return encode_wt1(statement);
        case RepresentationId::WT2:
            return encode_wt2(statement, ctx);
        case RepresentationId::DB1:
            return encode_db(statement, ctx, 1);
        case RepresentationId::DB2:
            return encode_db(statement, ctx, 2);
        case RepresentationId::DB3:
            return encode_db(statement, ctx, 3);
        case RepresentationId::FS1:
        case RepresentationId::FS2:
        case RepresentationId::FS3:
        case RepresentationId::FS4:
            return encode_fs(statement, ctx, rep);
        case RepresentationId::TF1:
            return encode_tf1(statement, ctx);
        case RepresentationId::AST1:
        case RepresentationId::AST2:
        case RepresentationId::AST3:
        case RepresentationId::AST4:
            return encode_ast(statement, ctx, rep);
    }
    throw ConfigError("unhandled representation");
}

EncodedExample make_example(const MutationPair& pair, RepresentationId src_rep,
                            RepresentationId tgt_rep, const TypeMap& types,
                            const IdiomSet& idioms) {
    EncodedExample ex;
    ex.bug_type = pair.bug_type;
    ex.src_rep = src_rep;
    ex.tgt_rep = tgt_rep;
    ex.file = pair.file;

    AbstractionMap shared;
    EncodeContext ctx;
    ctx.bug_type = pair.bug_type;
    ctx.types = &types;
    ctx.idioms = &idioms;
    ctx.abstraction = &shared;
    ctx.site_path = pair.site_path;

    ctx.site_args_swapped = pair.bug_type == BugType::SwappedArgs;
    ctx.wt2_originals = &ex.wt2_src;
    ex.src = encode(src_rep, *pair.buggy_stmt, ctx);

    ctx.site_args_swapped = false;
    ctx.wt2_originals = &ex.wt2_tgt;
    ex.tgt = encode(tgt_rep, *pair.fixed_stmt, ctx);

    if (src_rep == RepresentationId::TF1 || tgt_rep == RepresentationId::TF1) {
        ex.map = shared.reverse();
    }
    return ex;
}

}  // namespace namefix
