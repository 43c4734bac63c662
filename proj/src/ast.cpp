#include "namefix/ast.hpp"

#include <algorithm>
#include <array>

namespace namefix {

std::vector<std::string> token_texts(const TokenSeq& toks) {
    std::vector<std::string> out;
    out.reserve(toks.size());
    for (const Token& t : toks) out.push_back(t.text);
    return out;
}

std::string join_tokens(const std::vector<std::string>& texts) {
    std::string out;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (i) out += ' ';
        out += texts[i];
    }
    return out;
}

std::string join_tokens(const TokenSeq& toks) { return join_tokens(token_texts(toks)); }

namespace {

struct KindName {
    NodeKind kind;
    const char* name;
};

constexpr std::array<KindName, 21> kKindNames{{
    {NodeKind::Program, "Program"},
    {NodeKind::ExpressionStatement, "ExpressionStatement"},
    {NodeKind::EmptyStatement, "EmptyStatement"},
    {NodeKind::CallExpression, "CallExpression"},
    {NodeKind::MemberExpression, "MemberExpression"},
    {NodeKind::Identifier, "Identifier"},
    {NodeKind::Literal, "Literal"},
    {NodeKind::BinaryExpression, "BinaryExpression"},
    {NodeKind::LogicalExpression, "LogicalExpression"},
    {NodeKind::FunctionDeclaration, "FunctionDeclaration"},
    {NodeKind::FunctionExpression, "FunctionExpression"},
    {NodeKind::VariableDeclaration, "VariableDeclaration"},
    {NodeKind::VariableDeclarator, "VariableDeclarator"},
    {NodeKind::ReturnStatement, "ReturnStatement"},
    {NodeKind::BlockStatement, "BlockStatement"},
    {NodeKind::IfStatement, "IfStatement"},
    {NodeKind::AssignmentExpression, "AssignmentExpression"},
    {NodeKind::UnaryExpression, "UnaryExpression"},
    {NodeKind::ArrayExpression, "ArrayExpression"},
    {NodeKind::ObjectExpression, "ObjectExpression"},
    {NodeKind::Property, "Property"},
}};

} // namespace

const char* node_kind_name(NodeKind k) {
    for (const auto& e : kKindNames)
        if (e.kind == k) return e.name;
    return "Opaque";
}

std::optional<NodeKind> node_kind_from_name(const std::string& name) {
    for (const auto& e : kKindNames)
        if (name == e.name) return e.kind;
    return std::nullopt;
}

bool is_statement_kind(NodeKind k) {
    switch (k) {
        case NodeKind::ExpressionStatement:
        case NodeKind::EmptyStatement:
        case NodeKind::VariableDeclaration:
        case NodeKind::ReturnStatement:
        case NodeKind::BlockStatement:
        case NodeKind::IfStatement:
        case NodeKind::FunctionDeclaration:
            return true;
        default:
            return false;
    }
}

bool is_expression_kind(NodeKind k) {
    switch (k) {
        case NodeKind::Identifier:
        case NodeKind::Literal:
        case NodeKind::CallExpression:
        case NodeKind::MemberExpression:
        case NodeKind::BinaryExpression:
        case NodeKind::LogicalExpression:
        case NodeKind::AssignmentExpression:
        case NodeKind::UnaryExpression:
        case NodeKind::ArrayExpression:
        case NodeKind::ObjectExpression:
        case NodeKind::FunctionExpression:
            return true;
        default:
            return false;
    }
}

AstNodePtr make_node(NodeKind kind) {
    auto n = std::make_shared<AstNode>();
    n->kind = kind;
    return n;
}

AstNodePtr make_identifier(const std::string& name) {
    auto n = make_node(NodeKind::Identifier);
    n->name = name;
    return n;
}

AstNodePtr make_literal(const std::string& lexeme, LiteralTag tag) {
    auto n = make_node(NodeKind::Literal);
    n->value = lexeme;
    n->literal_tag = tag;
    return n;
}

AstNodePtr clone(const AstNode& node) {
    auto n = std::make_shared<AstNode>(node);
    n->children.clear();
    n->children.reserve(node.children.size());
    for (const auto& c : node.children) n->children.push_back(clone(*c));
    return n;
}

bool equal_ignoring_spans(const AstNode& a, const AstNode& b) {
    if (a.kind != b.kind || a.name != b.name || a.value != b.value || a.op != b.op ||
        a.computed != b.computed || a.children.size() != b.children.size())
        return false;
    if (a.kind == NodeKind::Literal && a.literal_tag != b.literal_tag) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!equal_ignoring_spans(*a.children[i], *b.children[i])) return false;
    return true;
}

std::size_t count_nodes(const AstNode& node) {
    std::size_t n = 1;
    for (const auto& c : node.children) n += count_nodes(*c);
    return n;
}

AstNode* find_node(AstNode& root, const NodePath& path) {
    AstNode* cur = &root;
    for (std::size_t idx : path) {
        if (idx >= cur->children.size()) return nullptr;
        cur = cur->children[idx].get();
    }
    return cur;
}

const AstNode* find_node(const AstNode& root, const NodePath& path) {
    return find_node(const_cast<AstNode&>(root), path);
}

const std::vector<std::string>& js_keywords() {
    static const std::vector<std::string> kw{
        "break",    "case",     "catch",  "class",  "const",    "continue", "debugger",
        "default",  "delete",   "do",     "else",   "enum",     "export",   "extends",
        "false",    "finally",  "for",    "function", "if",     "implements", "import",
        "in",       "instanceof", "interface", "let", "new",    "null",     "package",
        "private",  "protected", "public", "return", "static",  "super",    "switch",
        "this",     "throw",    "true",   "try",    "typeof",   "var",      "void",
        "while",    "with",     "yield",
    };
    return kw;
}

bool is_js_keyword(const std::string& word) {
    const auto& kw = js_keywords();
    return std::find(kw.begin(), kw.end(), word) != kw.end();
}

} // namespace namefix
