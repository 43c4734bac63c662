#ifndef NAMEFIX_AST_HPP
#define NAMEFIX_AST_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace namefix {

enum class TokenCategory {
    Identifier,
    LiteralNumber,
    LiteralString,
    LiteralOther, // true / false / null / regex lexemes
    Punctuation,
    Keyword,
    Operator,
    Marker, // representation-level tokens such as <CAMEL> or ID
};

struct Token {
    std::string text; // never empty, never contains whitespace
    TokenCategory cat = TokenCategory::Identifier;
};

using TokenSeq = std::vector<Token>;

std::vector<std::string> token_texts(const TokenSeq& toks);
std::string join_tokens(const std::vector<std::string>& texts);
std::string join_tokens(const TokenSeq& toks);

enum class NodeKind {
    Program,
    ExpressionStatement,
    EmptyStatement,
    CallExpression,
    MemberExpression,
    Identifier,
    Literal,
    BinaryExpression,
    LogicalExpression,
    FunctionDeclaration,
    FunctionExpression,
    VariableDeclaration,
    VariableDeclarator,
    ReturnStatement,
    BlockStatement,
    IfStatement,
    AssignmentExpression,
    UnaryExpression,
    ArrayExpression,
    ObjectExpression,
    Property,
    Opaque, // ingested node outside the subset; kind string kept verbatim
};

const char* node_kind_name(NodeKind k);
std::optional<NodeKind> node_kind_from_name(const std::string& name);
bool is_statement_kind(NodeKind k);
bool is_expression_kind(NodeKind k);

enum class LiteralTag { Number, String, Boolean, Null, Regex };

struct Span {
    std::size_t start = 0;
    std::size_t end = 0;
};

// Child layout conventions:
//   Program / BlockStatement      statements...
//   ExpressionStatement           [expression]
//   CallExpression                [callee, arguments...]
//   MemberExpression              [object, property]          (+ computed)
//   BinaryExpression et al.       [left, right]               (+ op)
//   UnaryExpression               [argument]                  (+ op, prefix only)
//   FunctionDeclaration/Expression[params..., body]           (name; "" = anonymous)
//   VariableDeclaration           declarators...              (name = "var"/"let"/"const")
//   VariableDeclarator            [id] or [id, init]
//   ReturnStatement               [] or [argument]
//   IfStatement                   [test, consequent(, alternate)]
//   ArrayExpression               elements...
//   ObjectExpression              properties...
//   Property                      [key, value]
//   Opaque                        ingested children in document order (name = verbatim type)
struct AstNode;
using AstNodePtr = std::shared_ptr<AstNode>;

struct AstNode {
    NodeKind kind = NodeKind::Program;
    std::string name;                       // identifier text / function name / opaque type
    std::string value;                      // literal lexeme, exactly as printable
    LiteralTag literal_tag = LiteralTag::Number;
    std::string op;                         // operator text
    bool computed = false;                  // computed member access
    std::vector<AstNodePtr> children;
    std::optional<Span> span;
};

AstNodePtr make_node(NodeKind kind);
AstNodePtr make_identifier(const std::string& name);
AstNodePtr make_literal(const std::string& lexeme, LiteralTag tag);
AstNodePtr clone(const AstNode& node);
bool equal_ignoring_spans(const AstNode& a, const AstNode& b);
std::size_t count_nodes(const AstNode& node);

// Child-index path from a root node; empty path addresses the root itself.
using NodePath = std::vector<std::size_t>;
AstNode* find_node(AstNode& root, const NodePath& path);
const AstNode* find_node(const AstNode& root, const NodePath& path);

// Recursive-descent parser for the ES5 statement/expression subset.
// Throws ParseError with 1-based line/column on input outside the subset.
// A statement's terminating ';' may be omitted before '}' or end of input.
AstNodePtr parse_js(const std::string& source);

// Builds the same AST from ESTree JSON (as produced by esprima and friends).
// Unknown node types are preserved as Opaque nodes, children in document
// order. Throws IngestError on malformed documents.
AstNodePtr ingest_estree(const std::string& json_text);

// Inverse of ingest_estree for the supported subset: a compact ESTree JSON
// document that ingests back to an equal tree. Used by the intermediate
// files, which must hold ingested statements (regex literals and all), not
// just ones the parser could re-read from source. Throws PrintError on
// Opaque nodes.
std::string to_estree_json(const AstNode& node);

// Prints a node back to a whitespace-free token stream that re-parses to an
// equal tree. The root statement's own terminator is omitted; statements
// nested inside the root keep theirs. Throws PrintError on Opaque nodes.
TokenSeq print_tokens(const AstNode& node);

// print_tokens plus each printed node's [begin, end) token range. Used by
// encoders that splice or annotate argument sub-ranges.
struct PrintedTokens {
    TokenSeq tokens;
    std::unordered_map<const AstNode*, std::pair<std::size_t, std::size_t>> ranges;
};
PrintedTokens print_tokens_with_ranges(const AstNode& node);

const std::vector<std::string>& js_keywords();
bool is_js_keyword(const std::string& word);

} // namespace namefix

#endif
