#include "namefix/ast.hpp"
#include "namefix/errors.hpp"

// Prints ASTs back to space-joinable token streams. Invariants:
//   - output re-parses to a tree equal to the input (ignoring spans),
//   - parentheses are inserted only where precedence or statement-start
//     ambiguity ('{' / 'function') requires them,
//   - the root statement's own terminator is omitted; nested statements
//     keep theirs (see parse_js, which accepts a missing ';' at the end).

namespace namefix {

namespace {

// Higher binds tighter. Mirrors the parser's grammar levels.
int precedence(const AstNode& n) {
    switch (n.kind) {
        case NodeKind::AssignmentExpression:
            return 2;
        case NodeKind::LogicalExpression:
            return n.op == "||" ? 3 : 4;
        case NodeKind::BinaryExpression: {
            const std::string& op = n.op;
            if (op == "|") return 5;
            if (op == "^") return 6;
            if (op == "&") return 7;
            if (op == "==" || op == "!=" || op == "===" || op == "!==") return 8;
            if (op == "<" || op == "<=" || op == ">" || op == ">=" || op == "in" ||
                op == "instanceof")
                return 9;
            if (op == "<<" || op == ">>" || op == ">>>") return 10;
            if (op == "+" || op == "-") return 11;
            return 12; // * / %
        }
        case NodeKind::UnaryExpression:
            return 13;
        case NodeKind::CallExpression:
        case NodeKind::MemberExpression:
            return 14;
        default:
            return 15;
    }
}

// True when a brace-less print of this statement would end in an
// if-without-else that could capture a following 'else'.
bool dangles(const AstNode& s) {
    if (s.kind != NodeKind::IfStatement) return false;
    return s.children.size() < 3 ? true : dangles(*s.children[2]);
}

class Printer {
public:
    PrintedTokens run(const AstNode& node) {
        if (is_statement_kind(node.kind) || node.kind == NodeKind::Program)
            stmt(node, /*root=*/true);
        else
            expr(node, false);
        PrintedTokens result;
        result.tokens = std::move(out_);
        result.ranges = std::move(ranges_);
        return result;
    }

private:
    void tok(const std::string& text, TokenCategory cat) { out_.push_back(Token{text, cat}); }
    void punct(const std::string& text) { tok(text, TokenCategory::Punctuation); }
    void kw(const std::string& text) { tok(text, TokenCategory::Keyword); }
    void oper(const std::string& text) { tok(text, TokenCategory::Operator); }

    void record(const AstNode& n, std::size_t begin) {
        ranges_.emplace(&n, std::make_pair(begin, out_.size()));
    }

    void stmt(const AstNode& n, bool root) {
        std::size_t begin = out_.size();
        switch (n.kind) {
            case NodeKind::Program:
                for (const auto& c : n.children) stmt(*c, false);
                break;
            case NodeKind::ExpressionStatement: {
                std::size_t e0 = out_.size();
                expr(*n.children.at(0), false);
                if (out_.at(e0).text == "{" || out_.at(e0).text == "function")
                    wrap_in_parens(e0);
                if (!root) punct(";");
                break;
            }
            case NodeKind::EmptyStatement:
                punct(";"); // the ';' is the statement itself, kept even at root
                break;
            case NodeKind::VariableDeclaration:
                kw(n.name.empty() ? "var" : n.name);
                for (std::size_t i = 0; i < n.children.size(); ++i) {
                    if (i) punct(",");
                    declarator(*n.children[i]);
                }
                if (!root) punct(";");
                break;
            case NodeKind::ReturnStatement:
                kw("return");
                if (!n.children.empty()) expr(*n.children[0], false);
                if (!root) punct(";");
                break;
            case NodeKind::BlockStatement:
                punct("{");
                for (const auto& c : n.children) stmt(*c, false);
                punct("}");
                break;
            case NodeKind::IfStatement: {
                kw("if");
                punct("(");
                expr(*n.children.at(0), false);
                punct(")");
                const AstNode& consequent = *n.children.at(1);
                bool has_else = n.children.size() > 2;
                if (has_else && dangles(consequent)) {
                    punct("{");
                    stmt(consequent, false);
                    punct("}");
                } else {
                    stmt(consequent, false);
                }
                if (has_else) {
                    kw("else");
                    stmt(*n.children[2], false);
                }
                break;
            }
            case NodeKind::FunctionDeclaration:
                function(n);
                break;
            case NodeKind::Opaque:
                throw PrintError("cannot print opaque node '" + n.name + "'");
            default:
                expr(n, false);
                break;
        }
        record(n, begin);
    }

    void declarator(const AstNode& d) {
        std::size_t begin = out_.size();
        expr(*d.children.at(0), false);
        if (d.children.size() > 1) {
            oper("=");
            expr(*d.children[1], false);
        }
        record(d, begin);
    }

    void function(const AstNode& fn) {
        kw("function");
        if (!fn.name.empty()) tok(fn.name, TokenCategory::Identifier);
        punct("(");
        std::size_t nparams = fn.children.size() - 1;
        for (std::size_t i = 0; i < nparams; ++i) {
            if (i) punct(",");
            expr(*fn.children[i], false);
        }
        punct(")");
        stmt(*fn.children.back(), false);
    }

    void child(const AstNode& c, int parent_prec, bool parens_on_tie) {
        int p = precedence(c);
        expr(c, p < parent_prec || (parens_on_tie && p == parent_prec));
    }

    void binop_operand(const AstNode& c, int parent_prec) {
        bool nested = c.kind == NodeKind::BinaryExpression ||
                      c.kind == NodeKind::LogicalExpression;
        expr(c, nested || precedence(c) < parent_prec);
    }

    void expr(const AstNode& n, bool parens) {
        std::size_t begin = out_.size();
        if (parens) punct("(");
        switch (n.kind) {
            case NodeKind::Identifier:
                tok(n.name, TokenCategory::Identifier);
                break;
            case NodeKind::Literal:
                tok(n.value, literal_category(n.literal_tag));
                break;
            case NodeKind::BinaryExpression:
            case NodeKind::LogicalExpression: {
                // Operands that are themselves binary/logical are always
                // parenthesized, not only when precedence demands it: the
                // printed shape then survives operator replacement and
                // operand swaps without parens appearing or vanishing.
                int p = precedence(n);
                binop_operand(*n.children.at(0), p);
                oper(n.op);
                binop_operand(*n.children.at(1), p);
                break;
            }
            case NodeKind::AssignmentExpression:
                expr(*n.children.at(0), false);
                oper(n.op);
                child(*n.children.at(1), precedence(n), false);
                break;
            case NodeKind::UnaryExpression:
                oper(n.op);
                child(*n.children.at(0), precedence(n), false);
                break;
            case NodeKind::CallExpression: {
                child(*n.children.at(0), precedence(n), false);
                punct("(");
                for (std::size_t i = 1; i < n.children.size(); ++i) {
                    if (i > 1) punct(",");
                    expr(*n.children[i], false);
                }
                punct(")");
                break;
            }
            case NodeKind::MemberExpression:
                child(*n.children.at(0), precedence(n), false);
                if (n.computed) {
                    punct("[");
                    expr(*n.children.at(1), false);
                    punct("]");
                } else {
                    punct(".");
                    expr(*n.children.at(1), false);
                }
                break;
            case NodeKind::ArrayExpression:
                punct("[");
                for (std::size_t i = 0; i < n.children.size(); ++i) {
                    if (i) punct(",");
                    expr(*n.children[i], false);
                }
                punct("]");
                break;
            case NodeKind::ObjectExpression:
                punct("{");
                for (std::size_t i = 0; i < n.children.size(); ++i) {
                    if (i) punct(",");
                    property(*n.children[i]);
                }
                punct("}");
                break;
            case NodeKind::FunctionExpression:
                function(n);
                break;
            case NodeKind::Opaque:
                throw PrintError("cannot print opaque node '" + n.name + "'");
            default:
                throw PrintError(std::string("cannot print '") + node_kind_name(n.kind) +
                                 "' in expression position");
        }
        if (parens) punct(")");
        record(n, begin);
    }

    void property(const AstNode& p) {
        std::size_t begin = out_.size();
        expr(*p.children.at(0), false);
        punct(":");
        expr(*p.children.at(1), false);
        record(p, begin);
    }

    static TokenCategory literal_category(LiteralTag tag) {
        switch (tag) {
            case LiteralTag::Number:
                return TokenCategory::LiteralNumber;
            case LiteralTag::String:
                return TokenCategory::LiteralString;
            default:
                return TokenCategory::LiteralOther;
        }
    }

    void wrap_in_parens(std::size_t at) {
        out_.insert(out_.begin() + static_cast<std::ptrdiff_t>(at),
                    Token{"(", TokenCategory::Punctuation});
        punct(")");
        for (auto& [node, range] : ranges_) {
            if (range.first >= at) ++range.first;
            if (range.second > at) ++range.second;
        }
    }

    TokenSeq out_;
    std::unordered_map<const AstNode*, std::pair<std::size_t, std::size_t>> ranges_;
};

} // namespace

TokenSeq print_tokens(const AstNode& node) {
    Printer p;
    return p.run(node).tokens;
}

PrintedTokens print_tokens_with_ranges(const AstNode& node) {
    Printer p;
    return p.run(node);
}

} // namespace namefix
