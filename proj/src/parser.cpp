#include "namefix/ast.hpp"
#include "namefix/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

// Hand-rolled lexer and recursive-descent parser for the supported ES5
// subset. Anything outside the subset (regex literals, this, loops, ?:,
// ++/--, sequence commas) raises ParseError; richer programs arrive through
// ingest_estree instead.

namespace namefix {

namespace {

struct Lexeme {
    std::string text;
    TokenCategory cat = TokenCategory::Punctuation;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t begin = 0;
    std::size_t end = 0;
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_hex_digit(char c) {
    return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

const char* kMultiOps[] = {
    ">>>=", "===", "!==", ">>>", "<<=", ">>=", "==", "!=", "<=", ">=",
    "&&",   "||",  "<<",  ">>",  "+=",  "-=",  "*=", "/=", "%=", "&=",
    "|=",   "^=",
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Lexeme> run() {
        std::vector<Lexeme> out;
        while (true) {
            skip_trivia();
            if (pos_ >= src_.size()) break;
            out.push_back(next_lexeme());
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, col_, msg); }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
                advance();
                advance();
                while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/'))
                    advance();
                if (pos_ + 1 >= src_.size()) fail("unterminated block comment");
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    Lexeme begin_lexeme() const {
        Lexeme l;
        l.line = line_;
        l.col = col_;
        l.begin = pos_;
        return l;
    }

    Lexeme next_lexeme() {
        Lexeme l = begin_lexeme();
        char c = src_[pos_];
        if (is_ident_start(c)) {
            while (pos_ < src_.size() && is_ident_part(src_[pos_])) {
                l.text += src_[pos_];
                advance();
            }
            if (l.text == "true" || l.text == "false" || l.text == "null")
                l.cat = TokenCategory::LiteralOther;
            else if (is_js_keyword(l.text))
                l.cat = TokenCategory::Keyword;
            else
                l.cat = TokenCategory::Identifier;
        } else if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            lex_number(l);
        } else if (c == '"' || c == '\'') {
            lex_string(l);
        } else {
            lex_operator(l);
        }
        l.end = pos_;
        return l;
    }

    void lex_number(Lexeme& l) {
        l.cat = TokenCategory::LiteralNumber;
        if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
            (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X')) {
            l.text += src_[pos_];
            advance();
            l.text += src_[pos_];
            advance();
            if (pos_ >= src_.size() || !is_hex_digit(src_[pos_])) fail("invalid hex literal");
            while (pos_ < src_.size() && is_hex_digit(src_[pos_])) {
                l.text += src_[pos_];
                advance();
            }
        } else {
            while (pos_ < src_.size() && is_digit(src_[pos_])) {
                l.text += src_[pos_];
                advance();
            }
            if (pos_ < src_.size() && src_[pos_] == '.') {
                l.text += '.';
                advance();
                while (pos_ < src_.size() && is_digit(src_[pos_])) {
                    l.text += src_[pos_];
                    advance();
                }
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                l.text += src_[pos_];
                advance();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                    l.text += src_[pos_];
                    advance();
                }
                if (pos_ >= src_.size() || !is_digit(src_[pos_])) fail("invalid exponent");
                while (pos_ < src_.size() && is_digit(src_[pos_])) {
                    l.text += src_[pos_];
                    advance();
                }
            }
        }
        if (pos_ < src_.size() && is_ident_start(src_[pos_])) fail("invalid number literal");
    }

    // String lexemes keep their quotes and escapes but never contain raw
    // whitespace: spaces and friends are canonicalized to \uXXXX escapes so
    // tokens stay space-joinable. The escape denotes the same string value.
    void lex_string(Lexeme& l) {
        l.cat = TokenCategory::LiteralString;
        char quote = src_[pos_];
        l.text += quote;
        advance();
        while (true) {
            if (pos_ >= src_.size()) fail("unterminated string literal");
            char c = src_[pos_];
            if (c == quote) {
                l.text += quote;
                advance();
                break;
            }
            if (c == '\n' || c == '\r') fail("newline in string literal");
            if (c == '\\') {
                advance();
                if (pos_ >= src_.size()) fail("unterminated string literal");
                char e = src_[pos_];
                if (e == ' ')
                    l.text += "\\u0020"; // "\ " is an identity escape for the space
                else if (e == '\t')
                    l.text += "\\u0009";
                else {
                    l.text += '\\';
                    l.text += e;
                }
                advance();
                continue;
            }
            if (c == ' ')
                l.text += "\\u0020";
            else if (c == '\t')
                l.text += "\\u0009";
            else if (c == '\v')
                l.text += "\\u000b";
            else if (c == '\f')
                l.text += "\\u000c";
            else
                l.text += c;
            advance();
        }
    }

    void lex_operator(Lexeme& l) {
        for (const char* op : kMultiOps) {
            std::size_t n = std::string(op).size();
            if (src_.compare(pos_, n, op) == 0) {
                l.text = op;
                l.cat = TokenCategory::Operator;
                for (std::size_t i = 0; i < n; ++i) advance();
                return;
            }
        }
        char c = src_[pos_];
        static const std::string punct = "()[]{},;.:";
        static const std::string single_ops = "+-*/%<>=!~&|^?";
        if (punct.find(c) != std::string::npos) {
            l.cat = TokenCategory::Punctuation;
        } else if (single_ops.find(c) != std::string::npos) {
            l.cat = TokenCategory::Operator;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        l.text = c;
        advance();
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Lexeme> lexemes) : toks_(std::move(lexemes)) {}

    AstNodePtr program() {
        auto prog = make_node(NodeKind::Program);
        std::size_t begin = at_end() ? 0 : peek().begin;
        while (!at_end()) prog->children.push_back(statement());
        prog->span = Span{begin, last_end_};
        return prog;
    }

private:
    bool at_end() const { return pos_ >= toks_.size(); }

    const Lexeme& peek(std::size_t ahead = 0) const {
        static const Lexeme eof{};
        return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : eof;
    }

    [[noreturn]] void fail(const std::string& msg) {
        if (at_end()) {
            std::size_t line = toks_.empty() ? 1 : toks_.back().line;
            std::size_t col = toks_.empty() ? 1 : toks_.back().col;
            throw ParseError(line, col, msg + " (at end of input)");
        }
        throw ParseError(peek().line, peek().col, msg + " near '" + peek().text + "'");
    }

    const Lexeme& take() {
        if (at_end()) fail("unexpected end of input");
        const Lexeme& l = toks_[pos_++];
        last_end_ = l.end;
        return l;
    }

    bool looking_at(const std::string& text) const { return !at_end() && peek().text == text; }

    void expect(const std::string& text) {
        if (!looking_at(text)) fail("expected '" + text + "'");
        take();
    }

    // ';' may be omitted before '}' or end of input.
    void terminator() {
        if (looking_at(";")) {
            take();
            return;
        }
        if (at_end() || looking_at("}")) return;
        fail("expected ';'");
    }

    AstNodePtr finish(AstNodePtr node, std::size_t begin) {
        node->span = Span{begin, last_end_};
        return node;
    }

    AstNodePtr statement() {
        const Lexeme& l = peek();
        if (l.text == "{") return block();
        if (l.text == "var" || l.text == "let" || l.text == "const") return var_declaration();
        if (l.text == "if") return if_statement();
        if (l.text == "return") return return_statement();
        if (l.text == "function") return function_node(NodeKind::FunctionDeclaration);
        if (l.text == ";") {
            std::size_t begin = l.begin;
            take();
            return finish(make_node(NodeKind::EmptyStatement), begin);
        }
        std::size_t begin = l.begin;
        auto stmt = make_node(NodeKind::ExpressionStatement);
        stmt->children.push_back(expression());
        terminator();
        return finish(stmt, begin);
    }

    AstNodePtr block() {
        std::size_t begin = peek().begin;
        expect("{");
        auto b = make_node(NodeKind::BlockStatement);
        while (!looking_at("}")) {
            if (at_end()) fail("expected '}'");
            b->children.push_back(statement());
        }
        expect("}");
        return finish(b, begin);
    }

    AstNodePtr var_declaration() {
        std::size_t begin = peek().begin;
        auto decl = make_node(NodeKind::VariableDeclaration);
        decl->name = take().text; // var / let / const
        while (true) {
            decl->children.push_back(declarator());
            if (looking_at(","))
                take();
            else
                break;
        }
        terminator();
        return finish(decl, begin);
    }

    AstNodePtr declarator() {
        std::size_t begin = peek().begin;
        auto d = make_node(NodeKind::VariableDeclarator);
        d->children.push_back(identifier());
        if (looking_at("=")) {
            take();
            d->children.push_back(assignment_expression());
        }
        return finish(d, begin);
    }

    AstNodePtr if_statement() {
        std::size_t begin = peek().begin;
        expect("if");
        auto node = make_node(NodeKind::IfStatement);
        expect("(");
        node->children.push_back(expression());
        expect(")");
        node->children.push_back(statement());
        if (looking_at("else")) {
            take();
            node->children.push_back(statement());
        }
        return finish(node, begin);
    }

    AstNodePtr return_statement() {
        std::size_t begin = peek().begin;
        expect("return");
        auto node = make_node(NodeKind::ReturnStatement);
        if (!looking_at(";") && !looking_at("}") && !at_end())
            node->children.push_back(expression());
        terminator();
        return finish(node, begin);
    }

    AstNodePtr function_node(NodeKind kind) {
        std::size_t begin = peek().begin;
        expect("function");
        auto fn = make_node(kind);
        if (!at_end() && peek().cat == TokenCategory::Identifier)
            fn->name = take().text;
        else if (kind == NodeKind::FunctionDeclaration)
            fail("function declarations require a name");
        expect("(");
        while (!looking_at(")")) {
            fn->children.push_back(identifier());
            if (looking_at(","))
                take();
            else
                break;
        }
        expect(")");
        fn->children.push_back(block());
        return finish(fn, begin);
    }

    AstNodePtr identifier() {
        if (at_end() || peek().cat != TokenCategory::Identifier) fail("expected identifier");
        std::size_t begin = peek().begin;
        return finish(make_identifier(take().text), begin);
    }

    AstNodePtr expression() { return assignment_expression(); }

    bool at_assign_op() const {
        static const std::vector<std::string> ops{"=",  "+=", "-=",  "*=",  "/=", "%=",
                                                  "&=", "|=", "^=",  "<<=", ">>=", ">>>="};
        if (at_end()) return false;
        const std::string& t = peek().text;
        for (const auto& op : ops)
            if (t == op) return true;
        return false;
    }

    AstNodePtr assignment_expression() {
        std::size_t begin = at_end() ? 0 : peek().begin;
        AstNodePtr left = logical_or();
        if (at_assign_op()) {
            if (left->kind != NodeKind::Identifier && left->kind != NodeKind::MemberExpression)
                fail("invalid assignment target");
            auto node = make_node(NodeKind::AssignmentExpression);
            node->op = take().text;
            node->children.push_back(left);
            node->children.push_back(assignment_expression());
            return finish(node, begin);
        }
        return left;
    }

    AstNodePtr binary_chain(NodeKind kind, const std::vector<std::string>& ops,
                            AstNodePtr (Parser::*next)()) {
        std::size_t begin = at_end() ? 0 : peek().begin;
        AstNodePtr left = (this->*next)();
        while (!at_end()) {
            const std::string& t = peek().text;
            bool match = false;
            for (const auto& op : ops)
                if (t == op) {
                    match = true;
                    break;
                }
            if (!match) break;
            auto node = make_node(kind);
            node->op = take().text;
            node->children.push_back(left);
            node->children.push_back((this->*next)());
            left = finish(node, begin);
        }
        return left;
    }

    AstNodePtr logical_or() {
        return binary_chain(NodeKind::LogicalExpression, {"||"}, &Parser::logical_and);
    }
    AstNodePtr logical_and() {
        return binary_chain(NodeKind::LogicalExpression, {"&&"}, &Parser::bit_or);
    }
    AstNodePtr bit_or() {
        return binary_chain(NodeKind::BinaryExpression, {"|"}, &Parser::bit_xor);
    }
    AstNodePtr bit_xor() {
        return binary_chain(NodeKind::BinaryExpression, {"^"}, &Parser::bit_and);
    }
    AstNodePtr bit_and() {
        return binary_chain(NodeKind::BinaryExpression, {"&"}, &Parser::equality);
    }
    AstNodePtr equality() {
        return binary_chain(NodeKind::BinaryExpression, {"==", "!=", "===", "!=="},
                            &Parser::relational);
    }
    AstNodePtr relational() {
        return binary_chain(NodeKind::BinaryExpression, {"<", "<=", ">", ">=", "instanceof", "in"},
                            &Parser::shift);
    }
    AstNodePtr shift() {
        return binary_chain(NodeKind::BinaryExpression, {"<<", ">>", ">>>"}, &Parser::additive);
    }
    AstNodePtr additive() {
        return binary_chain(NodeKind::BinaryExpression, {"+", "-"}, &Parser::multiplicative);
    }
    AstNodePtr multiplicative() {
        return binary_chain(NodeKind::BinaryExpression, {"*", "/", "%"}, &Parser::unary);
    }

    AstNodePtr unary() {
        static const std::vector<std::string> ops{"!", "~", "+", "-", "typeof", "void", "delete"};
        if (!at_end()) {
            const std::string& t = peek().text;
            for (const auto& op : ops) {
                if (t == op) {
                    std::size_t begin = peek().begin;
                    auto node = make_node(NodeKind::UnaryExpression);
                    node->op = take().text;
                    node->children.push_back(unary());
                    return finish(node, begin);
                }
            }
        }
        return call_member();
    }

    AstNodePtr call_member() {
        std::size_t begin = at_end() ? 0 : peek().begin;
        AstNodePtr node = primary();
        while (!at_end()) {
            if (looking_at(".")) {
                take();
                auto member = make_node(NodeKind::MemberExpression);
                member->children.push_back(node);
                member->children.push_back(identifier());
                node = finish(member, begin);
            } else if (looking_at("[")) {
                take();
                auto member = make_node(NodeKind::MemberExpression);
                member->computed = true;
                member->children.push_back(node);
                member->children.push_back(expression());
                expect("]");
                node = finish(member, begin);
            } else if (looking_at("(")) {
                take();
                auto call = make_node(NodeKind::CallExpression);
                call->children.push_back(node);
                while (!looking_at(")")) {
                    if (at_end()) fail("expected ')'");
                    call->children.push_back(assignment_expression());
                    if (looking_at(","))
                        take();
                    else
                        break;
                }
                expect(")");
                node = finish(call, begin);
            } else {
                break;
            }
        }
        return node;
    }

    AstNodePtr primary() {
        if (at_end()) fail("expected expression");
        const Lexeme& l = peek();
        std::size_t begin = l.begin;
        switch (l.cat) {
            case TokenCategory::LiteralNumber:
                return finish(make_literal(take().text, LiteralTag::Number), begin);
            case TokenCategory::LiteralString:
                return finish(make_literal(take().text, LiteralTag::String), begin);
            case TokenCategory::LiteralOther: {
                LiteralTag tag = l.text == "null" ? LiteralTag::Null : LiteralTag::Boolean;
                return finish(make_literal(take().text, tag), begin);
            }
            case TokenCategory::Identifier:
                return identifier();
            default:
                break;
        }
        if (l.text == "(") {
            take();
            AstNodePtr inner = expression();
            expect(")");
            return inner;
        }
        if (l.text == "[") return array_literal();
        if (l.text == "{") return object_literal();
        if (l.text == "function") return function_node(NodeKind::FunctionExpression);
        fail("unexpected token");
    }

    AstNodePtr array_literal() {
        std::size_t begin = peek().begin;
        expect("[");
        auto arr = make_node(NodeKind::ArrayExpression);
        while (!looking_at("]")) {
            if (at_end()) fail("expected ']'");
            arr->children.push_back(assignment_expression());
            if (looking_at(","))
                take();
            else
                break;
        }
        expect("]");
        return finish(arr, begin);
    }

    AstNodePtr object_literal() {
        std::size_t begin = peek().begin;
        expect("{");
        auto obj = make_node(NodeKind::ObjectExpression);
        while (!looking_at("}")) {
            if (at_end()) fail("expected '}'");
            obj->children.push_back(property());
            if (looking_at(","))
                take();
            else
                break;
        }
        expect("}");
        return finish(obj, begin);
    }

    AstNodePtr property() {
        std::size_t begin = peek().begin;
        auto prop = make_node(NodeKind::Property);
        const Lexeme& l = peek();
        if (l.cat == TokenCategory::Identifier)
            prop->children.push_back(identifier());
        else if (l.cat == TokenCategory::LiteralString)
            prop->children.push_back(make_literal(take().text, LiteralTag::String));
        else if (l.cat == TokenCategory::LiteralNumber)
            prop->children.push_back(make_literal(take().text, LiteralTag::Number));
        else
            fail("expected property key");
        expect(":");
        prop->children.push_back(assignment_expression());
        return finish(prop, begin);
    }

    std::vector<Lexeme> toks_;
    std::size_t pos_ = 0;
    std::size_t last_end_ = 0;
};

} // namespace

AstNodePtr parse_js(const std::string& source) {
    Lexer lexer(source);
    Parser parser(lexer.run());
    return parser.program();
}

} // namespace namefix
