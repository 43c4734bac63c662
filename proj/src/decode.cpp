#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

#include "namefix/errors.hpp"
#include "namefix/representation.hpp"
#include "representation_detail.hpp"

namespace namefix {

namespace detail {

bool is_palette_word(const std::string& t) {
    static const std::unordered_set<std::string> words = {
        "number", "string",    "boolean", "function", "object",
        "array",  "regex",     "null",    "undefined", "unknown"};
    return words.count(t) != 0;
}

bool is_structural_token(const std::string& t) {
    if (t == "End" || t == "Else") return true;
    return node_kind_from_name(t).has_value();
}

LiteralTag literal_tag_from_lexeme(const std::string& lexeme) {
    if (!lexeme.empty() && (lexeme.front() == '"' || lexeme.front() == '\'')) {
        return LiteralTag::String;
    }
    if (lexeme == "true" || lexeme == "false") return LiteralTag::Boolean;
    if (lexeme == "null") return LiteralTag::Null;
    if (!lexeme.empty() && lexeme.front() == '/') return LiteralTag::Regex;
    return LiteralTag::Number;
}

std::optional<std::string> canonical_abstract_token(const std::string& t) {
    std::size_t sep = t.find('_');
    if (sep == std::string::npos || sep == 0 || sep + 1 >= t.size()) return std::nullopt;
    std::string suffix = t.substr(sep + 1);
    for (char c : suffix) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return std::nullopt;
    }
    std::string prefix = t.substr(0, sep);
    std::string folded;
    for (char c : prefix) {
        folded.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    static const std::array<const char*, 4> categories = {"Var", "Number", "String", "Method"};
    for (const char* canon : categories) {
        std::string lowered;
        for (const char* p = canon; *p != '\0'; ++p) {
            lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(*p))));
        }
        if (folded == lowered) return std::string(canon) + "_" + suffix;
    }
    return std::nullopt;
}

}  // namespace detail

namespace {

// Token texts that can never be a name or literal: punctuation, operators,
// and the marker prefixes themselves. Used to tell a type annotation from an
// identifier that happens to share its spelling with a type word.
bool is_nameish(const std::string& t) {
    static const std::unordered_set<std::string> blocked = {
        "(",   ")",   "[",  "]",  "{",  "}",  ",",  ";",   ".",   ":",
        "=",   "==",  "===", "!=", "!==", "<",  "<=", ">",   ">=",  "+",
        "-",   "*",   "/",  "%",  "&&", "||", "!",  "~",   "&",   "|",
        "^",   "<<",  ">>", ">>>", "+=", "-=", "*=", "/=",  "%=",  "&=",
        "|=",  "^=",  "<<=", ">>=", ">>>=", "typeof", "void", "delete",
        "instanceof", "in", "ID", "LIT"};
    return blocked.count(t) == 0;
}

std::vector<std::string> decode_wt2(const std::vector<std::string>& tokens,
                                    const DecodeAux& aux) {
    auto joiner = [](const std::string& t) -> const char* {
        if (t == "<CAMEL>" || t == "<NUM>") return "";
        if (t == "<UNDER>") return "_";
        return nullptr;
    };
    std::vector<std::string> out;
    std::size_t next_original = 0;
    std::size_t i = 0;
    while (i < tokens.size()) {
        const std::string& t = tokens[i];
        if (t == "<STRING>" || t == "<NUMBER>") {
            if (aux.originals == nullptr) {
                throw MissingMap("subtoken decoding needs the replaced lexemes");
            }
            if (next_original >= aux.originals->size()) {
                throw MalformedEncoding("more placeholders than recorded lexemes");
            }
            out.push_back((*aux.originals)[next_original++]);
            ++i;
            continue;
        }
        if (joiner(t) != nullptr) {
            throw MalformedEncoding("joiner marker without a leading piece");
        }
        std::string word = t;
        while (i + 1 < tokens.size() && joiner(tokens[i + 1]) != nullptr) {
            if (i + 2 >= tokens.size()) {
                throw MalformedEncoding("joiner marker without a trailing piece");
            }
            const std::string& piece = tokens[i + 2];
            if (joiner(piece) != nullptr || piece == "<STRING>" || piece == "<NUMBER>") {
                throw MalformedEncoding("joiner marker without a trailing piece");
            }
            word += joiner(tokens[i + 1]);
            word += piece;
            i += 2;
        }
        out.push_back(word);
        ++i;
    }
    return out;
}

// DB1 and DB2 share one decoder: drop the ID/LIT markers, and drop a type
// word when it sits between a marker and the name it annotates.
std::vector<std::string> decode_db(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < tokens.size()) {
        const std::string& t = tokens[i];
        if (t == "ID" || t == "LIT") {
            if (i + 1 >= tokens.size()) {
                throw MalformedEncoding("marker without a following token");
            }
            if (detail::is_palette_word(tokens[i + 1]) && i + 2 < tokens.size() &&
                is_nameish(tokens[i + 2])) {
                i += 2; // skip marker and type word
            } else {
                i += 1; // skip marker only
            }
            continue;
        }
        out.push_back(t);
        ++i;
    }
    return out;
}

std::vector<std::string> decode_tf1(const std::vector<std::string>& tokens,
                                    const DecodeAux& aux) {
    std::vector<std::string> out;
    for (const std::string& t : tokens) {
        auto canon = detail::canonical_abstract_token(t);
        if (!canon) {
            out.push_back(t);
            continue;
        }
        if (aux.abstraction == nullptr) {
            throw MissingMap("abstraction decoding needs the slot map");
        }
        auto it = aux.abstraction->find(*canon);
        if (it == aux.abstraction->end()) {
            throw MalformedEncoding("unknown abstraction slot '" + t + "'");
        }
        out.push_back(it->second);
    }
    return out;
}

// ---- AST1/AST2: tree reconstruction --------------------------------------

class AstStreamParser {
public:
    AstStreamParser(const std::vector<std::string>& tokens, bool typed)
        : tokens_(tokens), typed_(typed) {}

    AstNodePtr parse_root() {
        AstNodePtr root = parse_node();
        if (pos_ != tokens_.size()) {
            throw MalformedEncoding("trailing tokens after the linearized tree");
        }
        return root;
    }

private:
    const std::vector<std::string>& tokens_;
    bool typed_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= tokens_.size(); }

    const std::string& peek(std::size_t ahead = 0) const {
        static const std::string empty;
        return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : empty;
    }

    std::string next(const char* what) {
        if (at_end()) throw MalformedEncoding(std::string("missing ") + what);
        return tokens_[pos_++];
    }

    bool peek_is_expression_kind() const {
        auto k = node_kind_from_name(peek());
        return k.has_value() && is_expression_kind(*k);
    }

    void strip_annotation(NodeKind kind) {
        if (!typed_ || at_end()) return;
        if (kind == NodeKind::Identifier || kind == NodeKind::Literal) {
            // The next token could be the name itself; only a type word that
            // is followed by a further name token is an annotation.
            if (detail::is_palette_word(peek()) && pos_ + 1 < tokens_.size() &&
                !detail::is_structural_token(peek(1))) {
                ++pos_;
            }
            return;
        }
        if (detail::is_palette_word(peek())) ++pos_;
    }

    AstNodePtr parse_child_of_kind(NodeKind expected, const char* what) {
        AstNodePtr child = parse_node();
        if (child->kind != expected) {
            throw MalformedEncoding(std::string("expected ") + node_kind_name(expected) +
                                    " as " + what);
        }
        return child;
    }

    void parse_variadic_children(AstNode& node) {
        while (!at_end() && peek() != "End" && peek() != "Else") {
            node.children.push_back(parse_node());
        }
        if (!at_end() && peek() == "End") ++pos_;
    }

    AstNodePtr parse_node() {
        std::string kind_token = next("node kind");
        auto kind = node_kind_from_name(kind_token);
        if (!kind) throw MalformedEncoding("unknown node kind '" + kind_token + "'");
        strip_annotation(*kind);

        AstNodePtr node = make_node(*kind);
        switch (*kind) {
            case NodeKind::Identifier:
                node->name = next("identifier name");
                break;
            case NodeKind::Literal:
                node->value = next("literal lexeme");
                node->literal_tag = detail::literal_tag_from_lexeme(node->value);
                break;
            case NodeKind::BinaryExpression:
            case NodeKind::LogicalExpression:
                node->op = next("operator");
                node->children.push_back(parse_node());
                node->children.push_back(parse_node());
                break;
            case NodeKind::AssignmentExpression:
                node->op = next("operator");
                node->children.push_back(parse_node());
                node->children.push_back(parse_node());
                break;
            case NodeKind::UnaryExpression:
                node->op = next("operator");
                node->children.push_back(parse_node());
                break;
            case NodeKind::ExpressionStatement:
                node->children.push_back(parse_node());
                break;
            case NodeKind::EmptyStatement:
                break;
            case NodeKind::ReturnStatement:
                if (peek_is_expression_kind()) node->children.push_back(parse_node());
                break;
            case NodeKind::VariableDeclaration: {
                node->name = next("declaration keyword");
                if (node->name != "var" && node->name != "let" && node->name != "const") {
                    throw MalformedEncoding("unknown declaration keyword '" + node->name + "'");
                }
                if (peek() != "VariableDeclarator") {
                    throw MalformedEncoding("declaration without declarators");
                }
                while (peek() == "VariableDeclarator") {
                    node->children.push_back(parse_node());
                }
                break;
            }
            case NodeKind::VariableDeclarator:
                node->children.push_back(
                    parse_child_of_kind(NodeKind::Identifier, "declared name"));
                if (peek_is_expression_kind()) node->children.push_back(parse_node());
                break;
            case NodeKind::IfStatement:
                node->children.push_back(parse_node());
                node->children.push_back(parse_node());
                if (peek() == "Else") {
                    ++pos_;
                    node->children.push_back(parse_node());
                }
                break;
            case NodeKind::Program:
            case NodeKind::BlockStatement:
            case NodeKind::ArrayExpression:
                parse_variadic_children(*node);
                break;
            case NodeKind::CallExpression:
                node->children.push_back(parse_node());
                parse_variadic_children(*node);
                break;
            case NodeKind::ObjectExpression:
                parse_variadic_children(*node);
                for (const auto& c : node->children) {
                    if (c->kind != NodeKind::Property) {
                        throw MalformedEncoding("object member is not a property");
                    }
                }
                break;
            case NodeKind::Property: {
                AstNodePtr key = parse_node();
                if (key->kind != NodeKind::Identifier && key->kind != NodeKind::Literal) {
                    throw MalformedEncoding("property key must be a name or literal");
                }
                node->children.push_back(std::move(key));
                node->children.push_back(parse_node());
                break;
            }
            case NodeKind::MemberExpression:
                if (peek() == "computed") {
                    ++pos_;
                    node->computed = true;
                }
                node->children.push_back(parse_node());
                node->children.push_back(parse_node());
                break;
            case NodeKind::FunctionDeclaration:
            case NodeKind::FunctionExpression:
                if (!at_end() && !detail::is_structural_token(peek())) {
                    node->name = next("function name");
                }
                while (peek() == "Identifier") {
                    node->children.push_back(parse_node());
                }
                node->children.push_back(
                    parse_child_of_kind(NodeKind::BlockStatement, "function body"));
                break;
            default:
                throw MalformedEncoding(std::string("node kind '") + kind_token +
                                        "' cannot appear in a linearized tree");
        }
        return node;
    }
};

std::vector<std::string> decode_ast(const std::vector<std::string>& tokens, bool typed) {
    AstStreamParser parser(tokens, typed);
    AstNodePtr root = parser.parse_root();
    if (root->kind != NodeKind::Program || root->children.size() != 1) {
        throw MalformedEncoding("linearized tree must hold exactly one statement");
    }
    return token_texts(print_tokens(*root->children[0]));
}

}  // namespace

std::vector<std::string> decode(RepresentationId rep, const std::vector<std::string>& tokens,
                                const DecodeAux& aux) {
    switch (rep) {
        case RepresentationId::WT1:
            return tokens;
        case RepresentationId::WT2:
            return decode_wt2(tokens, aux);
        case RepresentationId::DB1:
        case RepresentationId::DB2:
            return decode_db(tokens);
        case RepresentationId::TF1:
            return decode_tf1(tokens, aux);
        case RepresentationId::AST1:
            return decode_ast(tokens, false);
        case RepresentationId::AST2:
            return decode_ast(tokens, true);
        default:
            throw NotPatchable(std::string(representation_name(rep)) +
                               " drops information and cannot be decoded");
    }
}

}  // namespace namefix
