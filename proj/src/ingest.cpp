#include "namefix/ast.hpp"
#include "namefix/errors.hpp"

#include <json.hpp>

#include <cctype>

// Builds ASTs from ESTree JSON documents (esprima, acorn, ...). Node types
// outside the parser subset are preserved as Opaque nodes, children collected
// from object-valued fields in document order, so the structural encoders can
// still traverse them. Opaque nodes cannot be printed back to source.

namespace namefix {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw IngestError(msg); }

// Tokens must stay whitespace-free; raw literal text gets the same
// canonicalization the lexer applies (value-preserving \uXXXX escapes).
std::string canonicalize_raw(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case ' ': out += "\\u0020"; break;
            case '\t': out += "\\u0009"; break;
            case '\v': out += "\\u000b"; break;
            case '\f': out += "\\u000c"; break;
            case '\n': out += "\\u000a"; break;
            case '\r': out += "\\u000d"; break;
            default: out += c;
        }
    }
    return out;
}

std::string quote_string_value(const std::string& v) {
    std::string out = "\"";
    for (char c : v) {
        if (c == '"')
            out += "\\\"";
        else if (c == '\\')
            out += "\\\\";
        else if (c == ' ')
            out += "\\u0020";
        else if (std::iscntrl(static_cast<unsigned char>(c))) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c) & 0xff);
            out += buf;
        } else
            out += c;
    }
    out += '"';
    return out;
}

std::string number_lexeme(const json& value) {
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_number_unsigned()) return std::to_string(value.get<unsigned long long>());
    json copy = value;
    return copy.dump();
}

class Ingester {
public:
    AstNodePtr node(const json& j) {
        if (!j.is_object()) fail("expected a node object");
        auto it = j.find("type");
        if (it == j.end() || !it->is_string()) fail("node without a string 'type'");
        const std::string type = it->get<std::string>();

        AstNodePtr n;
        if (type == "Program") {
            n = make_node(NodeKind::Program);
            for (const auto& s : array_field(j, "body")) n->children.push_back(node(s));
        } else if (type == "ExpressionStatement") {
            n = make_node(NodeKind::ExpressionStatement);
            n->children.push_back(node(field(j, "expression")));
        } else if (type == "EmptyStatement") {
            n = make_node(NodeKind::EmptyStatement);
        } else if (type == "CallExpression") {
            n = make_node(NodeKind::CallExpression);
            n->children.push_back(node(field(j, "callee")));
            for (const auto& a : array_field(j, "arguments")) n->children.push_back(node(a));
        } else if (type == "MemberExpression") {
            n = make_node(NodeKind::MemberExpression);
            n->computed = bool_field(j, "computed", false);
            n->children.push_back(node(field(j, "object")));
            n->children.push_back(node(field(j, "property")));
        } else if (type == "Identifier") {
            n = make_identifier(string_field(j, "name"));
        } else if (type == "Literal") {
            n = literal(j);
        } else if (type == "BinaryExpression" || type == "LogicalExpression" ||
                   type == "AssignmentExpression") {
            n = make_node(type == "BinaryExpression"   ? NodeKind::BinaryExpression
                          : type == "LogicalExpression" ? NodeKind::LogicalExpression
                                                        : NodeKind::AssignmentExpression);
            n->op = string_field(j, "operator");
            n->children.push_back(node(field(j, "left")));
            n->children.push_back(node(field(j, "right")));
        } else if (type == "UnaryExpression") {
            if (!bool_field(j, "prefix", true)) return opaque(j, type);
            n = make_node(NodeKind::UnaryExpression);
            n->op = string_field(j, "operator");
            n->children.push_back(node(field(j, "argument")));
        } else if (type == "FunctionDeclaration" || type == "FunctionExpression") {
            n = make_node(type == "FunctionDeclaration" ? NodeKind::FunctionDeclaration
                                                        : NodeKind::FunctionExpression);
            const auto id = j.find("id");
            if (id != j.end() && id->is_object()) n->name = string_field(*id, "name");
            for (const auto& p : array_field(j, "params")) n->children.push_back(node(p));
            n->children.push_back(node(field(j, "body")));
        } else if (type == "VariableDeclaration") {
            n = make_node(NodeKind::VariableDeclaration);
            n->name = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>()
                                                                  : "var";
            for (const auto& d : array_field(j, "declarations")) n->children.push_back(node(d));
        } else if (type == "VariableDeclarator") {
            n = make_node(NodeKind::VariableDeclarator);
            n->children.push_back(node(field(j, "id")));
            const auto init = j.find("init");
            if (init != j.end() && init->is_object()) n->children.push_back(node(*init));
        } else if (type == "ReturnStatement") {
            n = make_node(NodeKind::ReturnStatement);
            const auto arg = j.find("argument");
            if (arg != j.end() && arg->is_object()) n->children.push_back(node(*arg));
        } else if (type == "BlockStatement") {
            n = make_node(NodeKind::BlockStatement);
            for (const auto& s : array_field(j, "body")) n->children.push_back(node(s));
        } else if (type == "IfStatement") {
            n = make_node(NodeKind::IfStatement);
            n->children.push_back(node(field(j, "test")));
            n->children.push_back(node(field(j, "consequent")));
            const auto alt = j.find("alternate");
            if (alt != j.end() && alt->is_object()) n->children.push_back(node(*alt));
        } else if (type == "ArrayExpression") {
            n = make_node(NodeKind::ArrayExpression);
            for (const auto& e : array_field(j, "elements")) {
                if (e.is_null()) { // array hole
                    auto hole = make_node(NodeKind::Opaque);
                    hole->name = "Elision";
                    n->children.push_back(hole);
                } else {
                    n->children.push_back(node(e));
                }
            }
        } else if (type == "ObjectExpression") {
            n = make_node(NodeKind::ObjectExpression);
            for (const auto& p : array_field(j, "properties")) n->children.push_back(node(p));
        } else if (type == "Property") {
            if (bool_field(j, "computed", false) ||
                (j.contains("kind") && j["kind"].is_string() &&
                 j["kind"].get<std::string>() != "init"))
                return opaque(j, type);
            n = make_node(NodeKind::Property);
            n->children.push_back(node(field(j, "key")));
            n->children.push_back(node(field(j, "value")));
        } else {
            return opaque(j, type);
        }
        n->span = span_of(j);
        return n;
    }

private:
    static const json& field(const json& j, const char* name) {
        auto it = j.find(name);
        if (it == j.end() || !it->is_object())
            fail(std::string("missing field '") + name + "' on " + j.value("type", "?"));
        return *it;
    }

    static const json& array_field(const json& j, const char* name) {
        static const json empty = json::array();
        auto it = j.find(name);
        if (it == j.end()) return empty;
        if (!it->is_array()) fail(std::string("field '") + name + "' is not an array");
        return *it;
    }

    static std::string string_field(const json& j, const char* name) {
        auto it = j.find(name);
        if (it == j.end() || !it->is_string())
            fail(std::string("missing string field '") + name + "'");
        return it->get<std::string>();
    }

    static bool bool_field(const json& j, const char* name, bool fallback) {
        auto it = j.find(name);
        return it != j.end() && it->is_boolean() ? it->get<bool>() : fallback;
    }

    static std::optional<Span> span_of(const json& j) {
        auto r = j.find("range");
        if (r != j.end() && r->is_array() && r->size() == 2)
            return Span{(*r)[0].get<std::size_t>(), (*r)[1].get<std::size_t>()};
        auto s = j.find("start");
        auto e = j.find("end");
        if (s != j.end() && e != j.end() && s->is_number() && e->is_number())
            return Span{s->get<std::size_t>(), e->get<std::size_t>()};
        return std::nullopt;
    }

    AstNodePtr literal(const json& j) {
        AstNodePtr n;
        auto raw = j.find("raw");
        const bool has_raw = raw != j.end() && raw->is_string();
        if (j.contains("regex") && j["regex"].is_object()) {
            std::string lexeme;
            if (has_raw)
                lexeme = raw->get<std::string>();
            else
                lexeme = "/" + j["regex"].value("pattern", "") + "/" + j["regex"].value("flags", "");
            n = make_literal(canonicalize_raw(lexeme), LiteralTag::Regex);
        } else {
            auto v = j.find("value");
            if (v == j.end()) fail("Literal without value");
            if (v->is_string()) {
                n = make_literal(has_raw ? canonicalize_raw(raw->get<std::string>())
                                         : quote_string_value(v->get<std::string>()),
                                 LiteralTag::String);
            } else if (v->is_number()) {
                n = make_literal(has_raw ? canonicalize_raw(raw->get<std::string>())
                                         : number_lexeme(*v),
                                 LiteralTag::Number);
            } else if (v->is_boolean()) {
                n = make_literal(v->get<bool>() ? "true" : "false", LiteralTag::Boolean);
            } else if (v->is_null()) {
                n = make_literal("null", LiteralTag::Null);
            } else {
                fail("unsupported Literal value");
            }
        }
        return n;
    }

    AstNodePtr opaque(const json& j, const std::string& type) {
        auto n = make_node(NodeKind::Opaque);
        n->name = type;
        if (j.contains("operator") && j["operator"].is_string())
            n->op = j["operator"].get<std::string>();
        for (const auto& [key, val] : j.items()) {
            if (key == "type" || key == "range" || key == "start" || key == "end" || key == "loc")
                continue;
            if (val.is_object() && val.contains("type")) {
                n->children.push_back(node(val));
            } else if (val.is_array()) {
                for (const auto& elem : val)
                    if (elem.is_object() && elem.contains("type")) n->children.push_back(node(elem));
            }
        }
        n->span = span_of(j);
        return n;
    }
};

} // namespace

AstNodePtr ingest_estree(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw IngestError(std::string("invalid JSON: ") + e.what());
    }
    Ingester ing;
    return ing.node(doc);
}

namespace {

json estree_of(const AstNode& n) {
    json j;
    j["type"] = node_kind_name(n.kind);
    auto child = [&](std::size_t i) { return estree_of(*n.children.at(i)); };
    switch (n.kind) {
        case NodeKind::Program:
        case NodeKind::BlockStatement: {
            json body = json::array();
            for (const auto& c : n.children) body.push_back(estree_of(*c));
            j["body"] = body;
            break;
        }
        case NodeKind::ExpressionStatement:
            j["expression"] = child(0);
            break;
        case NodeKind::EmptyStatement:
            break;
        case NodeKind::CallExpression: {
            j["callee"] = child(0);
            json args = json::array();
            for (std::size_t i = 1; i < n.children.size(); ++i) args.push_back(child(i));
            j["arguments"] = args;
            break;
        }
        case NodeKind::MemberExpression:
            j["computed"] = n.computed;
            j["object"] = child(0);
            j["property"] = child(1);
            break;
        case NodeKind::Identifier:
            j["name"] = n.name;
            break;
        case NodeKind::Literal:
            // The ingester reads the text from "raw"; "value" only selects
            // the literal family, so a placeholder of the right JSON type
            // is enough.
            switch (n.literal_tag) {
                case LiteralTag::Number:
                    j["value"] = 0;
                    break;
                case LiteralTag::String:
                    j["value"] = "";
                    break;
                case LiteralTag::Boolean:
                    j["value"] = n.value == "true";
                    break;
                case LiteralTag::Null:
                    j["value"] = nullptr;
                    break;
                case LiteralTag::Regex:
                    j["regex"] = json::object();
                    break;
            }
            j["raw"] = n.value;
            break;
        case NodeKind::BinaryExpression:
        case NodeKind::LogicalExpression:
        case NodeKind::AssignmentExpression:
            j["operator"] = n.op;
            j["left"] = child(0);
            j["right"] = child(1);
            break;
        case NodeKind::UnaryExpression:
            j["operator"] = n.op;
            j["prefix"] = true;
            j["argument"] = child(0);
            break;
        case NodeKind::FunctionDeclaration:
        case NodeKind::FunctionExpression: {
            if (n.name.empty()) {
                j["id"] = nullptr;
            } else {
                json id;
                id["type"] = "Identifier";
                id["name"] = n.name;
                j["id"] = id;
            }
            json params = json::array();
            for (std::size_t i = 0; i + 1 < n.children.size(); ++i) params.push_back(child(i));
            j["params"] = params;
            j["body"] = estree_of(*n.children.back());
            break;
        }
        case NodeKind::VariableDeclaration: {
            j["kind"] = n.name.empty() ? "var" : n.name;
            json decls = json::array();
            for (const auto& c : n.children) decls.push_back(estree_of(*c));
            j["declarations"] = decls;
            break;
        }
        case NodeKind::VariableDeclarator:
            j["id"] = child(0);
            if (n.children.size() > 1) j["init"] = child(1);
            break;
        case NodeKind::ReturnStatement:
            if (!n.children.empty()) j["argument"] = child(0);
            break;
        case NodeKind::IfStatement:
            j["test"] = child(0);
            j["consequent"] = child(1);
            if (n.children.size() > 2) j["alternate"] = child(2);
            break;
        case NodeKind::ArrayExpression: {
            json elements = json::array();
            for (const auto& c : n.children) {
                if (c->kind == NodeKind::Opaque && c->name == "Elision") {
                    elements.push_back(nullptr);
                } else {
                    elements.push_back(estree_of(*c));
                }
            }
            j["elements"] = elements;
            break;
        }
        case NodeKind::ObjectExpression: {
            json props = json::array();
            for (const auto& c : n.children) props.push_back(estree_of(*c));
            j["properties"] = props;
            break;
        }
        case NodeKind::Property:
            j["kind"] = "init";
            j["computed"] = false;
            j["key"] = child(0);
            j["value"] = child(1);
            break;
        case NodeKind::Opaque:
            throw PrintError("cannot serialize opaque node '" + n.name + "'");
    }
    return j;
}

} // namespace

std::string to_estree_json(const AstNode& node) { return estree_of(node).dump(); }

} // namespace namefix
