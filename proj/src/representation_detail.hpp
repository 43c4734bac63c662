#pragma once

#include <optional>
#include <string>

#include "namefix/ast.hpp"

// Helpers shared by the encoders and decoders.
namespace namefix::detail {

// Words the typed encodings may insert as argument annotations.
bool is_palette_word(const std::string& t);

// Tokens that carry tree structure in the linearized encodings: node kind
// names plus the "End" and "Else" markers.
bool is_structural_token(const std::string& t);

// Recovers a literal's tag from its printed lexeme.
LiteralTag literal_tag_from_lexeme(const std::string& lexeme);

// Normalizes an abstraction slot token ("NUMBER_3", "var_1") to its
// canonical spelling ("Number_3", "Var_1"). Empty result when the token is
// not slot-shaped.
std::optional<std::string> canonical_abstract_token(const std::string& t);

}  // namespace namefix::detail
