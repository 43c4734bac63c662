#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "namefix/ast.hpp"
#include "namefix/extraction.hpp"
#include "namefix/mutation.hpp"

namespace namefix {

// The fourteen statement encodings. The first two render concrete tokens,
// DB1-DB3 add identifier/literal markers and argument types, FS1-FS4 reduce
// the statement to the recorded call's signature, TF1 abstracts infrequent
// names into numbered category slots, and AST1-AST4 linearize the tree.
enum class RepresentationId {
    WT1,
    WT2,
    DB1,
    DB2,
    DB3,
    FS1,
    FS2,
    FS3,
    FS4,
    TF1,
    AST1,
    AST2,
    AST3,
    AST4,
};

inline constexpr std::size_t kRepresentationCount = 14;

const std::vector<RepresentationId>& all_representations();
const char* representation_name(RepresentationId rep);
RepresentationId representation_from_name(const std::string& name); // ConfigError

// True when decode() can reconstruct the concrete statement tokens from the
// encoded form (plus its per-example side data). The signature-only and
// name-dropping encodings are not reconstructible.
bool is_automatically_patchable(RepresentationId rep);

// Signature encodings and the typed tree encodings need call argument types,
// so they only exist for the swapped-argument defect.
bool applicable(RepresentationId rep, BugType bug);

// Frequent tokens that stay concrete under TF1. Holds the `top_n` most
// frequent token texts of the supplied streams (ties broken lexicographically)
// plus every reserved word.
struct IdiomSet {
    std::unordered_set<std::string> tokens;

    bool contains(const std::string& t) const { return tokens.count(t) != 0; }
};

IdiomSet build_idiom_set(const std::vector<std::vector<std::string>>& streams,
                         std::size_t top_n = 300);

// Assigns numbered abstraction slots (Var_1, Number_2, ...) to lexemes. A
// lexeme keeps its first slot forever, so the map stays injective and both
// sides of a pair agree on slot names when they share one map.
class AbstractionMap {
public:
    std::string abstract_for(const std::string& category, const std::string& lexeme);

    // abstract name -> original lexeme
    const std::map<std::string, std::string>& reverse() const { return reverse_; }

private:
    std::map<std::string, std::string> by_lexeme_;
    std::map<std::string, int> counters_;
    std::map<std::string, std::string> reverse_;
};

// Side inputs and outputs of encode(). `types` drives the typed encodings,
// `idioms` and `abstraction` drive TF1, and `wt2_originals` receives the
// concrete lexemes that WT2 replaced, in token order. `site_path` locates the
// mutated node inside the statement; `site_args_swapped` marks the buggy side
// of a swapped-argument pair, whose site call carries its recorded argument
// types in reversed order.
struct EncodeContext {
    BugType bug_type = BugType::SwappedArgs;
    const TypeMap* types = nullptr;
    const IdiomSet* idioms = nullptr;
    AbstractionMap* abstraction = nullptr;
    std::vector<std::string>* wt2_originals = nullptr;
    NodePath site_path;
    bool site_args_swapped = false;
};

std::vector<std::string> encode(RepresentationId rep, const AstNode& statement,
                                const EncodeContext& ctx);

// Side data needed to invert an encoding: TF1 wants the abstraction map,
// WT2 wants the replaced lexemes.
struct DecodeAux {
    const std::map<std::string, std::string>* abstraction = nullptr;
    const std::vector<std::string>* originals = nullptr;
};

// Reconstructs the concrete statement tokens. Throws NotPatchable for the
// non-reconstructible encodings, MissingMap when required side data is
// absent, and MalformedEncoding when the token stream is not a valid
// encoding.
std::vector<std::string> decode(RepresentationId rep, const std::vector<std::string>& tokens,
                                const DecodeAux& aux = {});

// One training example: the buggy side encoded as the source sequence and the
// fixed side as the target, with whatever side data the encodings produced.
struct EncodedExample {
    BugType bug_type = BugType::SwappedArgs;
    RepresentationId src_rep = RepresentationId::WT1;
    RepresentationId tgt_rep = RepresentationId::WT1;
    std::vector<std::string> src;
    std::vector<std::string> tgt;
    std::map<std::string, std::string> map; // shared TF1 abstraction
    std::vector<std::string> wt2_src;
    std::vector<std::string> wt2_tgt;
    std::string file;
};

EncodedExample make_example(const MutationPair& pair, RepresentationId src_rep,
                            RepresentationId tgt_rep, const TypeMap& types,
                            const IdiomSet& idioms);

}  // namespace namefix
