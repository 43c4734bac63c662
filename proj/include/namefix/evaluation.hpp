#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "namefix/representation.hpp"

namespace namefix {

// Ranked candidate lists, indexed by test example id. Ids a prediction file
// never mentions keep an empty list and simply score zero.
struct PredictionSet {
    std::vector<std::vector<std::vector<std::string>>> candidates;
};

// Reads one JSON object per line: {"id": <0-based index>, "candidates":
// [...]}, where each candidate is either a space-joined string or an array of
// tokens. Throws AlignmentError for ids outside [0, expected_count) and for
// ids that appear twice.
PredictionSet parse_predictions(std::istream& in, std::size_t expected_count);
PredictionSet load_predictions(const std::filesystem::path& path,
                               std::size_t expected_count);

// One reference sequence together with what decoding it would need.
struct EvalItem {
    std::vector<std::string> reference;
    RepresentationId rep = RepresentationId::WT1;
    std::map<std::string, std::string> map;
    std::vector<std::string> originals;
};

std::vector<EvalItem> make_eval_items(const std::vector<EncodedExample>& examples);

// Smoothed sentence-level overlap score in [0, 100]. Uses n-grams up to
// min(4, |candidate|); the unigram precision is unsmoothed and a zero there
// zeroes the score, higher orders get add-one smoothing, and candidates
// shorter than the reference pay exp(1 - r/c). An empty candidate scores 0;
// an empty reference is an EmptyReference error.
double sentence_bleu(const std::vector<std::string>& candidate,
                     const std::vector<std::string>& reference);

// Levenshtein distance over tokens, or over the characters of the
// space-joined sequences when char_mode is set.
std::size_t edit_distance(const std::vector<std::string>& a,
                          const std::vector<std::string>& b, bool char_mode = false);

struct EvalReport {
    std::size_t examples = 0;
    std::size_t correct = 0;        // any of the first k candidates exact
    double accuracy = 0.0;          // 100 * correct / examples
    std::optional<double> mean_position; // mean 1-based first hit; absent without hits
    double bleu = 0.0;              // mean sentence score of the top candidate
    double mean_edit_distance = 0.0; // mean token distance of the top candidate
    double patchability = 0.0;      // decodable fraction of the correct top candidates
};

EvalReport evaluate(const std::vector<EvalItem>& items, const PredictionSet& preds,
                    std::size_t k);

}  // namespace namefix
