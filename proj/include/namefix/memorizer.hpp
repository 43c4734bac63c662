#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "namefix/evaluation.hpp"
#include "namefix/representation.hpp"

namespace namefix {

// Lookup-table baseline: memorizes every training source sequence and
// answers with the target sequences seen for it, most frequent first. Ties
// break lexicographically so predictions are reproducible. Unseen sources
// get no candidates.
struct MemorizerIndex {
    std::size_t k = 25;
    std::unordered_map<std::string, std::vector<std::vector<std::string>>> ranked;
};

MemorizerIndex train_memorizer(const std::vector<EncodedExample>& train,
                               std::size_t k = 25);

std::vector<std::vector<std::string>> memorizer_predict(
    const MemorizerIndex& index, const std::vector<std::string>& src);

PredictionSet memorizer_predict_all(const MemorizerIndex& index,
                                    const std::vector<EncodedExample>& test);

}  // namespace namefix
