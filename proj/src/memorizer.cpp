#include "namefix/memorizer.hpp"

#include <algorithm>
#include <map>

namespace namefix {
namespace {

std::string sequence_key(const std::vector<std::string>& tokens) {
    std::string key;
    for (const std::string& t : tokens) {
        key += t;
        key += '\x1f';
    }
    return key;
}

}  // namespace

MemorizerIndex train_memorizer(const std::vector<EncodedExample>& train, std::size_t k) {
    // src key -> (tgt key -> (count, tokens))
    std::unordered_map<std::string,
                       std::map<std::string, std::pair<std::size_t, std::vector<std::string>>>>
        grouped;
    for (const EncodedExample& ex : train) {
        auto& bucket = grouped[sequence_key(ex.src)][sequence_key(ex.tgt)];
        ++bucket.first;
        bucket.second = ex.tgt;
    }

    MemorizerIndex index;
    index.k = k;
    for (auto& [src, targets] : grouped) {
        std::vector<std::pair<std::size_t, std::vector<std::string>>> ranked;
        ranked.reserve(targets.size());
        for (auto& [tgt_key, entry] : targets) {
            (void)tgt_key;
            ranked.push_back(std::move(entry));
        }
        std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        auto& out = index.ranked[src];
        for (std::size_t i = 0; i < ranked.size() && i < k; ++i) {
            out.push_back(std::move(ranked[i].second));
        }
    }
    return index;
}

std::vector<std::vector<std::string>> memorizer_predict(
    const MemorizerIndex& index, const std::vector<std::string>& src) {
    auto it = index.ranked.find(sequence_key(src));
    if (it == index.ranked.end()) return {};
    return it->second;
}

PredictionSet memorizer_predict_all(const MemorizerIndex& index,
                                    const std::vector<EncodedExample>& test) {
    PredictionSet preds;
    preds.candidates.reserve(test.size());
    for (const EncodedExample& ex : test) {
        preds.candidates.push_back(memorizer_predict(index, ex.src));
    }
    return preds;
}

}  // namespace namefix
