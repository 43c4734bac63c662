#include "namefix/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "namefix/errors.hpp"

namespace namefix {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> candidate_tokens(const nlohmann::json& c) {
    if (c.is_string()) return split_tokens(c.get<std::string>());
    if (c.is_array()) {
        std::vector<std::string> out;
        for (const auto& t : c) {
            if (!t.is_string()) {
                throw AlignmentError("candidate arrays must hold strings");
            }
            out.push_back(t.get<std::string>());
        }
        return out;
    }
    throw AlignmentError("candidates must be strings or token arrays");
}

// Multiset of n-grams, keyed by the joined tokens.
std::map<std::string, std::size_t> ngram_counts(const std::vector<std::string>& tokens,
                                                std::size_t n) {
    std::map<std::string, std::size_t> counts;
    if (tokens.size() < n) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string key;
        for (std::size_t j = 0; j < n; ++j) {
            key += tokens[i + j];
            key += '\x1f';
        }
        ++counts[key];
    }
    return counts;
}

}  // namespace

PredictionSet parse_predictions(std::istream& in, std::size_t expected_count) {
    PredictionSet preds;
    preds.candidates.assign(expected_count, {});
    std::vector<bool> seen(expected_count, false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json row;
        try {
            row = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw AlignmentError("prediction line " + std::to_string(line_no) +
                                 " is not valid JSON: " + e.what());
        }
        if (!row.is_object() || !row.contains("id") ||
            !row["id"].is_number_integer() || !row.contains("candidates") ||
            !row["candidates"].is_array()) {
            throw AlignmentError("prediction line " + std::to_string(line_no) +
                                 " must be {\"id\": n, \"candidates\": [...]}");
        }
        auto id = row["id"].get<long long>();
        if (id < 0 || static_cast<std::size_t>(id) >= expected_count) {
            throw AlignmentError("prediction id " + std::to_string(id) +
                                 " is outside the test set (size " +
                                 std::to_string(expected_count) + ")");
        }
        auto index = static_cast<std::size_t>(id);
        if (seen[index]) {
            throw AlignmentError("prediction id " + std::to_string(id) + " appears twice");
        }
        seen[index] = true;
        for (const auto& c : row["candidates"]) {
            preds.candidates[index].push_back(candidate_tokens(c));
        }
    }
    return preds;
}

PredictionSet load_predictions(const std::filesystem::path& path,
                               std::size_t expected_count) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path.string() + "'");
    return parse_predictions(in, expected_count);
}

std::vector<EvalItem> make_eval_items(const std::vector<EncodedExample>& examples) {
    std::vector<EvalItem> items;
    items.reserve(examples.size());
    for (const EncodedExample& ex : examples) {
        EvalItem item;
        item.reference = ex.tgt;
        item.rep = ex.tgt_rep;
        item.map = ex.map;
        item.originals = ex.wt2_tgt;
        items.push_back(std::move(item));
    }
    return items;
}

double sentence_bleu(const std::vector<std::string>& candidate,
                     const std::vector<std::string>& reference) {
    if (reference.empty()) throw EmptyReference("reference sequence is empty");
    if (candidate.empty()) return 0.0;

    std::size_t max_order = std::min<std::size_t>(4, candidate.size());
    double log_sum = 0.0;
    for (std::size_t n = 1; n <= max_order; ++n) {
        auto cand_counts = ngram_counts(candidate, n);
        auto ref_counts = ngram_counts(reference, n);
        std::size_t matched = 0;
        std::size_t total = 0;
        for (const auto& [gram, count] : cand_counts) {
            total += count;
            auto it = ref_counts.find(gram);
            if (it != ref_counts.end()) matched += std::min(count, it->second);
        }
        double precision;
        if (n == 1) {
            if (matched == 0) return 0.0;
            precision = static_cast<double>(matched) / static_cast<double>(total);
        } else {
            precision = (static_cast<double>(matched) + 1.0) /
                        (static_cast<double>(total) + 1.0);
        }
        log_sum += std::log(precision);
    }
    double brevity = 1.0;
    if (candidate.size() < reference.size()) {
        brevity = std::exp(1.0 - static_cast<double>(reference.size()) /
                                     static_cast<double>(candidate.size()));
    }
    return 100.0 * brevity * std::exp(log_sum / static_cast<double>(max_order));
}

std::size_t edit_distance(const std::vector<std::string>& a,
                          const std::vector<std::string>& b, bool char_mode) {
    auto distance = [](const auto& x, const auto& y) -> std::size_t {
        std::vector<std::size_t> row(y.size() + 1);
        for (std::size_t j = 0; j <= y.size(); ++j) row[j] = j;
        for (std::size_t i = 1; i <= x.size(); ++i) {
            std::size_t diag = row[0];
            row[0] = i;
            for (std::size_t j = 1; j <= y.size(); ++j) {
                std::size_t up = row[j];
                std::size_t cost = x[i - 1] == y[j - 1] ? 0 : 1;
                row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
                diag = up;
            }
        }
        return row[y.size()];
    };
    if (!char_mode) return distance(a, b);
    auto join = [](const std::vector<std::string>& tokens) {
        std::string s;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i) s += ' ';
            s += tokens[i];
        }
        return s;
    };
    return distance(join(a), join(b));
}

EvalReport evaluate(const std::vector<EvalItem>& items, const PredictionSet& preds,
                    std::size_t k) {
    EvalReport report;
    report.examples = items.size();
    if (items.empty()) return report;

    double bleu_sum = 0.0;
    double edit_sum = 0.0;
    std::size_t position_sum = 0;
    std::size_t hits = 0;
    std::size_t correct_top = 0;
    std::size_t decodable_top = 0;

    for (std::size_t i = 0; i < items.size(); ++i) {
        const EvalItem& item = items[i];
        static const std::vector<std::vector<std::string>> none;
        const auto& cands = i < preds.candidates.size() ? preds.candidates[i] : none;
        std::size_t limit = std::min(k, cands.size());
        for (std::size_t j = 0; j < limit; ++j) {
            if (cands[j] == item.reference) {
                ++hits;
                position_sum += j + 1;
                break;
            }
        }
        static const std::vector<std::string> empty;
        const auto& top = cands.empty() ? empty : cands[0];
        bleu_sum += sentence_bleu(top, item.reference);
        edit_sum += static_cast<double>(edit_distance(top, item.reference));
        if (!cands.empty() && top == item.reference) {
            ++correct_top;
            DecodeAux aux;
            aux.abstraction = &item.map;
            aux.originals = &item.originals;
            try {
                decode(item.rep, item.reference, aux);
                ++decodable_top;
            } catch (const Error&) {
                // cannot be turned back into code; counts against patchability
            }
        }
    }

    report.correct = hits;
    report.accuracy = 100.0 * static_cast<double>(hits) /
                      static_cast<double>(items.size());
    if (hits > 0) {
        report.mean_position =
            static_cast<double>(position_sum) / static_cast<double>(hits);
    }
    report.bleu = bleu_sum / static_cast<double>(items.size());
    report.mean_edit_distance = edit_sum / static_cast<double>(items.size());
    report.patchability = correct_top > 0 ? static_cast<double>(decodable_top) /
                                                static_cast<double>(correct_top)
                                          : 0.0;
    return report;
}

}  // namespace namefix
