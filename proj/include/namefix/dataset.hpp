#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "namefix/mutation.hpp"
#include "namefix/representation.hpp"

namespace namefix {

// Duplicate detection looks only at the extracted record fields, never at the
// originating file or statement, so the same call or operation found in two
// files counts as one datapoint.
std::string dedup_key(const MutationPair& pair);

// Keeps the first occurrence of every key.
void dedup_within(std::vector<MutationPair>& items);

// Removes items whose key also appears in `reference`.
void dedup_against(std::vector<MutationPair>& items,
                   const std::vector<MutationPair>& reference);

struct SplitSpec {
    std::size_t train_files = 0;
    std::size_t test_files = 0;
    double val_fraction = 0.0;
};

struct SplitResult {
    std::vector<std::string> train;
    std::vector<std::string> val;
    std::vector<std::string> test;
};

// Splits a corpus by file: the file list is sorted, shuffled with a seeded
// generator, and cut into train/test; the validation files are carved off the
// end of the train slice. Throws SplitError when the corpus is too small.
SplitResult split_files(std::vector<std::string> files, const SplitSpec& spec,
                        std::uint64_t seed);

struct Vocabulary {
    std::vector<std::string> tokens; // [0]=<unk>, [1]=<s>, [2]=</s>
    std::unordered_map<std::string, std::size_t> index;

    bool contains(const std::string& t) const { return index.count(t) != 0; }
    const std::string& normalize(const std::string& t) const {
        return contains(t) ? t : tokens[0];
    }
};

// The `max_size` most frequent tokens (ties broken lexicographically) behind
// the three reserved entries.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& streams,
                            std::size_t max_size = 30000);

struct DatasetSplits {
    std::vector<EncodedExample> train;
    std::vector<EncodedExample> val;
    std::vector<EncodedExample> test;
};

struct DatasetInfo {
    std::string eid;
    std::string bug_type;
    std::string src_rep;
    std::string tgt_rep;
    std::uint64_t seed = 0;
};

struct EmitResult {
    std::map<std::string, std::size_t> line_counts; // split name -> examples
    std::map<std::string, std::string> checksums;   // file name -> fnv1a64 hex
};

// Writes the parallel corpus into `out_dir`: {split}.src/{split}.tgt with
// out-of-vocabulary tokens replaced by <unk>, vocab.src/vocab.tgt, the
// examples-{split}.jsonl side files with the raw sequences and their decode
// data, and manifest.json describing the run.
EmitResult emit_dataset(const DatasetSplits& splits, const DatasetInfo& info,
                        const Vocabulary& src_vocab, const Vocabulary& tgt_vocab,
                        const std::filesystem::path& out_dir);

// One example as a single JSON line, as written into examples-{split}.jsonl.
std::string example_to_jsonl(const EncodedExample& ex);
EncodedExample example_from_jsonl(const std::string& line);

struct StatsRow {
    std::string bug_type;
    std::size_t train = 0;
    std::size_t val = 0;
    std::size_t test = 0;
    std::size_t real = 0;
};

StatsRow dataset_stats(const DatasetSplits& splits, const std::string& bug_type);

// fnv1a64 over the file bytes, as 16 hex digits.
std::string file_checksum(const std::filesystem::path& path);

}  // namespace namefix
