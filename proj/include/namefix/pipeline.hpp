#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "namefix/dataset.hpp"
#include "namefix/evaluation.hpp"
#include "namefix/extraction.hpp"
#include "namefix/mutation.hpp"
#include "namefix/representation.hpp"

namespace namefix {

// A full experiment: which defect to inject, how to encode both sides, how to
// split the corpus, and where everything goes. Loaded from a JSON file with
// the same field names.
struct ExperimentConfig {
    int schema_version = 1;
    std::string eid; // preset id (E1..E18); empty for fully explicit configs
    BugType bug_type = BugType::SwappedArgs;
    std::optional<RepresentationId> src_rep;
    std::optional<RepresentationId> tgt_rep;
    std::uint64_t seed = 0;
    SplitSpec split;
    std::size_t vocab_size = 30000;
    std::size_t k = 25;
    bool exclude_commutative = false;
    bool dedup_train = false;
    bool run_baseline = true;
    std::filesystem::path corpus;
    std::filesystem::path out;
};

// Preset experiment ids: E1..E14 encode both sides with one representation
// (in declaration order, so E1 is WT1 and E14 is AST4); E17 and E18 translate
// between concrete tokens and the linearized tree. E15 and E16 are reserved
// for mixed setups and require explicit representations in the config.
const std::vector<std::string>& preset_experiment_ids();

ExperimentConfig experiment_config_from_json_text(const std::string& text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Fills src/tgt from the eid preset and rejects contradictory or inapplicable
// combinations (ConfigError).
void finalize_experiment_config(ExperimentConfig& config);

struct RunCounters {
    std::size_t files_total = 0;
    std::size_t files_failed = 0;
    std::size_t records = 0;
    std::size_t degenerate = 0;
    std::size_t pairs = 0;
    std::size_t test_removed_within = 0;
    std::size_t test_removed_vs_train = 0;
};

struct RunResult {
    RunCounters counters;
    DatasetSplits splits;
    EmitResult emit;
    StatsRow stats;
    std::optional<EvalReport> baseline;
};

// End to end: list the corpus, split by file, extract and type the records,
// inject the defect, deduplicate the test slice, encode, write the dataset,
// and (unless disabled) score the memorizing baseline against it.
RunResult run_experiment(const ExperimentConfig& config);

struct MatrixRowResult {
    std::string label;              // row eid, or "row<N>" for unlabeled rows
    std::optional<RunResult> result;
    std::string error;              // set instead of `result` when the row failed
};

// Matrix file: {"experiments": [<config>, ...]} or a bare array of configs.
std::vector<ExperimentConfig> experiment_matrix_from_json_text(const std::string& text);
std::vector<ExperimentConfig> load_experiment_matrix(const std::filesystem::path& path);

// Runs each row in isolation (one failure does not stop the rest). Rows
// without an output directory write into <out>/<label>/. Writes
// matrix-summary.json and an aligned-column matrix-summary.txt into `out`.
std::vector<MatrixRowResult> run_experiment_matrix(std::vector<ExperimentConfig> rows,
                                                   const std::filesystem::path& out);

// Sorted relative paths of the .js / .json sources under `corpus`.
std::vector<std::string> list_corpus_files(const std::filesystem::path& corpus);

// Parses a .js source or ingests a .json syntax-tree dump.
AstNodePtr load_program(const std::filesystem::path& path);

// ---- intermediate file formats -------------------------------------------

void save_call_records(const std::vector<CallSiteRecord>& records,
                       const std::filesystem::path& rows,
                       const std::filesystem::path& meta);
std::vector<CallSiteRecord> load_call_records(const std::filesystem::path& rows,
                                              const std::filesystem::path& meta);

void save_binop_records(const std::vector<BinOpRecord>& records,
                        const std::filesystem::path& rows,
                        const std::filesystem::path& meta);
std::vector<BinOpRecord> load_binop_records(const std::filesystem::path& rows,
                                            const std::filesystem::path& meta);

void save_types(const TypeMap& types, const std::filesystem::path& path);
TypeMap load_types(const std::filesystem::path& path);

void save_pairs(const std::vector<MutationPair>& pairs,
                const std::filesystem::path& path);
std::vector<MutationPair> load_pairs(const std::filesystem::path& path);

void save_examples(const std::vector<EncodedExample>& examples,
                   const std::filesystem::path& path);
std::vector<EncodedExample> load_examples(const std::filesystem::path& path);

void save_predictions(const PredictionSet& preds, const std::filesystem::path& path);

// Reads the example counts back out of an emitted dataset directory.
StatsRow stats_from_manifest(const std::filesystem::path& out_dir);

// Encodes the reference statement under every representation and compares
// against the expected sequences. Returns true when all match; appends a
// description of each mismatch to `failures` otherwise.
bool golden_check(std::string* failures);

}  // namespace namefix
