// Command-line front end: each subcommand exposes one pipeline stage, `run`
// and `run-matrix` chain them end to end.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "namefix/dataset.hpp"
#include "namefix/errors.hpp"
#include "namefix/evaluation.hpp"
#include "namefix/extraction.hpp"
#include "namefix/memorizer.hpp"
#include "namefix/mutation.hpp"
#include "namefix/pipeline.hpp"
#include "namefix/representation.hpp"
#include "namefix/rng.hpp"

namespace {

using namefix::BugType;
namespace fs = std::filesystem;

BugType parse_bug_type(const std::string& name) {
    auto bug = namefix::bug_type_from_name(name);
    if (!bug) throw namefix::ConfigError("unknown bug type '" + name + "'");
    return *bug;
}

void write_text_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw namefix::IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw namefix::IoError("cannot write '" + path.string() + "'");
}

nlohmann::json eval_report_json(const namefix::EvalReport& report) {
    nlohmann::json j;
    j["examples"] = report.examples;
    j["correct"] = report.correct;
    j["accuracy"] = report.accuracy;
    if (report.mean_position) {
        j["mean_position"] = *report.mean_position;
    } else {
        j["mean_position"] = nullptr;
    }
    j["bleu"] = report.bleu;
    j["mean_edit_distance"] = report.mean_edit_distance;
    j["patchability"] = report.patchability;
    return j;
}

struct ExtractArgs {
    std::string corpus;
    std::string bug_type;
    std::string out;
    std::uint64_t seed = 0;
};

int cmd_extract(const ExtractArgs& a) {
    BugType bug = parse_bug_type(a.bug_type);
    std::vector<std::string> files = namefix::list_corpus_files(a.corpus);
    std::vector<namefix::CallSiteRecord> calls;
    std::vector<namefix::BinOpRecord> binops;
    std::size_t failed = 0;
    for (const std::string& file : files) {
        namefix::AstNodePtr program;
        try {
            program = namefix::load_program(fs::path(a.corpus) / file);
        } catch (const namefix::ParseError&) {
            ++failed;
            continue;
        } catch (const namefix::IngestError&) {
            ++failed;
            continue;
        }
        if (bug == BugType::SwappedArgs) {
            auto found = namefix::extract_call_sites(*program, file);
            calls.insert(calls.end(), std::make_move_iterator(found.begin()),
                         std::make_move_iterator(found.end()));
        } else {
            auto found = namefix::extract_binops(*program, file);
            binops.insert(binops.end(), std::make_move_iterator(found.begin()),
                          std::make_move_iterator(found.end()));
        }
    }

    fs::path out(a.out);
    std::size_t count = 0;
    if (bug == BugType::SwappedArgs) {
        namefix::TypeMap types = namefix::synthesize_types(calls, a.seed);
        namefix::apply_types(calls, types);
        namefix::save_types(types, out / "types.json");
        namefix::save_call_records(calls, out / "records.jsonl", out / "records.meta.jsonl");
        count = calls.size();
    } else {
        namefix::save_binop_records(binops, out / "records.jsonl",
                                    out / "records.meta.jsonl");
        count = binops.size();
    }
    std::cout << "extracted " << count << " records from " << files.size() << " files ("
              << failed << " failed to load)\n";
    return 0;
}

struct MutateArgs {
    std::string records;
    std::string bug_type;
    std::string out;
    std::uint64_t seed = 0;
    bool exclude_commutative = false;
};

int cmd_mutate(const MutateArgs& a) {
    BugType bug = parse_bug_type(a.bug_type);
    fs::path in(a.records);
    std::vector<namefix::MutationPair> pairs;
    std::size_t degenerate = 0;
    if (bug == BugType::SwappedArgs) {
        auto records =
            namefix::load_call_records(in / "records.jsonl", in / "records.meta.jsonl");
        for (const auto& r : records) {
            try {
                pairs.push_back(namefix::mutate_swap_args(r));
            } catch (const namefix::DegenerateMutation&) {
                ++degenerate;
            }
        }
    } else {
        auto records =
            namefix::load_binop_records(in / "records.jsonl", in / "records.meta.jsonl");
        for (const auto& r : records) {
            try {
                if (bug == BugType::WrongBinop) {
                    namefix::SeededRng rng(
                        namefix::record_rng_seed(a.seed, r.file, r.ordinal));
                    pairs.push_back(namefix::mutate_wrong_operator(r, rng));
                } else {
                    pairs.push_back(namefix::mutate_swap_operands(r, a.exclude_commutative));
                }
            } catch (const namefix::DegenerateMutation&) {
                ++degenerate;
            }
        }
    }
    namefix::save_pairs(pairs, a.out);
    std::cout << "mutated " << pairs.size() << " records (" << degenerate
              << " degenerate)\n";
    return 0;
}

struct RepresentArgs {
    std::string pairs;
    std::string src_rep;
    std::string tgt_rep;
    std::string types;
    std::string idioms;
    std::string out;
};

int cmd_represent(const RepresentArgs& a) {
    namefix::RepresentationId src = namefix::representation_from_name(a.src_rep);
    namefix::RepresentationId tgt = namefix::representation_from_name(a.tgt_rep);
    std::vector<namefix::MutationPair> pairs = namefix::load_pairs(a.pairs);

    namefix::TypeMap types;
    if (!a.types.empty()) types = namefix::load_types(a.types);

    namefix::IdiomSet idioms;
    if (!a.idioms.empty()) {
        std::ifstream in(a.idioms);
        if (!in) throw namefix::IoError("cannot read '" + a.idioms + "'");
        std::string token;
        while (std::getline(in, token)) {
            if (!token.empty()) idioms.tokens.insert(token);
        }
        for (const std::string& kw : namefix::js_keywords()) idioms.tokens.insert(kw);
    } else {
        std::vector<std::vector<std::string>> streams;
        streams.reserve(pairs.size());
        for (const auto& pair : pairs) {
            streams.push_back(namefix::token_texts(namefix::print_tokens(*pair.fixed_stmt)));
        }
        idioms = namefix::build_idiom_set(streams);
    }

    std::vector<namefix::EncodedExample> examples;
    examples.reserve(pairs.size());
    for (const auto& pair : pairs) {
        examples.push_back(namefix::make_example(pair, src, tgt, types, idioms));
    }
    namefix::save_examples(examples, a.out);
    std::cout << "encoded " << examples.size() << " examples\n";
    return 0;
}

struct DedupArgs {
    std::string pairs;
    std::string against;
    std::string out;
};

int cmd_dedup(const DedupArgs& a) {
    std::vector<namefix::MutationPair> pairs = namefix::load_pairs(a.pairs);
    std::size_t before = pairs.size();
    namefix::dedup_within(pairs);
    std::size_t within = before - pairs.size();
    std::size_t across = 0;
    if (!a.against.empty()) {
        std::vector<namefix::MutationPair> reference = namefix::load_pairs(a.against);
        std::size_t mid = pairs.size();
        namefix::dedup_against(pairs, reference);
        across = mid - pairs.size();
    }
    namefix::save_pairs(pairs, a.out);
    std::cout << "kept " << pairs.size() << " of " << before << " (" << within
              << " duplicates within, " << across << " against reference)\n";
    return 0;
}

struct SplitArgs {
    std::string corpus;
    std::size_t train = 0;
    std::size_t test = 0;
    double val_fraction = 0.0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_split(const SplitArgs& a) {
    namefix::SplitSpec spec;
    spec.train_files = a.train;
    spec.test_files = a.test;
    spec.val_fraction = a.val_fraction;
    namefix::SplitResult split =
        namefix::split_files(namefix::list_corpus_files(a.corpus), spec, a.seed);
    nlohmann::json j;
    j["train"] = split.train;
    j["val"] = split.val;
    j["test"] = split.test;
    write_text_file(a.out, j.dump(2) + "\n");
    std::cout << "split " << split.train.size() << "/" << split.val.size() << "/"
              << split.test.size() << " files (train/val/test)\n";
    return 0;
}

struct EmitArgs {
    std::string train;
    std::string val;
    std::string test;
    std::size_t vocab = 30000;
    std::string eid;
    std::string out;
};

int cmd_emit(const EmitArgs& a) {
    namefix::DatasetSplits splits;
    splits.train = namefix::load_examples(a.train);
    if (!a.val.empty()) splits.val = namefix::load_examples(a.val);
    splits.test = namefix::load_examples(a.test);

    std::vector<std::vector<std::string>> src_streams;
    std::vector<std::vector<std::string>> tgt_streams;
    for (const auto* part : {&splits.train, &splits.val}) {
        for (const auto& ex : *part) {
            src_streams.push_back(ex.src);
            tgt_streams.push_back(ex.tgt);
        }
    }
    namefix::Vocabulary src_vocab = namefix::build_vocabulary(src_streams, a.vocab);
    namefix::Vocabulary tgt_vocab = namefix::build_vocabulary(tgt_streams, a.vocab);

    namefix::DatasetInfo info;
    info.eid = a.eid;
    const namefix::EncodedExample* sample = nullptr;
    if (!splits.train.empty()) {
        sample = &splits.train.front();
    } else if (!splits.test.empty()) {
        sample = &splits.test.front();
    }
    if (sample != nullptr) {
        info.bug_type = namefix::bug_type_name(sample->bug_type);
        info.src_rep = namefix::representation_name(sample->src_rep);
        info.tgt_rep = namefix::representation_name(sample->tgt_rep);
    }
    namefix::EmitResult emitted =
        namefix::emit_dataset(splits, info, src_vocab, tgt_vocab, a.out);
    std::cout << "emitted " << emitted.line_counts.at("train") << "/"
              << emitted.line_counts.at("val") << "/" << emitted.line_counts.at("test")
              << " examples (train/val/test) into " << a.out << "\n";
    return 0;
}

struct BaselineArgs {
    std::string train;
    std::string test;
    std::size_t k = 25;
    std::string out;
};

int cmd_train_baseline(const BaselineArgs& a) {
    std::vector<namefix::EncodedExample> train = namefix::load_examples(a.train);
    std::vector<namefix::EncodedExample> test = namefix::load_examples(a.test);
    namefix::MemorizerIndex index = namefix::train_memorizer(train, a.k);
    namefix::PredictionSet preds = namefix::memorizer_predict_all(index, test);
    namefix::save_predictions(preds, a.out);
    std::cout << "memorized " << index.ranked.size() << " sources, predicted "
              << test.size() << " test examples\n";
    return 0;
}

struct EvaluateArgs {
    std::string test;
    std::string predictions;
    std::size_t k = 25;
    std::string out;
};

int cmd_evaluate(const EvaluateArgs& a) {
    std::vector<namefix::EncodedExample> test = namefix::load_examples(a.test);
    namefix::PredictionSet preds = namefix::load_predictions(a.predictions, test.size());
    namefix::EvalReport report =
        namefix::evaluate(namefix::make_eval_items(test), preds, a.k);
    std::string text = eval_report_json(report).dump(2) + "\n";
    if (!a.out.empty()) write_text_file(a.out, text);
    std::cout << text;
    return 0;
}

struct RunArgs {
    std::string config;
    std::string corpus;
    std::string out;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

int cmd_run(const RunArgs& a) {
    namefix::ExperimentConfig cfg = namefix::load_experiment_config(a.config);
    if (!a.corpus.empty()) cfg.corpus = a.corpus;
    if (!a.out.empty()) cfg.out = a.out;
    if (a.seed_given) cfg.seed = a.seed;
    namefix::RunResult result = namefix::run_experiment(cfg);
    std::cout << "ran " << (cfg.eid.empty() ? "experiment" : cfg.eid) << ": "
              << result.splits.train.size() << "/" << result.splits.val.size() << "/"
              << result.splits.test.size() << " examples (train/val/test)";
    if (result.baseline) {
        std::cout << ", baseline accuracy " << result.baseline->accuracy << "%";
    }
    std::cout << "\n";
    return 0;
}

struct MatrixArgs {
    std::string config;
    std::string out;
};

int cmd_run_matrix(const MatrixArgs& a) {
    std::vector<namefix::ExperimentConfig> rows = namefix::load_experiment_matrix(a.config);
    auto results = namefix::run_experiment_matrix(std::move(rows), a.out);
    std::size_t failed = 0;
    for (const auto& row : results) {
        if (!row.error.empty()) {
            ++failed;
            std::cerr << row.label << " failed: " << row.error << "\n";
        }
    }
    std::cout << "ran " << results.size() << " rows (" << failed << " failed), summary in "
              << (fs::path(a.out) / "matrix-summary.json").string() << "\n";
    return failed == 0 ? 0 : 1;
}

struct StatsArgs {
    std::string data;
    std::string out;
};

int cmd_stats(const StatsArgs& a) {
    namefix::StatsRow row = namefix::stats_from_manifest(a.data);
    nlohmann::json j;
    j["bug_type"] = row.bug_type;
    j["train"] = row.train;
    j["val"] = row.val;
    j["test"] = row.test;
    j["real"] = row.real;
    if (!a.out.empty()) write_text_file(a.out, j.dump(2) + "\n");

    std::vector<std::vector<std::string>> table = {
        {"Bug type", "Train", "Val", "Test", "Real"},
        {row.bug_type, std::to_string(row.train), std::to_string(row.val),
         std::to_string(row.test), std::to_string(row.real)},
    };
    std::vector<std::size_t> widths(table[0].size(), 0);
    for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            widths[c] = std::max(widths[c], line[c].size());
        }
    }
    for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) std::cout << "  ";
            std::cout << line[c];
            if (c + 1 < line.size()) {
                std::cout << std::string(widths[c] - line[c].size(), ' ');
            }
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_golden_check() {
    std::string failures;
    if (namefix::golden_check(&failures)) {
        std::cout << "golden sequences: ok (" << namefix::kRepresentationCount
                  << " representations)\n";
        return 0;
    }
    std::cerr << failures;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mutation-seeded bug/fix corpus builder for JavaScript statements"};
    app.require_subcommand(1);

    ExtractArgs extract_args;
    auto* extract = app.add_subcommand(
        "extract", "Collect call-site or binary-operation records from a corpus");
    extract->add_option("--corpus", extract_args.corpus, "Corpus directory")->required();
    extract->add_option("--bug-type", extract_args.bug_type,
                        "swapped_args | wrong_binop | wrong_operands")
        ->required();
    extract->add_option("--out", extract_args.out, "Output directory")->required();
    extract->add_option("--seed", extract_args.seed, "Type synthesis seed");

    MutateArgs mutate_args;
    auto* mutate =
        app.add_subcommand("mutate", "Inject one defect into every extracted record");
    mutate->add_option("--records", mutate_args.records, "Directory written by extract")
        ->required();
    mutate->add_option("--bug-type", mutate_args.bug_type,
                       "swapped_args | wrong_binop | wrong_operands")
        ->required();
    mutate->add_option("--out", mutate_args.out, "Output pairs file (.jsonl)")->required();
    mutate->add_option("--seed", mutate_args.seed, "Operator draw seed");
    mutate->add_flag("--exclude-commutative", mutate_args.exclude_commutative,
                     "Skip operand swaps around commutative operators");

    RepresentArgs represent_args;
    auto* represent =
        app.add_subcommand("represent", "Encode fixed/buggy pairs into token sequences");
    represent->add_option("--pairs", represent_args.pairs, "Pairs file from mutate")
        ->required();
    represent->add_option("--src-rep", represent_args.src_rep, "Source representation")
        ->required();
    represent->add_option("--tgt-rep", represent_args.tgt_rep, "Target representation")
        ->required();
    represent->add_option("--types", represent_args.types, "types.json from extract");
    represent->add_option("--idioms", represent_args.idioms,
                          "Idiom token list (one per line); default: derived from input");
    represent->add_option("--out", represent_args.out, "Output examples file (.jsonl)")
        ->required();

    DedupArgs dedup_args;
    auto* dedup = app.add_subcommand("dedup", "Drop duplicate datapoints from a pairs file");
    dedup->add_option("--pairs", dedup_args.pairs, "Pairs file to deduplicate")->required();
    dedup->add_option("--against", dedup_args.against,
                      "Also drop pairs whose key appears in this file");
    dedup->add_option("--out", dedup_args.out, "Output pairs file (.jsonl)")->required();

    SplitArgs split_args;
    auto* split = app.add_subcommand("split", "Assign corpus files to train/val/test");
    split->add_option("--corpus", split_args.corpus, "Corpus directory")->required();
    split->add_option("--train", split_args.train, "Training file count")->required();
    split->add_option("--test", split_args.test, "Test file count")->required();
    split->add_option("--val-fraction", split_args.val_fraction,
                      "Fraction of training files moved to validation");
    split->add_option("--seed", split_args.seed, "Shuffle seed");
    split->add_option("--out", split_args.out, "Output split file (.json)")->required();

    EmitArgs emit_args;
    auto* emit = app.add_subcommand("emit", "Write the parallel dataset files");
    emit->add_option("--train", emit_args.train, "Training examples (.jsonl)")->required();
    emit->add_option("--val", emit_args.val, "Validation examples (.jsonl)");
    emit->add_option("--test", emit_args.test, "Test examples (.jsonl)")->required();
    emit->add_option("--vocab", emit_args.vocab, "Vocabulary size cap");
    emit->add_option("--eid", emit_args.eid, "Experiment label for the manifest");
    emit->add_option("--out", emit_args.out, "Output directory")->required();

    BaselineArgs baseline_args;
    auto* baseline =
        app.add_subcommand("train-baseline", "Fit the memorizing baseline and predict");
    baseline->add_option("--train", baseline_args.train, "Training examples (.jsonl)")
        ->required();
    baseline->add_option("--test", baseline_args.test, "Test examples (.jsonl)")->required();
    baseline->add_option("--k", baseline_args.k, "Candidates per example");
    baseline->add_option("--out", baseline_args.out, "Output predictions file (.jsonl)")
        ->required();

    EvaluateArgs evaluate_args;
    auto* evaluate = app.add_subcommand("evaluate", "Score predictions against references");
    evaluate->add_option("--test", evaluate_args.test, "Test examples (.jsonl)")->required();
    evaluate->add_option("--predictions", evaluate_args.predictions,
                         "Predictions file (.jsonl)")
        ->required();
    evaluate->add_option("--k", evaluate_args.k, "Candidates considered per example");
    evaluate->add_option("--out", evaluate_args.out, "Also write the report here");

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run one experiment end to end");
    run->add_option("--config", run_args.config, "Experiment config (.json)")->required();
    run->add_option("--corpus", run_args.corpus, "Override the config's corpus directory");
    run->add_option("--out", run_args.out, "Override the config's output directory");
    auto* run_seed = run->add_option("--seed", run_args.seed, "Override the config's seed");

    MatrixArgs matrix_args;
    auto* matrix = app.add_subcommand("run-matrix", "Run every row of an experiment matrix");
    matrix->add_option("--config", matrix_args.config, "Matrix file (.json)")->required();
    matrix->add_option("--out", matrix_args.out, "Summary/output directory")->required();

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "Report example counts of an emitted dataset");
    stats->add_option("--data", stats_args.data, "Dataset directory with manifest.json")
        ->required();
    stats->add_option("--out", stats_args.out, "Also write the counts as JSON");

    auto* golden = app.add_subcommand(
        "golden-check", "Verify the reference statement under all representations");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*extract) return cmd_extract(extract_args);
        if (*mutate) return cmd_mutate(mutate_args);
        if (*represent) return cmd_represent(represent_args);
        if (*dedup) return cmd_dedup(dedup_args);
        if (*split) return cmd_split(split_args);
        if (*emit) return cmd_emit(emit_args);
        if (*baseline) return cmd_train_baseline(baseline_args);
        if (*evaluate) return cmd_evaluate(evaluate_args);
        if (*run) {
            run_args.seed_given = run_seed->count() > 0;
            return cmd_run(run_args);
        }
        if (*matrix) return cmd_run_matrix(matrix_args);
        if (*stats) return cmd_stats(stats_args);
        if (*golden) return cmd_golden_check();
    } catch (const namefix::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
