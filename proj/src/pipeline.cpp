#include "namefix/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "namefix/errors.hpp"
#include "namefix/memorizer.hpp"
#include "namefix/rng.hpp"

namespace namefix {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw IoError("cannot write '" + path.string() + "'");
}

std::vector<std::string> read_jsonl_lines(const std::filesystem::path& path) {
    std::string text = read_file(path);
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

json parse_json_line(const std::string& line, const char* what) {
    try {
        return json::parse(line);
    } catch (const json::exception& e) {
        throw MalformedEncoding(std::string("bad ") + what + " row: " + e.what());
    }
}

std::string joined(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

// Reparses one printed statement. The printer leaves the root terminator off
// and the parser accepts that, so print -> parse -> print is stable.
AstNodePtr reparse_statement(const std::string& text) {
    AstNodePtr program = parse_js(text);
    if (program->children.size() != 1) {
        throw MalformedEncoding("serialized statement must parse to one statement");
    }
    return program->children[0];
}

json tag_pair_json(const std::array<TypeTag, 2>& tags) {
    return json::array({type_tag_name(tags[0]), type_tag_name(tags[1])});
}

std::array<TypeTag, 2> tag_pair_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw MalformedEncoding("type pair must have two entries");
    std::array<TypeTag, 2> tags{};
    for (std::size_t i = 0; i < 2; ++i) {
        auto tag = type_tag_from_name(j[i].get<std::string>());
        if (!tag) throw MalformedEncoding("unknown type tag '" + j[i].get<std::string>() + "'");
        tags[i] = *tag;
    }
    return tags;
}

NodePath path_from_json(const json& j) {
    NodePath path;
    for (const auto& step : j) path.push_back(step.get<std::size_t>());
    return path;
}

ordered_json call_record_row(const CallSiteRecord& r) {
    ordered_json j;
    j["file"] = r.file;
    j["C"] = r.c;
    j["B"] = r.b;
    j["A1"] = r.a1;
    j["A2"] = r.a2;
    j["A"] = json::array({r.a[0], r.a[1]});
    j["AT"] = tag_pair_json(r.at);
    j["SAT"] = tag_pair_json(r.sat);
    return j;
}

CallSiteRecord call_record_from_row(const json& j) {
    CallSiteRecord r;
    r.file = j.at("file").get<std::string>();
    r.c = j.at("C").get<std::string>();
    r.b = j.at("B").get<std::string>();
    r.a1 = j.at("A1").get<std::vector<std::string>>();
    r.a2 = j.at("A2").get<std::vector<std::string>>();
    r.a[0] = j.at("A").at(0).get<std::string>();
    r.a[1] = j.at("A").at(1).get<std::string>();
    r.at = tag_pair_from_json(j.at("AT"));
    r.sat = tag_pair_from_json(j.at("SAT"));
    return r;
}

ordered_json binop_record_row(const BinOpRecord& r) {
    ordered_json j;
    j["file"] = r.file;
    j["LO"] = r.lo;
    j["RO"] = r.ro;
    j["O"] = r.o;
    j["CO"] = r.co;
    j["BO"] = r.bo;
    j["OPS"] = json::array({r.ops[0], r.ops[1]});
    j["OT"] = tag_pair_json(r.ot);
    return j;
}

BinOpRecord binop_record_from_row(const json& j) {
    BinOpRecord r;
    r.file = j.at("file").get<std::string>();
    r.lo = j.at("LO").get<std::vector<std::string>>();
    r.ro = j.at("RO").get<std::vector<std::string>>();
    r.o = j.at("O").get<std::string>();
    r.co = j.at("CO").get<std::string>();
    r.bo = j.at("BO").get<std::string>();
    r.ops[0] = j.at("OPS").at(0).get<std::string>();
    r.ops[1] = j.at("OPS").at(1).get<std::string>();
    r.ot = tag_pair_from_json(j.at("OT"));
    return r;
}

ordered_json meta_row(const AstNode& statement, const NodePath& path, std::size_t ordinal) {
    ordered_json j;
    j["stmt"] = ordered_json::parse(to_estree_json(statement));
    j["path"] = path;
    j["ordinal"] = ordinal;
    return j;
}

void apply_meta(const json& j, AstNodePtr& statement, NodePath& path, std::size_t& ordinal) {
    statement = ingest_estree(j.at("stmt").dump());
    path = path_from_json(j.at("path"));
    ordinal = j.at("ordinal").get<std::size_t>();
}

template <typename Record, typename RowFn>
void save_records_impl(const std::vector<Record>& records, const std::filesystem::path& rows,
                       const std::filesystem::path& meta, RowFn&& row_fn) {
    std::string rows_text;
    std::string meta_text;
    for (const Record& r : records) {
        rows_text += row_fn(r).dump();
        rows_text += '\n';
        meta_text += meta_row(*r.statement, r.site_path, r.ordinal).dump();
        meta_text += '\n';
    }
    write_file(rows, rows_text);
    write_file(meta, meta_text);
}

// ---- experiment presets ----------------------------------------------------

const std::map<std::string, std::pair<RepresentationId, RepresentationId>>& presets() {
    static const auto table = [] {
        std::map<std::string, std::pair<RepresentationId, RepresentationId>> t;
        for (std::size_t i = 0; i < kRepresentationCount; ++i) {
            auto rep = static_cast<RepresentationId>(i);
            t.emplace("E" + std::to_string(i + 1), std::make_pair(rep, rep));
        }
        t.emplace("E17", std::make_pair(RepresentationId::WT1, RepresentationId::AST1));
        t.emplace("E18", std::make_pair(RepresentationId::AST1, RepresentationId::WT1));
        return t;
    }();
    return table;
}

// ---- run_experiment helpers -----------------------------------------------

struct ExtractedCorpus {
    std::vector<CallSiteRecord> calls;
    std::vector<BinOpRecord> binops;
    std::size_t files_failed = 0;
};

ExtractedCorpus extract_corpus(const ExperimentConfig& cfg,
                               const std::vector<std::string>& files) {
    ExtractedCorpus out;
    for (const std::string& file : files) {
        AstNodePtr program;
        try {
            program = load_program(cfg.corpus / file);
        } catch (const ParseError&) {
            ++out.files_failed;
            continue;
        } catch (const IngestError&) {
            ++out.files_failed;
            continue;
        }
        if (cfg.bug_type == BugType::SwappedArgs) {
            auto records = extract_call_sites(*program, file);
            std::move(records.begin(), records.end(), std::back_inserter(out.calls));
        } else {
            auto records = extract_binops(*program, file);
            std::move(records.begin(), records.end(), std::back_inserter(out.binops));
        }
    }
    return out;
}

std::vector<MutationPair> mutate_corpus(const ExperimentConfig& cfg, ExtractedCorpus& corpus,
                                        RunCounters& counters) {
    std::vector<MutationPair> pairs;
    if (cfg.bug_type == BugType::SwappedArgs) {
        counters.records = corpus.calls.size();
        for (const CallSiteRecord& r : corpus.calls) {
            try {
                pairs.push_back(mutate_swap_args(r));
            } catch (const DegenerateMutation&) {
                ++counters.degenerate;
            }
        }
        return pairs;
    }
    counters.records = corpus.binops.size();
    for (const BinOpRecord& r : corpus.binops) {
        try {
            if (cfg.bug_type == BugType::WrongBinop) {
                SeededRng rng(record_rng_seed(cfg.seed, r.file, r.ordinal));
                pairs.push_back(mutate_wrong_operator(r, rng));
            } else {
                pairs.push_back(mutate_swap_operands(r, cfg.exclude_commutative));
            }
        } catch (const DegenerateMutation&) {
            ++counters.degenerate;
        }
    }
    return pairs;
}

template <typename Fn>
auto run_stage(const char* stage, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(std::string(stage) + ": " + e.what(), e.code);
    }
}

// Folds artifacts written after emit_dataset into the manifest's file table
// so one file accounts for every byte the run produced.
void extend_manifest(const std::filesystem::path& out_dir,
                     const std::vector<std::string>& names,
                     std::map<std::string, std::string>& checksums) {
    json manifest = parse_json_line(read_file(out_dir / "manifest.json"), "manifest");
    for (const std::string& name : names) {
        if (!std::filesystem::exists(out_dir / name)) continue;
        std::string sum = file_checksum(out_dir / name);
        manifest["files"][name] = sum;
        checksums[name] = sum;
    }
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

void write_report(const ExperimentConfig& cfg, const RunResult& result) {
    json report;
    report["eid"] = cfg.eid;
    report["bug_type"] = bug_type_name(cfg.bug_type);
    report["src_rep"] = representation_name(*cfg.src_rep);
    report["tgt_rep"] = representation_name(*cfg.tgt_rep);
    report["seed"] = cfg.seed;
    report["counters"] = {
        {"files_total", result.counters.files_total},
        {"files_failed", result.counters.files_failed},
        {"records", result.counters.records},
        {"degenerate", result.counters.degenerate},
        {"pairs", result.counters.pairs},
        {"test_removed_within", result.counters.test_removed_within},
        {"test_removed_vs_train", result.counters.test_removed_vs_train},
    };
    report["examples"] = {{"train", result.splits.train.size()},
                          {"val", result.splits.val.size()},
                          {"test", result.splits.test.size()}};
    if (result.baseline) {
        const EvalReport& ev = *result.baseline;
        json baseline;
        baseline["examples"] = ev.examples;
        baseline["correct"] = ev.correct;
        baseline["accuracy"] = ev.accuracy;
        if (ev.mean_position) {
            baseline["mean_position"] = *ev.mean_position;
        } else {
            baseline["mean_position"] = nullptr;
        }
        baseline["bleu"] = ev.bleu;
        baseline["mean_edit_distance"] = ev.mean_edit_distance;
        baseline["patchability"] = ev.patchability;
        report["baseline"] = baseline;
    } else {
        report["baseline"] = nullptr;
    }
    write_file(cfg.out / "report.json", report.dump(2) + "\n");
}

}  // namespace

const std::vector<std::string>& preset_experiment_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (std::size_t i = 1; i <= kRepresentationCount; ++i) {
            v.push_back("E" + std::to_string(i));
        }
        v.emplace_back("E17");
        v.emplace_back("E18");
        return v;
    }();
    return ids;
}

ExperimentConfig experiment_config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    static const std::unordered_set<std::string> known = {
        "schema_version", "eid",  "bug_type", "src_rep",
        "tgt_rep",        "seed", "split",    "vocab_size",
        "k",              "exclude_commutative", "dedup_train", "run_baseline",
        "corpus",         "out"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (known.count(key) == 0) throw ConfigError("unknown config field '" + key + "'");
    }

    ExperimentConfig cfg;
    try {
        if (j.contains("schema_version")) cfg.schema_version = j["schema_version"].get<int>();
        if (j.contains("eid")) cfg.eid = j["eid"].get<std::string>();
        auto bug = bug_type_from_name(j.at("bug_type").get<std::string>());
        if (!bug) {
            throw ConfigError("unknown bug_type '" + j["bug_type"].get<std::string>() + "'");
        }
        cfg.bug_type = *bug;
        if (j.contains("src_rep")) {
            cfg.src_rep = representation_from_name(j["src_rep"].get<std::string>());
        }
        if (j.contains("tgt_rep")) {
            cfg.tgt_rep = representation_from_name(j["tgt_rep"].get<std::string>());
        }
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        const json& split = j.at("split");
        static const std::unordered_set<std::string> split_known = {
            "train_files", "test_files", "val_fraction"};
        for (const auto& [key, value] : split.items()) {
            (void)value;
            if (split_known.count(key) == 0) {
                throw ConfigError("unknown split field '" + key + "'");
            }
        }
        cfg.split.train_files = split.at("train_files").get<std::size_t>();
        cfg.split.test_files = split.at("test_files").get<std::size_t>();
        if (split.contains("val_fraction")) {
            cfg.split.val_fraction = split["val_fraction"].get<double>();
        }
        if (j.contains("vocab_size")) cfg.vocab_size = j["vocab_size"].get<std::size_t>();
        if (j.contains("k")) cfg.k = j["k"].get<std::size_t>();
        if (j.contains("exclude_commutative")) {
            cfg.exclude_commutative = j["exclude_commutative"].get<bool>();
        }
        if (j.contains("dedup_train")) cfg.dedup_train = j["dedup_train"].get<bool>();
        if (j.contains("run_baseline")) cfg.run_baseline = j["run_baseline"].get<bool>();
        if (j.contains("corpus")) cfg.corpus = j["corpus"].get<std::string>();
        if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    return experiment_config_from_json_text(read_file(path));
}

void finalize_experiment_config(ExperimentConfig& config) {
    if (config.schema_version != 1) {
        throw ConfigError("unsupported schema_version " +
                          std::to_string(config.schema_version));
    }
    if (!config.eid.empty()) {
        if (config.eid == "E15" || config.eid == "E16") {
            if (!config.src_rep || !config.tgt_rep) {
                throw ConfigError(config.eid + " needs explicit src_rep and tgt_rep");
            }
        } else {
            auto it = presets().find(config.eid);
            if (it == presets().end()) {
                throw ConfigError("unknown experiment id '" + config.eid + "'");
            }
            if (config.src_rep && *config.src_rep != it->second.first) {
                throw ConfigError("src_rep contradicts preset " + config.eid);
            }
            if (config.tgt_rep && *config.tgt_rep != it->second.second) {
                throw ConfigError("tgt_rep contradicts preset " + config.eid);
            }
            config.src_rep = it->second.first;
            config.tgt_rep = it->second.second;
        }
    }
    if (!config.src_rep || !config.tgt_rep) {
        throw ConfigError("src_rep and tgt_rep are required (directly or via eid)");
    }
    for (RepresentationId rep : {*config.src_rep, *config.tgt_rep}) {
        if (!applicable(rep, config.bug_type)) {
            throw ConfigError(std::string(representation_name(rep)) +
                              " is not defined for " + bug_type_name(config.bug_type));
        }
    }
    if (config.split.train_files == 0 || config.split.test_files == 0) {
        throw ConfigError("split needs at least one train file and one test file");
    }
    if (config.split.val_fraction < 0.0 || config.split.val_fraction > 1.0) {
        throw ConfigError("val_fraction must lie in [0, 1]");
    }
    if (config.vocab_size == 0) throw ConfigError("vocab_size must be positive");
    if (config.k == 0) throw ConfigError("k must be positive");
    if (config.corpus.empty()) throw ConfigError("corpus directory is required");
    if (config.out.empty()) throw ConfigError("output directory is required");
}

std::vector<std::string> list_corpus_files(const std::filesystem::path& corpus) {
    if (!std::filesystem::is_directory(corpus)) {
        throw IoError("corpus directory '" + corpus.string() + "' does not exist");
    }
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(corpus)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension();
        if (ext != ".js" && ext != ".json") continue;
        files.push_back(std::filesystem::relative(entry.path(), corpus).generic_string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

AstNodePtr load_program(const std::filesystem::path& path) {
    std::string text = read_file(path);
    if (path.extension() == ".json") return ingest_estree(text);
    return parse_js(text);
}

void save_call_records(const std::vector<CallSiteRecord>& records,
                       const std::filesystem::path& rows,
                       const std::filesystem::path& meta) {
    save_records_impl(records, rows, meta, call_record_row);
}

std::vector<CallSiteRecord> load_call_records(const std::filesystem::path& rows,
                                              const std::filesystem::path& meta) {
    auto row_lines = read_jsonl_lines(rows);
    auto meta_lines = read_jsonl_lines(meta);
    if (row_lines.size() != meta_lines.size()) {
        throw MalformedEncoding("record rows and side rows disagree in length");
    }
    std::vector<CallSiteRecord> out;
    out.reserve(row_lines.size());
    for (std::size_t i = 0; i < row_lines.size(); ++i) {
        CallSiteRecord r = call_record_from_row(parse_json_line(row_lines[i], "record"));
        apply_meta(parse_json_line(meta_lines[i], "record side"), r.statement, r.site_path,
                   r.ordinal);
        out.push_back(std::move(r));
    }
    return out;
}

void save_binop_records(const std::vector<BinOpRecord>& records,
                        const std::filesystem::path& rows,
                        const std::filesystem::path& meta) {
    save_records_impl(records, rows, meta, binop_record_row);
}

std::vector<BinOpRecord> load_binop_records(const std::filesystem::path& rows,
                                            const std::filesystem::path& meta) {
    auto row_lines = read_jsonl_lines(rows);
    auto meta_lines = read_jsonl_lines(meta);
    if (row_lines.size() != meta_lines.size()) {
        throw MalformedEncoding("record rows and side rows disagree in length");
    }
    std::vector<BinOpRecord> out;
    out.reserve(row_lines.size());
    for (std::size_t i = 0; i < row_lines.size(); ++i) {
        BinOpRecord r = binop_record_from_row(parse_json_line(row_lines[i], "record"));
        apply_meta(parse_json_line(meta_lines[i], "record side"), r.statement, r.site_path,
                   r.ordinal);
        out.push_back(std::move(r));
    }
    return out;
}

void save_types(const TypeMap& types, const std::filesystem::path& path) {
    json j;
    j["seed"] = types.seed;
    json by_callee = json::object();
    for (const auto& [key, tags] : types.by_callee) {
        by_callee[key] = tag_pair_json(tags);
    }
    j["by_callee"] = by_callee;
    write_file(path, j.dump(2) + "\n");
}

TypeMap load_types(const std::filesystem::path& path) {
    json j = parse_json_line(read_file(path), "type map");
    TypeMap types;
    types.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [key, tags] : j.at("by_callee").items()) {
        types.by_callee[key] = tag_pair_from_json(tags);
    }
    return types;
}

void save_pairs(const std::vector<MutationPair>& pairs, const std::filesystem::path& path) {
    std::string text;
    for (const MutationPair& p : pairs) {
        ordered_json j;
        j["bug_type"] = bug_type_name(p.bug_type);
        j["file"] = p.file;
        j["fixed"] = ordered_json::parse(to_estree_json(*p.fixed_stmt));
        j["buggy"] = ordered_json::parse(to_estree_json(*p.buggy_stmt));
        j["site_path"] = p.site_path;
        j["seed_draw"] = p.seed_draw;
        if (p.call) {
            j["record"] = call_record_row(*p.call);
        } else if (p.binop) {
            j["record"] = binop_record_row(*p.binop);
        } else {
            throw MissingContext("datapoint carries no record");
        }
        text += j.dump();
        text += '\n';
    }
    write_file(path, text);
}

std::vector<MutationPair> load_pairs(const std::filesystem::path& path) {
    std::vector<MutationPair> out;
    for (const std::string& line : read_jsonl_lines(path)) {
        json j = parse_json_line(line, "pair");
        MutationPair p;
        auto bug = bug_type_from_name(j.at("bug_type").get<std::string>());
        if (!bug) throw MalformedEncoding("unknown bug type in pair row");
        p.bug_type = *bug;
        p.file = j.at("file").get<std::string>();
        p.fixed_stmt = ingest_estree(j.at("fixed").dump());
        p.buggy_stmt = ingest_estree(j.at("buggy").dump());
        p.site_path = path_from_json(j.at("site_path"));
        p.seed_draw = j.at("seed_draw").get<std::uint64_t>();
        const json& record = j.at("record");
        if (p.bug_type == BugType::SwappedArgs) {
            CallSiteRecord r = call_record_from_row(record);
            r.statement = p.fixed_stmt;
            r.site_path = p.site_path;
            p.call = std::move(r);
        } else {
            BinOpRecord r = binop_record_from_row(record);
            r.statement = p.fixed_stmt;
            r.site_path = p.site_path;
            p.binop = std::move(r);
        }
        out.push_back(std::move(p));
    }
    return out;
}

void save_examples(const std::vector<EncodedExample>& examples,
                   const std::filesystem::path& path) {
    std::string text;
    for (const EncodedExample& ex : examples) {
        text += example_to_jsonl(ex);
        text += '\n';
    }
    write_file(path, text);
}

std::vector<EncodedExample> load_examples(const std::filesystem::path& path) {
    std::vector<EncodedExample> out;
    for (const std::string& line : read_jsonl_lines(path)) {
        out.push_back(example_from_jsonl(line));
    }
    return out;
}

void save_predictions(const PredictionSet& preds, const std::filesystem::path& path) {
    std::string text;
    for (std::size_t i = 0; i < preds.candidates.size(); ++i) {
        ordered_json j;
        j["id"] = i;
        // Candidates are written as token arrays, not joined strings: raw
        // source tokens may contain spaces (string literals) and would not
        // survive re-splitting.
        j["candidates"] = preds.candidates[i];
        text += j.dump();
        text += '\n';
    }
    write_file(path, text);
}

StatsRow stats_from_manifest(const std::filesystem::path& out_dir) {
    json manifest = parse_json_line(read_file(out_dir / "manifest.json"), "manifest");
    StatsRow row;
    row.bug_type = manifest.at("bug_type").get<std::string>();
    row.train = manifest.at("examples").at("train").get<std::size_t>();
    row.val = manifest.at("examples").at("val").get<std::size_t>();
    row.test = manifest.at("examples").at("test").get<std::size_t>();
    row.real = 0;
    return row;
}

RunResult run_experiment(const ExperimentConfig& config) {
    ExperimentConfig cfg = config;
    finalize_experiment_config(cfg);

    RunResult result;
    std::vector<std::string> files = list_corpus_files(cfg.corpus);
    result.counters.files_total = files.size();
    SplitResult split =
        run_stage("split", [&] { return split_files(files, cfg.split, cfg.seed); });

    auto in_split = [](const std::vector<std::string>& names) {
        return std::unordered_set<std::string>(names.begin(), names.end());
    };
    auto train_set = in_split(split.train);
    auto val_set = in_split(split.val);
    auto test_set = in_split(split.test);

    std::vector<std::string> used;
    used.reserve(split.train.size() + split.val.size() + split.test.size());
    for (const auto* part : {&split.train, &split.val, &split.test}) {
        used.insert(used.end(), part->begin(), part->end());
    }
    std::sort(used.begin(), used.end());

    ExtractedCorpus corpus =
        run_stage("extract", [&] { return extract_corpus(cfg, used); });
    result.counters.files_failed = corpus.files_failed;

    TypeMap types;
    if (cfg.bug_type == BugType::SwappedArgs) {
        types = synthesize_types(corpus.calls, cfg.seed);
        apply_types(corpus.calls, types);
        run_stage("extract", [&] {
            save_call_records(corpus.calls, cfg.out / "records.jsonl",
                              cfg.out / "records.meta.jsonl");
            save_types(types, cfg.out / "types.json");
            return 0;
        });
    } else {
        run_stage("extract", [&] {
            save_binop_records(corpus.binops, cfg.out / "records.jsonl",
                               cfg.out / "records.meta.jsonl");
            return 0;
        });
    }

    std::vector<MutationPair> pairs =
        run_stage("mutate", [&] { return mutate_corpus(cfg, corpus, result.counters); });
    result.counters.pairs = pairs.size();
    run_stage("mutate", [&] {
        save_pairs(pairs, cfg.out / "pairs.jsonl");
        return 0;
    });

    std::vector<MutationPair> train_pairs;
    std::vector<MutationPair> val_pairs;
    std::vector<MutationPair> test_pairs;
    for (auto& pair : pairs) {
        if (train_set.count(pair.file)) {
            train_pairs.push_back(std::move(pair));
        } else if (val_set.count(pair.file)) {
            val_pairs.push_back(std::move(pair));
        } else if (test_set.count(pair.file)) {
            test_pairs.push_back(std::move(pair));
        }
    }

    std::size_t before_within = test_pairs.size();
    dedup_within(test_pairs);
    result.counters.test_removed_within = before_within - test_pairs.size();
    std::size_t before_vs = test_pairs.size();
    dedup_against(test_pairs, train_pairs);
    result.counters.test_removed_vs_train = before_vs - test_pairs.size();
    if (cfg.dedup_train) dedup_within(train_pairs);

    std::vector<std::vector<std::string>> idiom_streams;
    idiom_streams.reserve(train_pairs.size());
    for (const MutationPair& pair : train_pairs) {
        idiom_streams.push_back(token_texts(print_tokens(*pair.fixed_stmt)));
    }
    IdiomSet idioms = build_idiom_set(idiom_streams);

    auto represent = [&](const std::vector<MutationPair>& from) {
        return run_stage("represent", [&] {
            std::vector<EncodedExample> examples;
            examples.reserve(from.size());
            for (const MutationPair& pair : from) {
                examples.push_back(
                    make_example(pair, *cfg.src_rep, *cfg.tgt_rep, types, idioms));
            }
            return examples;
        });
    };
    result.splits.train = represent(train_pairs);
    result.splits.val = represent(val_pairs);
    result.splits.test = represent(test_pairs);

    std::vector<std::vector<std::string>> src_streams;
    std::vector<std::vector<std::string>> tgt_streams;
    for (const auto* part : {&result.splits.train, &result.splits.val}) {
        for (const EncodedExample& ex : *part) {
            src_streams.push_back(ex.src);
            tgt_streams.push_back(ex.tgt);
        }
    }
    Vocabulary src_vocab = build_vocabulary(src_streams, cfg.vocab_size);
    Vocabulary tgt_vocab = build_vocabulary(tgt_streams, cfg.vocab_size);

    DatasetInfo info;
    info.eid = cfg.eid;
    info.bug_type = bug_type_name(cfg.bug_type);
    info.src_rep = representation_name(*cfg.src_rep);
    info.tgt_rep = representation_name(*cfg.tgt_rep);
    info.seed = cfg.seed;
    result.emit = run_stage(
        "emit", [&] { return emit_dataset(result.splits, info, src_vocab, tgt_vocab, cfg.out); });

    if (cfg.run_baseline) {
        run_stage("evaluate", [&] {
            MemorizerIndex index = train_memorizer(result.splits.train, cfg.k);
            PredictionSet preds = memorizer_predict_all(index, result.splits.test);
            save_predictions(preds, cfg.out / "predictions-baseline.jsonl");
            result.baseline = evaluate(make_eval_items(result.splits.test), preds, cfg.k);
            return 0;
        });
    }

    result.stats = dataset_stats(result.splits, bug_type_name(cfg.bug_type));
    write_report(cfg, result);
    extend_manifest(cfg.out,
                    {"records.jsonl", "records.meta.jsonl", "types.json", "pairs.jsonl",
                     "predictions-baseline.jsonl", "report.json"},
                    result.emit.checksums);
    return result;
}

std::vector<ExperimentConfig> experiment_matrix_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("matrix is not valid JSON: ") + e.what());
    }
    json rows;
    if (j.is_array()) {
        rows = j;
    } else if (j.is_object() && j.contains("experiments")) {
        for (const auto& [key, value] : j.items()) {
            (void)value;
            if (key != "experiments" && key != "schema_version") {
                throw ConfigError("unknown matrix field '" + key + "'");
            }
        }
        if (j.contains("schema_version") && j["schema_version"].get<int>() != 1) {
            throw ConfigError("unsupported matrix schema_version");
        }
        rows = j["experiments"];
    } else {
        throw ConfigError("matrix must be a config array or {\"experiments\": [...]}");
    }
    if (!rows.is_array()) throw ConfigError("\"experiments\" must be an array");

    std::vector<ExperimentConfig> out;
    for (const json& row : rows) {
        out.push_back(experiment_config_from_json_text(row.dump()));
    }
    return out;
}

std::vector<ExperimentConfig> load_experiment_matrix(const std::filesystem::path& path) {
    return experiment_matrix_from_json_text(read_file(path));
}

std::vector<MatrixRowResult> run_experiment_matrix(std::vector<ExperimentConfig> rows,
                                                   const std::filesystem::path& out) {
    std::vector<MatrixRowResult> results;
    results.reserve(rows.size());

    json summary_rows = json::array();
    std::vector<std::array<std::string, 5>> table;
    table.push_back({"EID", "RID", "Accuracy", "BLEU", "Position"});

    auto fixed2 = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    for (std::size_t i = 0; i < rows.size(); ++i) {
        MatrixRowResult row;
        row.label = rows[i].eid.empty() ? "row" + std::to_string(i + 1) : rows[i].eid;
        if (rows[i].out.empty()) rows[i].out = out / row.label;

        json srow;
        srow["label"] = row.label;
        std::string rid = "-";
        try {
            RunResult r = run_experiment(rows[i]);
            ExperimentConfig cfg = rows[i];
            finalize_experiment_config(cfg);
            rid = std::string(representation_name(*cfg.src_rep));
            if (*cfg.src_rep != *cfg.tgt_rep) {
                rid += "->";
                rid += representation_name(*cfg.tgt_rep);
            }
            srow["rid"] = rid;
            srow["examples"] = {{"train", r.splits.train.size()},
                                {"val", r.splits.val.size()},
                                {"test", r.splits.test.size()}};
            std::array<std::string, 5> line = {row.label, rid, "-", "-", "-"};
            if (r.baseline) {
                srow["accuracy"] = r.baseline->accuracy;
                srow["bleu"] = r.baseline->bleu;
                if (r.baseline->mean_position) {
                    srow["position"] = *r.baseline->mean_position;
                } else {
                    srow["position"] = nullptr;
                }
                line[2] = fixed2(r.baseline->accuracy);
                line[3] = fixed2(r.baseline->bleu);
                if (r.baseline->mean_position) line[4] = fixed2(*r.baseline->mean_position);
            }
            table.push_back(line);
            row.result = std::move(r);
        } catch (const Error& e) {
            row.error = e.what();
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        if (!row.error.empty()) {
            srow["error"] = row.error;
            table.push_back({row.label, rid, "failed", "-", "-"});
        }
        summary_rows.push_back(srow);
        results.push_back(std::move(row));
    }

    json summary;
    summary["rows"] = summary_rows;
    write_file(out / "matrix-summary.json", summary.dump(2) + "\n");

    std::array<std::size_t, 5> widths{};
    for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            widths[c] = std::max(widths[c], line[c].size());
        }
    }
    std::string text;
    for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) text += "  ";
            text += line[c];
            if (c + 1 < line.size()) text.append(widths[c] - line[c].size(), ' ');
        }
        text += '\n';
    }
    write_file(out / "matrix-summary.txt", text);
    return results;
}

bool golden_check(std::string* failures) {
    struct Row {
        RepresentationId rep;
        const char* expected;
    };
    static const Row rows[] = {
        {RepresentationId::WT1, "setTimeout ( delay , fn )"},
        {RepresentationId::WT2, "set <CAMEL> Timeout ( delay , fn )"},
        {RepresentationId::DB1, "ID setTimeout ( ID delay , ID fn )"},
        {RepresentationId::DB2, "ID setTimeout ( ID number delay , ID function fn )"},
        {RepresentationId::DB3, "ID setTimeout ( ID number , ID function )"},
        {RepresentationId::FS1, "setTimeout ( number , function )"},
        {RepresentationId::FS2, "setTimeout ( arg0 number , arg1 function )"},
        {RepresentationId::FS3, "setTimeout ( ID number , ID function )"},
        {RepresentationId::FS4, "setTimeout ( arg0 ID number , arg1 ID function )"},
        {RepresentationId::TF1, "setTimeout ( Number_1 , Method_1 )"},
        {RepresentationId::AST1,
         "Program ExpressionStatement CallExpression Identifier setTimeout Identifier "
         "delay Identifier fn"},
        {RepresentationId::AST2,
         "Program ExpressionStatement CallExpression Identifier setTimeout Identifier "
         "number delay Identifier function fn"},
        {RepresentationId::AST3,
         "Program ExpressionStatement CallExpression Identifier setTimeout Identifier "
         "number Identifier function"},
        {RepresentationId::AST4, "CallExpression Identifier Identifier Identifier"},
    };

    AstNodePtr statement = reparse_statement("setTimeout (delay, fn);");
    TypeMap types;
    types.by_callee["setTimeout"] = {TypeTag::Number, TypeTag::Function};
    IdiomSet idioms;
    idioms.tokens.insert("setTimeout");
    for (const std::string& kw : js_keywords()) idioms.tokens.insert(kw);

    bool ok = true;
    auto report = [&](const std::string& line) {
        ok = false;
        if (failures != nullptr) {
            *failures += line;
            *failures += '\n';
        }
    };

    for (const Row& row : rows) {
        EncodeContext ctx;
        ctx.bug_type = BugType::SwappedArgs;
        ctx.types = &types;
        ctx.idioms = &idioms;
        ctx.site_path = {0};
        AbstractionMap map;
        ctx.abstraction = &map;
        std::string got = joined(encode(row.rep, *statement, ctx));
        if (got != row.expected) {
            report(std::string(representation_name(row.rep)) + ": expected '" +
                   row.expected + "' got '" + got + "'");
        }
        if (row.rep == RepresentationId::TF1) {
            const auto& reverse = map.reverse();
            std::map<std::string, std::string> expected_map = {{"Number_1", "delay"},
                                                               {"Method_1", "fn"}};
            if (reverse != expected_map) {
                report("TF1 slot map differs from the reference");
            }
        }
    }
    return ok;
}

}  // namespace namefix
