#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "namefix/errors.hpp"
#include "namefix/pipeline.hpp"
#include "support/gen.hpp"

using namespace namefix;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("namefix_pipeline_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::filesystem::path mini_corpus() {
    return testgen::source_dir() / "data" / "mini_corpus";
}

std::string minimal_config_text(const std::string& extra = "") {
    return std::string("{\"schema_version\": 1, \"eid\": \"E1\", "
                       "\"bug_type\": \"swapped_args\", "
                       "\"split\": {\"train_files\": 70, \"test_files\": 20, "
                       "\"val_fraction\": 0.1}") +
           extra + "}";
}

std::size_t count_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) ++n;
    return n;
}

} // namespace

TEST_CASE("config parsing: defaults, presets, and strictness") {
    ExperimentConfig c = experiment_config_from_json_text(minimal_config_text());
    CHECK(c.schema_version == 1);
    CHECK(c.eid == "E1");
    CHECK(c.bug_type == BugType::SwappedArgs);
    CHECK(c.seed == 0);
    CHECK(c.vocab_size == 30000);
    CHECK(c.k == 25);
    CHECK(!c.exclude_commutative);
    CHECK(!c.dedup_train);
    CHECK(c.run_baseline);
    CHECK(c.split.train_files == 70);
    CHECK(c.split.test_files == 20);
    CHECK(c.split.val_fraction == doctest::Approx(0.1));
    CHECK(!c.src_rep.has_value()); // filled by finalize

    // Unknown keys anywhere are rejected, not ignored.
    CHECK_THROWS_AS(
        (void)experiment_config_from_json_text(minimal_config_text(", \"typo_key\": 1")),
        ConfigError);
    CHECK_THROWS_AS((void)experiment_config_from_json_text(
                        "{\"schema_version\": 1, \"eid\": \"E1\", "
                        "\"bug_type\": \"swapped_args\", "
                        "\"split\": {\"train_files\": 1, \"test_files\": 1, "
                        "\"val_fraction\": 0, \"oops\": 2}}"),
                    ConfigError);
    // Wrong schema versions are refused at finalize.
    ExperimentConfig wrong = experiment_config_from_json_text(
        minimal_config_text(", \"corpus\": \"x\", \"out\": \"y\""));
    wrong.schema_version = 2;
    CHECK_THROWS_AS(finalize_experiment_config(wrong), ConfigError);
    // Malformed JSON is a config error, not a crash.
    CHECK_THROWS_AS((void)experiment_config_from_json_text("{"), ConfigError);
    CHECK_THROWS_AS((void)experiment_config_from_json_text("[1, 2]"), ConfigError);
}

TEST_CASE("presets fill both representations; explicit values must agree") {
    const auto& ids = preset_experiment_ids();
    CHECK(ids.size() == 16); // E1..E14 plus the two translation setups
    CHECK(std::find(ids.begin(), ids.end(), "E15") == ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "E16") == ids.end());

    ExperimentConfig c = experiment_config_from_json_text(
        minimal_config_text(", \"corpus\": \"c\", \"out\": \"o\""));
    finalize_experiment_config(c);
    CHECK(c.src_rep == RepresentationId::WT1);
    CHECK(c.tgt_rep == RepresentationId::WT1);

    // E5 -> DB3 both sides; E17/E18 translate between WT1 and AST1.
    ExperimentConfig e5 = c;
    e5.eid = "E5";
    e5.src_rep.reset();
    e5.tgt_rep.reset();
    finalize_experiment_config(e5);
    CHECK(e5.src_rep == RepresentationId::DB3);
    CHECK(e5.tgt_rep == RepresentationId::DB3);

    ExperimentConfig e17 = c;
    e17.eid = "E17";
    e17.src_rep.reset();
    e17.tgt_rep.reset();
    finalize_experiment_config(e17);
    CHECK(e17.src_rep == RepresentationId::WT1);
    CHECK(e17.tgt_rep == RepresentationId::AST1);

    ExperimentConfig e18 = c;
    e18.eid = "E18";
    e18.src_rep.reset();
    e18.tgt_rep.reset();
    finalize_experiment_config(e18);
    CHECK(e18.src_rep == RepresentationId::AST1);
    CHECK(e18.tgt_rep == RepresentationId::WT1);

    // Contradicting a preset is an error; matching it is fine.
    ExperimentConfig clash = c;
    clash.eid = "E5";
    clash.src_rep = RepresentationId::WT1;
    clash.tgt_rep.reset();
    CHECK_THROWS_AS(finalize_experiment_config(clash), ConfigError);
    ExperimentConfig agree = c;
    agree.eid = "E5";
    agree.src_rep = RepresentationId::DB3;
    agree.tgt_rep = RepresentationId::DB3;
    CHECK_NOTHROW(finalize_experiment_config(agree));

    // E15/E16 exist only with explicit representations.
    ExperimentConfig e15 = c;
    e15.eid = "E15";
    e15.src_rep.reset();
    e15.tgt_rep.reset();
    CHECK_THROWS_AS(finalize_experiment_config(e15), ConfigError);
    e15.src_rep = RepresentationId::WT2;
    e15.tgt_rep = RepresentationId::WT2;
    CHECK_NOTHROW(finalize_experiment_config(e15));

    // Unknown eids are rejected.
    ExperimentConfig bogus = c;
    bogus.eid = "E99";
    CHECK_THROWS_AS(finalize_experiment_config(bogus), ConfigError);
}

TEST_CASE("finalize validates the full parameter surface") {
    auto base = [] {
        ExperimentConfig c = experiment_config_from_json_text(
            minimal_config_text(", \"corpus\": \"c\", \"out\": \"o\""));
        return c;
    };
    ExperimentConfig ok = base();
    CHECK_NOTHROW(finalize_experiment_config(ok));

    ExperimentConfig no_corpus = base();
    no_corpus.corpus.clear();
    CHECK_THROWS_AS(finalize_experiment_config(no_corpus), ConfigError);

    ExperimentConfig no_out = base();
    no_out.out.clear();
    CHECK_THROWS_AS(finalize_experiment_config(no_out), ConfigError);

    ExperimentConfig zero_train = base();
    zero_train.split.train_files = 0;
    CHECK_THROWS_AS(finalize_experiment_config(zero_train), ConfigError);

    ExperimentConfig bad_frac = base();
    bad_frac.split.val_fraction = 1.5;
    CHECK_THROWS_AS(finalize_experiment_config(bad_frac), ConfigError);
    bad_frac.split.val_fraction = -0.1;
    CHECK_THROWS_AS(finalize_experiment_config(bad_frac), ConfigError);

    ExperimentConfig zero_vocab = base();
    zero_vocab.vocab_size = 0;
    CHECK_THROWS_AS(finalize_experiment_config(zero_vocab), ConfigError);

    ExperimentConfig zero_k = base();
    zero_k.k = 0;
    CHECK_THROWS_AS(finalize_experiment_config(zero_k), ConfigError);
}

TEST_CASE("signature encodings cannot be configured for operator defects") {
    for (const char* eid : {"E6", "E7", "E8", "E9", "E12", "E13"}) {
        for (const char* bug : {"wrong_binop", "wrong_operands"}) {
            CAPTURE(std::string(eid));
            CAPTURE(std::string(bug));
            ExperimentConfig c = experiment_config_from_json_text(
                std::string("{\"schema_version\": 1, \"eid\": \"") + eid +
                "\", \"bug_type\": \"" + bug +
                "\", \"split\": {\"train_files\": 70, \"test_files\": 20, "
                "\"val_fraction\": 0.1}, \"corpus\": \"c\", \"out\": \"o\"}");
            CHECK_THROWS_AS(finalize_experiment_config(c), ConfigError);
        }
    }
    // The same representations are fine for swapped arguments.
    ExperimentConfig ok = experiment_config_from_json_text(
        "{\"schema_version\": 1, \"eid\": \"E7\", \"bug_type\": \"swapped_args\", "
        "\"split\": {\"train_files\": 70, \"test_files\": 20, \"val_fraction\": 0.1}, "
        "\"corpus\": \"c\", \"out\": \"o\"}");
    CHECK_NOTHROW(finalize_experiment_config(ok));
}

TEST_CASE("corpus listing is recursive, filtered, sorted, and relative") {
    auto dir = fresh_dir("corpus");
    std::filesystem::create_directories(dir / "sub");
    std::ofstream(dir / "b.js") << "f(a, b);\n";
    std::ofstream(dir / "a.js") << "g(c, d);\n";
    std::ofstream(dir / "sub" / "c.js") << "h(e, f);\n";
    std::ofstream(dir / "sub" / "tree.json") << "{\"type\":\"Program\",\"body\":[]}";
    std::ofstream(dir / "notes.txt") << "ignored\n";

    auto files = list_corpus_files(dir);
    REQUIRE(files.size() == 4);
    CHECK(files[0] == "a.js");
    CHECK(files[1] == "b.js");
    CHECK(files[2] == "sub/c.js");
    CHECK(files[3] == "sub/tree.json");

    CHECK_THROWS_AS((void)list_corpus_files(dir / "missing"), IoError);
}

TEST_CASE("load_program dispatches on the extension") {
    auto dir = fresh_dir("load");
    std::ofstream(dir / "s.js") << "f(a, b);\n";
    std::ofstream(dir / "t.json")
        << "{\"type\":\"Program\",\"body\":[{\"type\":\"ExpressionStatement\","
           "\"expression\":{\"type\":\"Identifier\",\"name\":\"x\"}}]}";
    AstNodePtr js = load_program(dir / "s.js");
    CHECK(js->kind == NodeKind::Program);
    AstNodePtr json = load_program(dir / "t.json");
    CHECK(json->children.size() == 1);
    std::ofstream(dir / "bad.js") << "function (\n";
    CHECK_THROWS_AS((void)load_program(dir / "bad.js"), ParseError);
    std::ofstream(dir / "bad.json") << "{nope";
    CHECK_THROWS_AS((void)load_program(dir / "bad.json"), IngestError);
    CHECK_THROWS_AS((void)load_program(dir / "missing.js"), IoError);
}

TEST_CASE("call records save and load through the jsonl pair") {
    auto dir = fresh_dir("callrec");
    auto recs = extract_call_sites(
        *parse_js("var t = setTimeout(delay, fn); app.log('x', 2);"), "a.js");
    TypeMap types = synthesize_types(recs, 3);
    apply_types(recs, types);

    save_call_records(recs, dir / "records.jsonl", dir / "records.meta.jsonl");
    auto back = load_call_records(dir / "records.jsonl", dir / "records.meta.jsonl");
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].file == recs[i].file);
        CHECK(back[i].c == recs[i].c);
        CHECK(back[i].b == recs[i].b);
        CHECK(back[i].a1 == recs[i].a1);
        CHECK(back[i].a2 == recs[i].a2);
        CHECK(back[i].a == recs[i].a);
        CHECK(back[i].at == recs[i].at);
        CHECK(back[i].sat == recs[i].sat);
        CHECK(back[i].ordinal == recs[i].ordinal);
        CHECK(back[i].site_path == recs[i].site_path);
        REQUIRE(back[i].statement != nullptr);
        CHECK(equal_ignoring_spans(*back[i].statement, *recs[i].statement));
    }
}

TEST_CASE("statements with regex literals survive the record files") {
    // Such statements cannot be re-parsed from printed tokens, so the save
    // format must carry the tree itself.
    const char* estree = R"({
      "type": "Program",
      "body": [
        {"type": "ExpressionStatement",
         "expression": {"type": "CallExpression",
                        "callee": {"type": "Identifier", "name": "match"},
                        "arguments": [
                          {"type": "Literal", "value": {}, "regex": {"pattern": "a+",
                           "flags": "g"}, "raw": "/a+/g"},
                          {"type": "Identifier", "name": "text"}]}}
      ]
    })";
    auto recs = extract_call_sites(*ingest_estree(estree), "r.js");
    REQUIRE(recs.size() == 1);
    auto dir = fresh_dir("regexrec");
    save_call_records(recs, dir / "r.jsonl", dir / "r.meta.jsonl");
    auto back = load_call_records(dir / "r.jsonl", dir / "r.meta.jsonl");
    REQUIRE(back.size() == 1);
    CHECK(equal_ignoring_spans(*back[0].statement, *recs[0].statement));
    CHECK(join_tokens(print_tokens(*back[0].statement)) == "match ( /a+/g , text )");
}

TEST_CASE("operation records save and load through the jsonl pair") {
    auto dir = fresh_dir("binoprec");
    auto recs = extract_binops(*parse_js("x = (a + b) * c; y = p && q;"), "b.js");
    REQUIRE(recs.size() == 3);
    save_binop_records(recs, dir / "records.jsonl", dir / "records.meta.jsonl");
    auto back = load_binop_records(dir / "records.jsonl", dir / "records.meta.jsonl");
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].lo == recs[i].lo);
        CHECK(back[i].ro == recs[i].ro);
        CHECK(back[i].o == recs[i].o);
        CHECK(back[i].co == recs[i].co);
        CHECK(back[i].bo == recs[i].bo);
        CHECK(back[i].ops == recs[i].ops);
        CHECK(back[i].ot == recs[i].ot);
        CHECK(equal_ignoring_spans(*back[i].statement, *recs[i].statement));
    }
}

TEST_CASE("type maps save and load") {
    TypeMap types;
    types.seed = 42;
    types.by_callee["f"] = {TypeTag::Number, TypeTag::String};
    types.by_callee["a.b.g"] = {TypeTag::Function, TypeTag::Object};
    auto dir = fresh_dir("types");
    save_types(types, dir / "types.json");
    TypeMap back = load_types(dir / "types.json");
    CHECK(back.seed == 42);
    CHECK(back.by_callee == types.by_callee);
    CHECK_THROWS_AS((void)load_types(dir / "missing.json"), IoError);
}

TEST_CASE("mutation pairs save and load with both trees intact") {
    auto recs = extract_call_sites(*parse_js("f(a, b); g(c, d);"), "p.js");
    std::vector<MutationPair> pairs;
    for (const auto& r : recs) pairs.push_back(mutate_swap_args(r));
    auto ops = extract_binops(*parse_js("x = a < b;"), "p.js");
    SeededRng rng(record_rng_seed(5, ops[0].file, ops[0].ordinal));
    pairs.push_back(mutate_wrong_operator(ops[0], rng));

    auto dir = fresh_dir("pairs");
    save_pairs(pairs, dir / "pairs.jsonl");
    auto back = load_pairs(dir / "pairs.jsonl");
    REQUIRE(back.size() == pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(back[i].bug_type == pairs[i].bug_type);
        CHECK(back[i].file == pairs[i].file);
        CHECK(back[i].site_path == pairs[i].site_path);
        CHECK(back[i].seed_draw == pairs[i].seed_draw);
        CHECK(equal_ignoring_spans(*back[i].fixed_stmt, *pairs[i].fixed_stmt));
        CHECK(equal_ignoring_spans(*back[i].buggy_stmt, *pairs[i].buggy_stmt));
        CHECK(back[i].call.has_value() == pairs[i].call.has_value());
        CHECK(back[i].binop.has_value() == pairs[i].binop.has_value());
        if (pairs[i].binop) {
            CHECK(back[i].binop->bo == pairs[i].binop->bo);
            CHECK(back[i].binop->co == pairs[i].binop->co);
        }
        // The loaded pair deduplicates identically to the original.
        CHECK(dedup_key(back[i]) == dedup_key(pairs[i]));
    }
}

TEST_CASE("examples and predictions round-trip through their files") {
    TypeMap types;
    types.by_callee["f"] = {TypeTag::Number, TypeTag::String};
    IdiomSet idioms = build_idiom_set({}, 300);
    auto recs = extract_call_sites(*parse_js("f(a, b); f(c, d);"), "e.js");
    std::vector<EncodedExample> examples;
    for (const auto& r : recs) {
        examples.push_back(make_example(mutate_swap_args(r), RepresentationId::TF1,
                                        RepresentationId::TF1, types, idioms));
    }
    auto dir = fresh_dir("examples");
    save_examples(examples, dir / "ex.jsonl");
    auto back = load_examples(dir / "ex.jsonl");
    REQUIRE(back.size() == 2);
    CHECK(back[0].src == examples[0].src);
    CHECK(back[0].map == examples[0].map);

    PredictionSet preds;
    preds.candidates.resize(2);
    preds.candidates[0] = {examples[0].tgt, examples[0].src};
    save_predictions(preds, dir / "preds.jsonl");
    PredictionSet loaded = load_predictions(dir / "preds.jsonl", 2);
    REQUIRE(loaded.candidates.size() == 2);
    CHECK(loaded.candidates[0] == preds.candidates[0]);
    CHECK(loaded.candidates[1].empty());
}

TEST_CASE("the reference statement encodes to the pinned sequences") {
    std::string failures;
    bool ok = golden_check(&failures);
    CHECK(failures.empty());
    CHECK(ok);
}

TEST_CASE("a full run produces a consistent dataset directory") {
    ExperimentConfig c = experiment_config_from_json_text(minimal_config_text());
    c.corpus = mini_corpus();
    c.out = fresh_dir("run_e1");
    c.seed = 7;
    finalize_experiment_config(c);
    RunResult res = run_experiment(c);

    // The corpus has 101 files; one of them is intentionally unparsable.
    CHECK(res.counters.files_total == 101);
    CHECK(res.counters.files_failed == 1);
    CHECK(res.counters.records >= res.counters.pairs);
    CHECK(res.counters.pairs ==
          res.counters.records - res.counters.degenerate);
    CHECK(res.stats.train == res.splits.train.size());
    CHECK(res.stats.val == res.splits.val.size());
    CHECK(res.stats.test == res.splits.test.size());
    CHECK(res.stats.train > 0);
    CHECK(res.stats.test > 0);

    // Emitted line counts match the in-memory splits and the manifest.
    CHECK(count_lines(c.out / "train.src") == res.stats.train);
    CHECK(count_lines(c.out / "train.tgt") == res.stats.train);
    CHECK(count_lines(c.out / "val.src") == res.stats.val);
    CHECK(count_lines(c.out / "test.src") == res.stats.test);
    CHECK(count_lines(c.out / "examples-test.jsonl") == res.stats.test);
    StatsRow manifest_stats = stats_from_manifest(c.out);
    CHECK(manifest_stats.train == res.stats.train);
    CHECK(manifest_stats.val == res.stats.val);
    CHECK(manifest_stats.test == res.stats.test);
    CHECK(manifest_stats.bug_type == "swapped_args");

    // Intermediates land next to the dataset.
    for (const char* name :
         {"records.jsonl", "records.meta.jsonl", "types.json", "pairs.jsonl",
          "predictions-baseline.jsonl", "report.json", "manifest.json"}) {
        CAPTURE(std::string(name));
        CHECK(std::filesystem::exists(c.out / name));
    }

    // The baseline ran and scored zero on the deduplicated test slice.
    REQUIRE(res.baseline.has_value());
    CHECK(res.baseline->examples == res.stats.test);
    CHECK(res.baseline->accuracy == doctest::Approx(0.0));

    // Loading the intermediates back reproduces the pair count.
    auto pairs = load_pairs(c.out / "pairs.jsonl");
    CHECK(pairs.size() == res.counters.pairs);
}

TEST_CASE("runs are reproducible byte for byte") {
    ExperimentConfig c = experiment_config_from_json_text(minimal_config_text());
    c.corpus = mini_corpus();
    c.seed = 13;
    c.out = fresh_dir("repro1");
    finalize_experiment_config(c);
    RunResult r1 = run_experiment(c);
    ExperimentConfig c2 = c;
    c2.out = fresh_dir("repro2");
    RunResult r2 = run_experiment(c2);
    CHECK(r1.emit.checksums == r2.emit.checksums);
    CHECK(r1.stats.train == r2.stats.train);
    CHECK(r1.stats.test == r2.stats.test);
}

TEST_CASE("the baseline can be disabled") {
    ExperimentConfig c = experiment_config_from_json_text(minimal_config_text());
    c.corpus = mini_corpus();
    c.out = fresh_dir("nobase");
    c.run_baseline = false;
    finalize_experiment_config(c);
    RunResult res = run_experiment(c);
    CHECK(!res.baseline.has_value());
    CHECK(!std::filesystem::exists(c.out / "predictions-baseline.jsonl"));
}

TEST_CASE("operator-defect runs carry the drawn operator through the pipeline") {
    ExperimentConfig c = experiment_config_from_json_text(
        "{\"schema_version\": 1, \"eid\": \"E1\", \"bug_type\": \"wrong_binop\", "
        "\"split\": {\"train_files\": 70, \"test_files\": 20, \"val_fraction\": 0.1}}");
    c.corpus = mini_corpus();
    c.out = fresh_dir("binop_run");
    c.seed = 3;
    finalize_experiment_config(c);
    RunResult res = run_experiment(c);
    CHECK(res.stats.train > 0);
    auto pairs = load_pairs(c.out / "pairs.jsonl");
    REQUIRE(!pairs.empty());
    for (const auto& p : pairs) {
        REQUIRE(p.binop.has_value());
        CHECK(!p.binop->bo.empty());
        CHECK(p.binop->bo != p.binop->co);
    }
    // No types.json for operator defects: the signatures play no part.
    CHECK(!std::filesystem::exists(c.out / "types.json"));
}

TEST_CASE("matrix files parse both accepted shapes and stay strict") {
    std::string row = minimal_config_text(", \"corpus\": \"c\"");
    auto wrapped = experiment_matrix_from_json_text("{\"experiments\": [" + row + "]}");
    REQUIRE(wrapped.size() == 1);
    CHECK(wrapped[0].eid == "E1");
    auto bare = experiment_matrix_from_json_text("[" + row + ", " + row + "]");
    CHECK(bare.size() == 2);
    CHECK_THROWS_AS((void)experiment_matrix_from_json_text("{\"rows\": []}"), ConfigError);
    CHECK_THROWS_AS((void)experiment_matrix_from_json_text(
                        "{\"experiments\": [], \"extra\": 1}"),
                    ConfigError);
    CHECK_THROWS_AS((void)experiment_matrix_from_json_text("42"), ConfigError);
}

TEST_CASE("matrix rows run in isolation and report into the summary") {
    auto out = fresh_dir("matrix");
    std::vector<ExperimentConfig> rows;

    ExperimentConfig good = experiment_config_from_json_text(minimal_config_text());
    good.corpus = mini_corpus();
    good.seed = 7;
    rows.push_back(good);

    // Broken row: signature encoding with an operator defect.
    ExperimentConfig bad = experiment_config_from_json_text(
        "{\"schema_version\": 1, \"eid\": \"E7\", \"bug_type\": \"wrong_binop\", "
        "\"split\": {\"train_files\": 70, \"test_files\": 20, \"val_fraction\": 0.1}}");
    bad.corpus = mini_corpus();
    rows.push_back(bad);

    auto results = run_experiment_matrix(rows, out);
    REQUIRE(results.size() == 2);
    CHECK(results[0].label == "E1");
    CHECK(results[0].result.has_value());
    CHECK(results[0].error.empty());
    CHECK(results[1].label == "E7");
    CHECK(!results[1].result.has_value());
    CHECK(!results[1].error.empty());

    // Row without an explicit out dir landed under the matrix out dir.
    CHECK(std::filesystem::exists(out / "E1" / "manifest.json"));
    CHECK(std::filesystem::exists(out / "matrix-summary.json"));
    CHECK(std::filesystem::exists(out / "matrix-summary.txt"));

    // The summary text mentions both rows.
    std::ifstream in(out / "matrix-summary.txt");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    CHECK(text.find("E1") != std::string::npos);
    CHECK(text.find("E7") != std::string::npos);
}

TEST_CASE("an empty matrix still writes a summary") {
    auto out = fresh_dir("matrix_empty");
    auto results = run_experiment_matrix({}, out);
    CHECK(results.empty());
    CHECK(std::filesystem::exists(out / "matrix-summary.json"));
    CHECK(std::filesystem::exists(out / "matrix-summary.txt"));
}
