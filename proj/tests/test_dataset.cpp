#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "namefix/ast.hpp"
#include "namefix/dataset.hpp"
#include "namefix/errors.hpp"
#include "namefix/extraction.hpp"
#include "namefix/mutation.hpp"
#include "namefix/rng.hpp"
#include "support/gen.hpp"

using namespace namefix;

namespace {

MutationPair call_pair(const std::string& src, const std::string& file = "t.js") {
    auto recs = extract_call_sites(*parse_js(src), file);
    REQUIRE(!recs.empty());
    return mutate_swap_args(recs[0]);
}

MutationPair binop_pair(const std::string& src, const std::string& file = "t.js") {
    auto recs = extract_binops(*parse_js(src), file);
    REQUIRE(!recs.empty());
    return mutate_swap_operands(recs[0]);
}

std::vector<std::string> read_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::filesystem::path fresh_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("namefix_dataset_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

// Independent checksum implementation to cross-check file_checksum.
std::string fnv1a64_reference(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace

TEST_CASE("duplicate keys depend on the record fields, not the file") {
    MutationPair a = call_pair("f(x, y);", "one.js");
    MutationPair b = call_pair("f(x, y);", "two.js");
    CHECK(dedup_key(a) == dedup_key(b)); // same call, different file

    MutationPair c = call_pair("f(x, z);", "one.js");
    CHECK(dedup_key(a) != dedup_key(c)); // different argument

    MutationPair d = call_pair("g(x, y);", "one.js");
    CHECK(dedup_key(a) != dedup_key(d)); // different callee

    MutationPair e = call_pair("a.f(x, y);", "one.js");
    CHECK(dedup_key(a) != dedup_key(e)); // different receiver
}

TEST_CASE("duplicate keys see synthesized types and operator draws") {
    auto recs1 = extract_call_sites(*parse_js("f(x, y);"), "a.js");
    auto recs2 = extract_call_sites(*parse_js("f(x, y);"), "a.js");
    TypeMap t1;
    t1.by_callee["f"] = {TypeTag::Number, TypeTag::String};
    TypeMap t2;
    t2.by_callee["f"] = {TypeTag::Object, TypeTag::Array};
    apply_types(recs1, t1);
    apply_types(recs2, t2);
    CHECK(dedup_key(mutate_swap_args(recs1[0])) != dedup_key(mutate_swap_args(recs2[0])));

    // Same operation, different drawn replacement operator.
    auto ops = extract_binops(*parse_js("x = a + b;"), "a.js");
    SeededRng r1(0), r2(1);
    MutationPair m1 = mutate_wrong_operator(ops[0], r1);
    MutationPair m2 = mutate_wrong_operator(ops[0], r2);
    if (m1.binop->bo != m2.binop->bo) {
        CHECK(dedup_key(m1) != dedup_key(m2));
    }
    // Operand-swap pairs of the same operation collide regardless of file.
    CHECK(dedup_key(binop_pair("x = a - b;", "p.js")) ==
          dedup_key(binop_pair("y = a - b;", "q.js")));
}

TEST_CASE("dedup_within keeps the first of each key") {
    std::vector<MutationPair> items;
    items.push_back(call_pair("f(x, y);", "one.js"));
    items.push_back(call_pair("g(u, v);", "one.js"));
    items.push_back(call_pair("f(x, y);", "two.js"));
    items.push_back(call_pair("g(u, v);", "two.js"));
    items.push_back(call_pair("h(p, q);", "two.js"));
    dedup_within(items);
    REQUIRE(items.size() == 3);
    CHECK(items[0].file == "one.js");
    CHECK(items[1].file == "one.js");
    CHECK(items[2].file == "two.js");
    CHECK(items[2].call->c == "h");
}

TEST_CASE("dedup_against removes keys that appear in the reference") {
    std::vector<MutationPair> train;
    train.push_back(call_pair("f(x, y);"));
    train.push_back(call_pair("g(u, v);"));
    std::vector<MutationPair> test;
    test.push_back(call_pair("f(x, y);", "other.js")); // in train: goes
    test.push_back(call_pair("h(p, q);"));             // novel: stays
    dedup_against(test, train);
    REQUIRE(test.size() == 1);
    CHECK(test[0].call->c == "h");
}

TEST_CASE("file splits are deterministic, disjoint, and sized as requested") {
    std::vector<std::string> files;
    for (int i = 0; i < 50; ++i) files.push_back("file" + std::to_string(i) + ".js");

    SplitSpec spec;
    spec.train_files = 30;
    spec.test_files = 12;
    spec.val_fraction = 0.2;

    SplitResult r1 = split_files(files, spec, 99);
    // Input order must not matter: the splitter sorts before shuffling.
    std::vector<std::string> shuffled = files;
    std::reverse(shuffled.begin(), shuffled.end());
    SplitResult r2 = split_files(shuffled, spec, 99);
    CHECK(r1.train == r2.train);
    CHECK(r1.val == r2.val);
    CHECK(r1.test == r2.test);

    // val files come out of the train allowance, from its end.
    CHECK(r1.val.size() == 6); // llround(0.2 * 30)
    CHECK(r1.train.size() == 24);
    CHECK(r1.test.size() == 12);

    std::set<std::string> seen;
    for (const auto& f : r1.train) CHECK(seen.insert(f).second);
    for (const auto& f : r1.val) CHECK(seen.insert(f).second);
    for (const auto& f : r1.test) CHECK(seen.insert(f).second);

    // Different seed, different arrangement (overwhelmingly likely).
    SplitResult r3 = split_files(files, spec, 100);
    CHECK(r1.train != r3.train);

    // A fresh generator seeded the same way reproduces the shuffle: the
    // split depends only on (sorted files, spec, seed).
    SplitResult r4 = split_files(files, spec, 99);
    CHECK(r1.train == r4.train);
    CHECK(r1.test == r4.test);
}

TEST_CASE("splits refuse corpora smaller than the request") {
    std::vector<std::string> files = {"a.js", "b.js", "c.js"};
    SplitSpec spec;
    spec.train_files = 3;
    spec.test_files = 1;
    spec.val_fraction = 0.0;
    CHECK_THROWS_AS((void)split_files(files, spec, 1), SplitError);
    spec.train_files = 2;
    CHECK_NOTHROW((void)split_files(files, spec, 1));
}

TEST_CASE("leftover files beyond the requested counts are simply unused") {
    std::vector<std::string> files;
    for (int i = 0; i < 10; ++i) files.push_back("f" + std::to_string(i));
    SplitSpec spec;
    spec.train_files = 4;
    spec.test_files = 2;
    spec.val_fraction = 0.5;
    SplitResult r = split_files(files, spec, 5);
    CHECK(r.train.size() == 2);
    CHECK(r.val.size() == 2);
    CHECK(r.test.size() == 2);
}

TEST_CASE("vocabulary ranks by frequency with lexicographic ties") {
    std::vector<std::vector<std::string>> streams = {
        {"x", "x", "x", "y", "y", "z"},
        {"w", "y", "z"},
    };
    Vocabulary v = build_vocabulary(streams, 3);
    REQUIRE(v.tokens.size() == 6); // 3 reserved + 3 kept
    CHECK(v.tokens[0] == "<unk>");
    CHECK(v.tokens[1] == "<s>");
    CHECK(v.tokens[2] == "</s>");
    CHECK(v.tokens[3] == "x"); // 3 uses
    CHECK(v.tokens[4] == "y"); // 3 uses, later alphabetically
    CHECK(v.tokens[5] == "z"); // 2 uses; w (1 use) is cut
    CHECK(v.contains("x"));
    CHECK(!v.contains("w"));
    CHECK(v.normalize("w") == "<unk>");
    CHECK(v.normalize("x") == "x");
    for (size_t i = 0; i < v.tokens.size(); ++i) {
        CHECK(v.index.at(v.tokens[i]) == i);
    }
}

TEST_CASE("emitted dataset: aligned lines, jsonl side files, manifest") {
    DatasetSplits splits;
    TypeMap types;
    types.by_callee["f"] = {TypeTag::Number, TypeTag::String};
    types.by_callee["g"] = {TypeTag::Object, TypeTag::Function};
    IdiomSet idioms = build_idiom_set({}, 300);
    splits.train.push_back(make_example(call_pair("f(alpha, beta);", "a.js"),
                                        RepresentationId::WT1, RepresentationId::WT1,
                                        types, idioms));
    splits.train.push_back(make_example(call_pair("g(gamma, delta);", "b.js"),
                                        RepresentationId::WT1, RepresentationId::WT1,
                                        types, idioms));
    splits.val.push_back(make_example(call_pair("f(beta, alpha);", "c.js"),
                                      RepresentationId::WT1, RepresentationId::WT1,
                                      types, idioms));
    splits.test.push_back(make_example(call_pair("g(epsilon, zeta);", "d.js"),
                                       RepresentationId::WT1, RepresentationId::WT1,
                                       types, idioms));

    std::vector<std::vector<std::string>> src_streams, tgt_streams;
    for (const auto& ex : splits.train) {
        src_streams.push_back(ex.src);
        tgt_streams.push_back(ex.tgt);
    }
    Vocabulary sv = build_vocabulary(src_streams, 100);
    Vocabulary tv = build_vocabulary(tgt_streams, 100);

    DatasetInfo info;
    info.eid = "E1";
    info.bug_type = "swapped_args";
    info.src_rep = "WT1";
    info.tgt_rep = "WT1";
    info.seed = 7;

    auto dir = fresh_dir("emit");
    EmitResult res = emit_dataset(splits, info, sv, tv, dir);

    CHECK(res.line_counts.at("train") == 2);
    CHECK(res.line_counts.at("val") == 1);
    CHECK(res.line_counts.at("test") == 1);

    auto train_src = read_lines(dir / "train.src");
    auto train_tgt = read_lines(dir / "train.tgt");
    REQUIRE(train_src.size() == 2);
    REQUIRE(train_tgt.size() == 2);
    CHECK(train_src[0] == "f ( beta , alpha )");  // buggy side
    CHECK(train_tgt[0] == "f ( alpha , beta )");  // fixed side

    // Out-of-vocabulary tokens surface as <unk> in the emitted lines but the
    // side files keep the raw sequences.
    auto test_src = read_lines(dir / "test.src");
    REQUIRE(test_src.size() == 1);
    CHECK(test_src[0] == "g ( <unk> , <unk> )");
    auto side = read_lines(dir / "examples-test.jsonl");
    REQUIRE(side.size() == 1);
    EncodedExample back = example_from_jsonl(side[0]);
    CHECK(back.src == splits.test[0].src);
    CHECK(back.tgt == splits.test[0].tgt);

    // vocab files list the tokens in rank order.
    auto vocab_src = read_lines(dir / "vocab.src");
    REQUIRE(vocab_src.size() == sv.tokens.size());
    CHECK(vocab_src[0] == "<unk>");

    // The manifest checksums match an independent hash of the bytes.
    auto manifest = read_lines(dir / "manifest.json");
    REQUIRE(!manifest.empty());
    for (const auto& [name, sum] : res.checksums) {
        std::ifstream in(dir / name, std::ios::binary);
        REQUIRE(in.good());
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK(sum == fnv1a64_reference(buf.str()));
        CHECK(file_checksum(dir / name) == sum);
    }
    for (const char* name : {"train.src", "train.tgt", "val.src", "val.tgt", "test.src",
                             "test.tgt", "vocab.src", "vocab.tgt", "examples-train.jsonl",
                             "examples-val.jsonl", "examples-test.jsonl"}) {
        CHECK(res.checksums.count(name) == 1);
    }
    CHECK(res.checksums.count("manifest.json") == 0); // cannot checksum itself
}

TEST_CASE("emitting the same dataset twice produces identical bytes") {
    DatasetSplits splits;
    TypeMap types;
    types.by_callee["f"] = {TypeTag::Number, TypeTag::String};
    IdiomSet idioms = build_idiom_set({}, 300);
    splits.train.push_back(make_example(call_pair("f(a, b);"), RepresentationId::TF1,
                                        RepresentationId::TF1, types, idioms));
    splits.test.push_back(make_example(call_pair("f(c, d);"), RepresentationId::TF1,
                                       RepresentationId::TF1, types, idioms));
    Vocabulary v = build_vocabulary({splits.train[0].src}, 100);
    DatasetInfo info;
    info.eid = "E10";
    info.bug_type = "swapped_args";
    info.src_rep = "TF1";
    info.tgt_rep = "TF1";

    auto d1 = fresh_dir("rerun1");
    auto d2 = fresh_dir("rerun2");
    EmitResult r1 = emit_dataset(splits, info, v, v, d1);
    EmitResult r2 = emit_dataset(splits, info, v, v, d2);
    CHECK(r1.checksums == r2.checksums);
    CHECK(read_lines(d1 / "manifest.json") == read_lines(d2 / "manifest.json"));
}

TEST_CASE("example jsonl lines round-trip every field") {
    TypeMap types;
    types.by_callee["write"] = {TypeTag::String, TypeTag::Object};
    IdiomSet idioms = build_idiom_set({{"write"}}, 300);
    EncodedExample ex = make_example(call_pair("write(name, opts);", "w.js"),
                                     RepresentationId::TF1, RepresentationId::WT2,
                                     types, idioms);
    EncodedExample back = example_from_jsonl(example_to_jsonl(ex));
    CHECK(back.bug_type == ex.bug_type);
    CHECK(back.src_rep == ex.src_rep);
    CHECK(back.tgt_rep == ex.tgt_rep);
    CHECK(back.src == ex.src);
    CHECK(back.tgt == ex.tgt);
    CHECK(back.map == ex.map);
    CHECK(back.wt2_src == ex.wt2_src);
    CHECK(back.wt2_tgt == ex.wt2_tgt);
    CHECK(back.file == ex.file);
    // One line, no embedded newline.
    CHECK(example_to_jsonl(ex).find('\n') == std::string::npos);
}

TEST_CASE("dataset stats count the split sizes") {
    DatasetSplits splits;
    TypeMap types;
    types.by_callee["f"] = {TypeTag::Number, TypeTag::String};
    IdiomSet idioms = build_idiom_set({}, 300);
    for (int i = 0; i < 3; ++i) {
        splits.train.push_back(make_example(call_pair("f(a, b);"), RepresentationId::WT1,
                                            RepresentationId::WT1, types, idioms));
    }
    splits.val.push_back(make_example(call_pair("f(c, d);"), RepresentationId::WT1,
                                      RepresentationId::WT1, types, idioms));
    StatsRow row = dataset_stats(splits, "swapped_args");
    CHECK(row.bug_type == "swapped_args");
    CHECK(row.train == 3);
    CHECK(row.val == 1);
    CHECK(row.test == 0);
    CHECK(row.real == 0); // no curated real-world examples ship with the tool
}

TEST_CASE("checksums cover the exact bytes") {
    auto dir = fresh_dir("sums");
    std::ofstream(dir / "x.txt") << "token stream\n";
    CHECK(file_checksum(dir / "x.txt") == fnv1a64_reference("token stream\n"));
    std::ofstream(dir / "empty.txt") << "";
    // fnv1a64 offset basis, never an empty string.
    CHECK(file_checksum(dir / "empty.txt") == fnv1a64_reference(""));
    CHECK(file_checksum(dir / "empty.txt").size() == 16);
    CHECK_THROWS_AS((void)file_checksum(dir / "missing.txt"), IoError);
}

TEST_CASE("dedup in bulk over a generated corpus") {
    testgen::StatementGen gen(12);
    std::vector<MutationPair> pairs;
    for (int f = 0; f < 6; ++f) {
        AstNodePtr program = gen.program(25);
        for (const auto& rec : extract_call_sites(*program, "f" + std::to_string(f))) {
            try {
                pairs.push_back(mutate_swap_args(rec));
            } catch (const DegenerateMutation&) {
            }
        }
    }
    REQUIRE(pairs.size() > 30);
    std::vector<MutationPair> copy;
    for (const auto& p : pairs) {
        MutationPair c;
        c.bug_type = p.bug_type;
        c.file = p.file;
        c.fixed_stmt = clone(*p.fixed_stmt);
        c.buggy_stmt = clone(*p.buggy_stmt);
        c.site_path = p.site_path;
        c.seed_draw = p.seed_draw;
        c.call = p.call;
        c.binop = p.binop;
        copy.push_back(std::move(c));
    }

    dedup_within(pairs);
    std::set<std::string> keys;
    for (const auto& p : pairs) CHECK(keys.insert(dedup_key(p)).second);

    // Removing against the deduplicated set empties the original list.
    dedup_against(copy, pairs);
    CHECK(copy.empty());
}
