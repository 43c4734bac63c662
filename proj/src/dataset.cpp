#include "namefix/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "namefix/errors.hpp"
#include "namefix/rng.hpp"

namespace namefix {
namespace {

void append_field(std::string& key, const std::string& value) {
    key += value;
    key += '\x1f';
}

void append_field(std::string& key, const std::vector<std::string>& values) {
    for (const std::string& v : values) {
        key += v;
        key += '\x1e';
    }
    key += '\x1f';
}

std::string joined(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw IoError("cannot write '" + path.string() + "'");
}

}  // namespace

std::string example_to_jsonl(const EncodedExample& ex) {
    nlohmann::ordered_json j;
    j["bug_type"] = bug_type_name(ex.bug_type);
    j["src_rep"] = representation_name(ex.src_rep);
    j["tgt_rep"] = representation_name(ex.tgt_rep);
    j["src"] = ex.src;
    j["tgt"] = ex.tgt;
    j["map"] = ex.map;
    j["file"] = ex.file;
    if (!ex.wt2_src.empty()) j["wt2_src"] = ex.wt2_src;
    if (!ex.wt2_tgt.empty()) j["wt2_tgt"] = ex.wt2_tgt;
    return j.dump();
}

EncodedExample example_from_jsonl(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedEncoding(std::string("bad example row: ") + e.what());
    }
    EncodedExample ex;
    auto bug = bug_type_from_name(j.at("bug_type").get<std::string>());
    if (!bug) throw MalformedEncoding("unknown bug type in example row");
    ex.bug_type = *bug;
    ex.src_rep = representation_from_name(j.at("src_rep").get<std::string>());
    ex.tgt_rep = representation_from_name(j.at("tgt_rep").get<std::string>());
    ex.src = j.at("src").get<std::vector<std::string>>();
    ex.tgt = j.at("tgt").get<std::vector<std::string>>();
    if (j.contains("map")) ex.map = j["map"].get<std::map<std::string, std::string>>();
    if (j.contains("file")) ex.file = j["file"].get<std::string>();
    if (j.contains("wt2_src")) ex.wt2_src = j["wt2_src"].get<std::vector<std::string>>();
    if (j.contains("wt2_tgt")) ex.wt2_tgt = j["wt2_tgt"].get<std::vector<std::string>>();
    return ex;
}

std::string dedup_key(const MutationPair& pair) {
    std::string key;
    if (pair.call) {
        const CallSiteRecord& r = *pair.call;
        append_field(key, r.c);
        append_field(key, r.b);
        append_field(key, r.a1);
        append_field(key, r.a2);
        append_field(key, std::vector<std::string>{r.a[0], r.a[1]});
        append_field(key, std::vector<std::string>{type_tag_name(r.at[0]),
                                                   type_tag_name(r.at[1])});
        append_field(key, std::vector<std::string>{type_tag_name(r.sat[0]),
                                                   type_tag_name(r.sat[1])});
        return key;
    }
    if (pair.binop) {
        const BinOpRecord& r = *pair.binop;
        append_field(key, r.lo);
        append_field(key, r.ro);
        append_field(key, r.o);
        append_field(key, r.co);
        append_field(key, r.bo);
        append_field(key, std::vector<std::string>{r.ops[0], r.ops[1]});
        append_field(key, std::vector<std::string>{type_tag_name(r.ot[0]),
                                                   type_tag_name(r.ot[1])});
        return key;
    }
    throw MissingContext("datapoint carries no record");
}

void dedup_within(std::vector<MutationPair>& items) {
    std::unordered_set<std::string> seen;
    std::vector<MutationPair> kept;
    kept.reserve(items.size());
    for (auto& item : items) {
        if (seen.insert(dedup_key(item)).second) kept.push_back(std::move(item));
    }
    items = std::move(kept);
}

void dedup_against(std::vector<MutationPair>& items,
                   const std::vector<MutationPair>& reference) {
    std::unordered_set<std::string> blocked;
    for (const auto& item : reference) blocked.insert(dedup_key(item));
    std::vector<MutationPair> kept;
    kept.reserve(items.size());
    for (auto& item : items) {
        if (blocked.count(dedup_key(item)) == 0) kept.push_back(std::move(item));
    }
    items = std::move(kept);
}

SplitResult split_files(std::vector<std::string> files, const SplitSpec& spec,
                        std::uint64_t seed) {
    std::sort(files.begin(), files.end());
    if (spec.train_files + spec.test_files > files.size()) {
        throw SplitError("corpus has " + std::to_string(files.size()) +
                         " files but the split needs " +
                         std::to_string(spec.train_files + spec.test_files));
    }
    auto val_count = static_cast<std::size_t>(
        std::llround(spec.val_fraction * static_cast<double>(spec.train_files)));
    if (val_count > spec.train_files) {
        throw SplitError("validation fraction exceeds the train slice");
    }
    SeededRng rng(stable_hash(seed, "file-split"));
    rng.shuffle(files);

    SplitResult out;
    std::size_t train_keep = spec.train_files - val_count;
    out.train.assign(files.begin(), files.begin() + static_cast<std::ptrdiff_t>(train_keep));
    out.val.assign(files.begin() + static_cast<std::ptrdiff_t>(train_keep),
                   files.begin() + static_cast<std::ptrdiff_t>(spec.train_files));
    out.test.assign(files.begin() + static_cast<std::ptrdiff_t>(spec.train_files),
                    files.begin() +
                        static_cast<std::ptrdiff_t>(spec.train_files + spec.test_files));
    return out;
}

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& streams,
                            std::size_t max_size) {
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& stream : streams) {
        for (const auto& tok : stream) ++counts[tok];
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    Vocabulary v;
    v.tokens = {"<unk>", "<s>", "</s>"};
    for (std::size_t i = 0; i < ranked.size() && i < max_size; ++i) {
        v.tokens.push_back(ranked[i].first);
    }
    for (std::size_t i = 0; i < v.tokens.size(); ++i) v.index.emplace(v.tokens[i], i);
    return v;
}

std::string file_checksum(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(buf.str());
    return hex.str();
}

EmitResult emit_dataset(const DatasetSplits& splits, const DatasetInfo& info,
                        const Vocabulary& src_vocab, const Vocabulary& tgt_vocab,
                        const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    EmitResult result;

    auto emit_split = [&](const char* name, const std::vector<EncodedExample>& examples) {
        std::string src_text;
        std::string tgt_text;
        std::string aux_text;
        for (const EncodedExample& ex : examples) {
            std::vector<std::string> src;
            src.reserve(ex.src.size());
            for (const std::string& t : ex.src) src.push_back(src_vocab.normalize(t));
            std::vector<std::string> tgt;
            tgt.reserve(ex.tgt.size());
            for (const std::string& t : ex.tgt) tgt.push_back(tgt_vocab.normalize(t));
            src_text += joined(src);
            src_text += '\n';
            tgt_text += joined(tgt);
            tgt_text += '\n';
            aux_text += example_to_jsonl(ex);
            aux_text += '\n';
        }
        std::string src_name = std::string(name) + ".src";
        std::string tgt_name = std::string(name) + ".tgt";
        std::string aux_name = "examples-" + std::string(name) + ".jsonl";
        write_text(out_dir / src_name, src_text);
        write_text(out_dir / tgt_name, tgt_text);
        write_text(out_dir / aux_name, aux_text);
        result.line_counts[name] = examples.size();
        result.checksums[src_name] = file_checksum(out_dir / src_name);
        result.checksums[tgt_name] = file_checksum(out_dir / tgt_name);
        result.checksums[aux_name] = file_checksum(out_dir / aux_name);
    };
    emit_split("train", splits.train);
    emit_split("val", splits.val);
    emit_split("test", splits.test);

    auto emit_vocab = [&](const char* name, const Vocabulary& vocab) {
        std::string text;
        for (const std::string& t : vocab.tokens) {
            text += t;
            text += '\n';
        }
        write_text(out_dir / name, text);
        result.checksums[name] = file_checksum(out_dir / name);
    };
    emit_vocab("vocab.src", src_vocab);
    emit_vocab("vocab.tgt", tgt_vocab);

    nlohmann::json manifest;
    manifest["eid"] = info.eid;
    manifest["bug_type"] = info.bug_type;
    manifest["src_rep"] = info.src_rep;
    manifest["tgt_rep"] = info.tgt_rep;
    manifest["seed"] = info.seed;
    manifest["examples"] = {{"train", splits.train.size()},
                            {"val", splits.val.size()},
                            {"test", splits.test.size()}};
    manifest["vocab"] = {{"src", src_vocab.tokens.size()}, {"tgt", tgt_vocab.tokens.size()}};
    manifest["files"] = result.checksums;
    write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");

    return result;
}

StatsRow dataset_stats(const DatasetSplits& splits, const std::string& bug_type) {
    StatsRow row;
    row.bug_type = bug_type;
    row.train = splits.train.size();
    row.val = splits.val.size();
    row.test = splits.test.size();
    row.real = 0;
    return row;
}

}  // namespace namefix
