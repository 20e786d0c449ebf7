#include "sip/dataset.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sip/image_io.hpp"
#include "sip/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace sip {

const char* split_name(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Val: return "val";
        case Split::Test: return "test";
    }
    return "?";
}

Split split_for_index(int i) {
    const int r = i % 10;
    if (r < 8) return Split::Train;
    return r == 8 ? Split::Val : Split::Test;
}

namespace {

std::string id_name(int id) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06d", id);
    return buf;
}

Split split_from_name(const std::string& s) {
    if (s == "train") return Split::Train;
    if (s == "val") return Split::Val;
    if (s == "test") return Split::Test;
    throw IoError("manifest: unknown split '" + s + "'");
}

}  // namespace

void build_dataset(const std::string& out_dir, int n, std::uint64_t seed,
                   int height, int width) {
    if (n < 1) throw InvalidArgument("build_dataset: n must be >= 1");
    std::error_code ec;
    fs::create_directories(fs::path(out_dir) / "images", ec);
    fs::create_directories(fs::path(out_dir) / "segs", ec);
    if (ec) throw IoError("cannot create dataset directories under " + out_dir);

    std::ofstream manifest(fs::path(out_dir) / "manifest.jsonl");
    if (!manifest) throw IoError("cannot write manifest in " + out_dir);

    for (int i = 0; i < n; ++i) {
        const LabeledSample sample =
            generate_scene(derive_seed(seed, "sample", static_cast<std::uint64_t>(i)), height, width);
        const std::string name = id_name(i);
        write_png((fs::path(out_dir) / "images" / (name + ".png")).string(), sample.image);
        write_segmentation((fs::path(out_dir) / "segs" / (name + ".pgm")).string(),
                           sample.segmentation);
        json rec;
        rec["id"] = i;
        std::vector<int> bits;
        bits.reserve(sample.attributes.values.size());
        for (float v : sample.attributes.values) bits.push_back(v > 0.5f ? 1 : 0);
        rec["attributes"] = bits;
        rec["split"] = split_name(split_for_index(i));
        manifest << rec.dump() << "\n";
    }
    manifest.close();
    if (!manifest) throw IoError("manifest write failed in " + out_dir);

    json meta;
    meta["n"] = n;
    meta["seed"] = seed;
    meta["height"] = height;
    meta["width"] = width;
    meta["classes"] = kSegClasses;
    meta["attributes"] = kAttributeCount;
    std::ofstream mf(fs::path(out_dir) / "meta.json");
    mf << meta.dump(2) << "\n";
    if (!mf) throw IoError("meta write failed in " + out_dir);
}

Dataset Dataset::open(const std::string& dir) {
    Dataset ds;
    ds.dir_ = dir;

    std::ifstream mf(fs::path(dir) / "meta.json");
    if (!mf) throw IoError("not a dataset directory (missing meta.json): " + dir);
    json meta = json::parse(mf);
    ds.height_ = meta.at("height").get<int>();
    ds.width_ = meta.at("width").get<int>();
    ds.seed_ = meta.at("seed").get<std::uint64_t>();

    std::ifstream manifest(fs::path(dir) / "manifest.jsonl");
    if (!manifest) throw IoError("missing manifest.jsonl in " + dir);
    std::string line;
    while (std::getline(manifest, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        SampleRecord r;
        r.id = rec.at("id").get<int>();
        for (int b : rec.at("attributes").get<std::vector<int>>())
            r.attribute_bits.push_back(static_cast<std::uint8_t>(b));
        r.split = split_from_name(rec.at("split").get<std::string>());
        ds.records_.push_back(std::move(r));
    }
    if (ds.records_.empty()) throw IoError("empty manifest in " + dir);
    return ds;
}

std::vector<int> Dataset::split_indices(Split s) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (records_[static_cast<std::size_t>(i)].split == s) out.push_back(i);
    return out;
}

Image Dataset::load_image(int i) const {
    return read_png((fs::path(dir_) / "images" / (id_name(record(i).id) + ".png")).string());
}

SegmentationMap Dataset::load_segmentation(int i) const {
    return read_segmentation((fs::path(dir_) / "segs" / (id_name(record(i).id) + ".pgm")).string(),
                             kSegClasses);
}

AttributeVector Dataset::attributes(int i) const {
    AttributeVector v;
    for (std::uint8_t b : record(i).attribute_bits) v.values.push_back(b ? 1.0f : 0.0f);
    return v;
}

}  // namespace sip
