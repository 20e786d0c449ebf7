#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sip/image.hpp"
#include "sip/scene.hpp"

namespace sip {

enum class Split { Train = 0, Val = 1, Test = 2 };

const char* split_name(Split s);

struct SampleRecord {
    int id = 0;
    std::vector<std::uint8_t> attribute_bits;  // length kAttributeCount
    Split split = Split::Train;
};

// On-disk layout:
//   images/{id}.png   segs/{id}.pgm   manifest.jsonl   meta.json
class Dataset {
public:
    static Dataset open(const std::string& dir);

    const std::string& dir() const { return dir_; }
    int canvas_height() const { return height_; }
    int canvas_width() const { return width_; }
    std::uint64_t seed() const { return seed_; }
    int size() const { return static_cast<int>(records_.size()); }

    const SampleRecord& record(int i) const { return records_.at(static_cast<std::size_t>(i)); }
    const std::vector<SampleRecord>& records() const { return records_; }
    std::vector<int> split_indices(Split s) const;

    Image load_image(int i) const;
    SegmentationMap load_segmentation(int i) const;
    AttributeVector attributes(int i) const;

private:
    std::string dir_;
    int height_ = 0, width_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<SampleRecord> records_;
};

// Generates n labeled samples under out_dir. Sample i is deterministic in
// (seed, i); splits are assigned by index (8/1/1 of every 10).
void build_dataset(const std::string& out_dir, int n, std::uint64_t seed,
                   int height, int width);

Split split_for_index(int i);

}  // namespace sip
