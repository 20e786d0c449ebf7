#pragma once

#include <cstdint>
#include <vector>

#include "sip/tensor.hpp"

namespace sip {

// H x W x 3 raster in [0,1], stored channel-major ([3][H][W]).
// Heights and widths are multiples of 4: the inpainting encoder
// downsamples twice and must land on an integer bottleneck size.
class Image {
public:
    Image() = default;
    Image(int height, int width);

    int height() const { return height_; }
    int width() const { return width_; }

    float& at(int c, int y, int x) { return px_[idx(c, y, x)]; }
    float at(int c, int y, int x) const { return px_[idx(c, y, x)]; }

    float* data() { return px_.data(); }
    const float* data() const { return px_.data(); }
    std::size_t size() const { return px_.size(); }

    // Throws InvalidArgument when a pixel is non-finite or outside [0,1].
    void validate() const;

    bool same_dims(const Image& o) const {
        return height_ == o.height_ && width_ == o.width_;
    }

private:
    std::size_t idx(int c, int y, int x) const {
        return (static_cast<std::size_t>(c) * height_ + y) * width_ + x;
    }

    int height_ = 0;
    int width_ = 0;
    std::vector<float> px_;
};

// Single axis-aligned rectangular hole; 1 marks missing pixels.
// The empty mask (no hole) is representable with a zero-sized box.
class Mask {
public:
    Mask() = default;

    static Mask rect(int height, int width, int top, int left, int box_h, int box_w);
    static Mask none(int height, int width);
    // Validates that the raster is exactly one solid rectangle (or empty).
    static Mask from_bits(int height, int width, const std::vector<std::uint8_t>& bits);

    int height() const { return height_; }
    int width() const { return width_; }
    int top() const { return top_; }
    int left() const { return left_; }
    int box_height() const { return box_h_; }
    int box_width() const { return box_w_; }
    bool empty_box() const { return box_h_ == 0 || box_w_ == 0; }

    bool at(int y, int x) const {
        return y >= top_ && y < top_ + box_h_ && x >= left_ && x < left_ + box_w_;
    }

    std::int64_t hole_area() const {
        return static_cast<std::int64_t>(box_h_) * box_w_;
    }

private:
    int height_ = 0, width_ = 0;
    int top_ = 0, left_ = 0, box_h_ = 0, box_w_ = 0;
};

// Length-N1 vector in [0,1]; ground-truth vectors are exactly binary.
struct AttributeVector {
    std::vector<float> values;

    int size() const { return static_cast<int>(values.size()); }
    void validate() const;
    bool operator==(const AttributeVector& o) const { return values == o.values; }
};

// Per-pixel class labels in [0, num_classes).
struct SegmentationMap {
    int height = 0;
    int width = 0;
    int num_classes = 0;
    std::vector<std::uint8_t> labels;  // row-major H x W

    SegmentationMap() = default;
    SegmentationMap(int h, int w, int classes)
        : height(h), width(w), num_classes(classes),
          labels(static_cast<std::size_t>(h) * w, 0) {}

    std::uint8_t& at(int y, int x) { return labels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int y, int x) const { return labels[static_cast<std::size_t>(y) * width + x]; }

    bool operator==(const SegmentationMap& o) const {
        return height == o.height && width == o.width && labels == o.labels;
    }
};

// --- raster / vector operations ------------------------------------------

// Zeroes the masked region in all channels.
Image apply_mask(const Image& image, const Mask& mask);

// Keeps the corrupted input outside the hole and the restored content inside.
Image composite(const Image& restored, const Image& input_corrupted, const Mask& mask);

// [C][H][W] one-hot encoding; rejects labels >= num_classes.
Tensor<float> one_hot(const SegmentationMap& seg, int num_classes);

// Per-pixel argmax over channels of a [C][H][W] probability grid.
SegmentationMap argmax_labels(const Tensor<float>& probs);

// [N1][M][M] grid carrying v at every spatial position.
Tensor<float> spatial_replicate(const AttributeVector& v, int side);

}  // namespace sip
