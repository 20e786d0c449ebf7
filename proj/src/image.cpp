#include "sip/image.hpp"

#include <cmath>

namespace sip {

Image::Image(int height, int width) : height_(height), width_(width) {
    if (height <= 0 || width <= 0)
        throw InvalidArgument("image: dimensions must be positive");
    if (height % 4 != 0 || width % 4 != 0)
        throw InvalidArgument("image: dimensions must be multiples of 4");
    px_.assign(static_cast<std::size_t>(3) * height * width, 0.0f);
}

void Image::validate() const {
    for (float v : px_) {
        if (!std::isfinite(v) || v < 0.0f || v > 1.0f)
            throw InvalidArgument("image: pixel outside [0,1]");
    }
}

Mask Mask::rect(int height, int width, int top, int left, int box_h, int box_w) {
    if (height <= 0 || width <= 0)
        throw InvalidArgument("mask: canvas dimensions must be positive");
    if (box_h < 0 || box_w < 0)
        throw InvalidArgument("mask: negative box size");
    if (box_h > 0 && box_w > 0) {
        if (top < 0 || left < 0 || top + box_h > height || left + box_w > width)
            throw InvalidArgument("mask: rectangle not fully inside the canvas");
    } else {
        box_h = box_w = top = left = 0;
    }
    Mask m;
    m.height_ = height;
    m.width_ = width;
    m.top_ = top;
    m.left_ = left;
    m.box_h_ = box_h;
    m.box_w_ = box_w;
    return m;
}

Mask Mask::none(int height, int width) { return rect(height, width, 0, 0, 0, 0); }

Mask Mask::from_bits(int height, int width, const std::vector<std::uint8_t>& bits) {
    if (static_cast<std::int64_t>(bits.size()) != static_cast<std::int64_t>(height) * width)
        throw InvalidArgument("mask: bit raster size mismatch");
    int y0 = height, y1 = -1, x0 = width, x1 = -1;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (bits[static_cast<std::size_t>(y) * width + x]) {
                y0 = std::min(y0, y);
                y1 = std::max(y1, y);
                x0 = std::min(x0, x);
                x1 = std::max(x1, x);
            }
    if (y1 < 0) return none(height, width);
    Mask m = rect(height, width, y0, x0, y1 - y0 + 1, x1 - x0 + 1);
    // the bounding box must be solid and nothing may lie outside it
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (static_cast<bool>(bits[static_cast<std::size_t>(y) * width + x]) != m.at(y, x))
                throw InvalidArgument("mask: raster is not a single solid rectangle");
    return m;
}

void AttributeVector::validate() const {
    for (float v : values)
        if (!std::isfinite(v) || v < 0.0f || v > 1.0f)
            throw InvalidArgument("attribute vector: entry outside [0,1]");
}

namespace {
void check_dims(const Image& image, const Mask& mask, const char* what) {
    if (image.height() != mask.height() || image.width() != mask.width())
        throw InvalidArgument(std::string(what) + ": image/mask dimension mismatch");
}
}  // namespace

Image apply_mask(const Image& image, const Mask& mask) {
    check_dims(image, mask, "apply_mask");
    Image out = image;
    for (int c = 0; c < 3; ++c)
        for (int y = mask.top(); y < mask.top() + mask.box_height(); ++y)
            for (int x = mask.left(); x < mask.left() + mask.box_width(); ++x)
                out.at(c, y, x) = 0.0f;
    return out;
}

Image composite(const Image& restored, const Image& input_corrupted, const Mask& mask) {
    if (!restored.same_dims(input_corrupted))
        throw InvalidArgument("composite: image dimension mismatch");
    check_dims(input_corrupted, mask, "composite");
    Image out = input_corrupted;
    for (int c = 0; c < 3; ++c)
        for (int y = mask.top(); y < mask.top() + mask.box_height(); ++y)
            for (int x = mask.left(); x < mask.left() + mask.box_width(); ++x)
                out.at(c, y, x) = restored.at(c, y, x);
    return out;
}

Tensor<float> one_hot(const SegmentationMap& seg, int num_classes) {
    if (num_classes <= 0) throw InvalidArgument("one_hot: class count must be positive");
    Tensor<float> grid({num_classes, seg.height, seg.width});
    for (int y = 0; y < seg.height; ++y)
        for (int x = 0; x < seg.width; ++x) {
            int label = seg.at(y, x);
            if (label >= num_classes)
                throw InvalidArgument("one_hot: label " + std::to_string(label) +
                                      " >= class count " + std::to_string(num_classes));
            grid[(static_cast<std::int64_t>(label) * seg.height + y) * seg.width + x] = 1.0f;
        }
    return grid;
}

SegmentationMap argmax_labels(const Tensor<float>& probs) {
    if (probs.ndim() != 3) throw InvalidArgument("argmax_labels: expected [C][H][W]");
    const int classes = probs.dim(0), h = probs.dim(1), w = probs.dim(2);
    SegmentationMap seg(h, w, classes);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int best = 0;
            float best_v = probs[(static_cast<std::int64_t>(0) * h + y) * w + x];
            for (int c = 1; c < classes; ++c) {
                float v = probs[(static_cast<std::int64_t>(c) * h + y) * w + x];
                if (v > best_v) {
                    best_v = v;
                    best = c;
                }
            }
            seg.at(y, x) = static_cast<std::uint8_t>(best);
        }
    return seg;
}

Tensor<float> spatial_replicate(const AttributeVector& v, int side) {
    if (side < 1) throw InvalidArgument("spatial_replicate: side must be >= 1");
    const int n = v.size();
    Tensor<float> grid({n, side, side});
    for (int c = 0; c < n; ++c) {
        float val = v.values[static_cast<std::size_t>(c)];
        float* plane = grid.data() + static_cast<std::int64_t>(c) * side * side;
        std::fill(plane, plane + static_cast<std::int64_t>(side) * side, val);
    }
    return grid;
}

}  // namespace sip
