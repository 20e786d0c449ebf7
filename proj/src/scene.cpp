#include "sip/scene.hpp"

#include <algorithm>
#include <cmath>

#include "sip/rng.hpp"

namespace sip {

const std::array<std::string, kAttributeCount>& attribute_names() {
    static const std::array<std::string, kAttributeCount> names = {
        "contains-circle",
        "contains-square",
        "contains-triangle",
        "at-least-two-objects",
        "three-objects",
        "background-dark",
        "background-light",
        "background-mid",
        "any-red-object",
        "any-green-object",
        "any-blue-object",
        "any-yellow-object",
        "large-object-present",
        "small-object-present",
        "object-in-top-half",
        "object-in-bottom-half",
        "object-in-left-half",
        "object-in-right-half",
    };
    return names;
}

namespace {

struct Rgb {
    float r, g, b;
};

Rgb base_color(ColorId id) {
    switch (id) {
        case ColorId::Red: return {0.85f, 0.15f, 0.15f};
        case ColorId::Green: return {0.15f, 0.80f, 0.20f};
        case ColorId::Blue: return {0.15f, 0.25f, 0.85f};
        case ColorId::Yellow: return {0.90f, 0.85f, 0.10f};
    }
    return {0.0f, 0.0f, 0.0f};
}

float clamp01(double v) { return static_cast<float>(std::min(1.0, std::max(0.0, v))); }

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

}  // namespace

bool shape_contains(const SceneObject& obj, double px, double py) {
    const double dx = px - obj.cx;
    const double dy = py - obj.cy;
    const double half = obj.size / 2.0;
    switch (obj.kind) {
        case ShapeKind::Circle:
            return dx * dx + dy * dy <= half * half;
        case ShapeKind::Square:
            return std::abs(dx) <= half && std::abs(dy) <= half;
        case ShapeKind::Triangle: {
            // isoceles triangle pointing up, inscribed in the size x size box
            const double ax = obj.cx, ay = obj.cy - half;
            const double bx = obj.cx - half, by = obj.cy + half;
            const double cx2 = obj.cx + half, cy2 = obj.cy + half;
            const double d1 = cross(bx - ax, by - ay, px - ax, py - ay);
            const double d2 = cross(cx2 - bx, cy2 - by, px - bx, py - by);
            const double d3 = cross(ax - cx2, ay - cy2, px - cx2, py - cy2);
            const bool has_neg = (d1 < 0) || (d2 < 0) || (d3 < 0);
            const bool has_pos = (d1 > 0) || (d2 > 0) || (d3 > 0);
            return !(has_neg && has_pos);
        }
    }
    return false;
}

SceneSpec sample_scene(std::uint64_t seed, int height, int width) {
    if (height < 32 || width < 32 || height % 4 != 0 || width % 4 != 0)
        throw InvalidArgument("sample_scene: canvas must be >= 32 and a multiple of 4");
    Rng rng(derive_seed(seed, "scene"));
    SceneSpec spec;
    spec.seed = seed;

    spec.bg_band = static_cast<BgBand>(rng.uniform_int(0, 2));
    switch (spec.bg_band) {
        case BgBand::Dark: spec.bg_level = rng.uniform(0.10, 0.25); break;
        case BgBand::Mid: spec.bg_level = rng.uniform(0.40, 0.60); break;
        case BgBand::Light: spec.bg_level = rng.uniform(0.75, 0.90); break;
    }

    const int target = static_cast<int>(rng.uniform_int(1, 3));
    for (int i = 0; i < target; ++i) {
        SceneObject obj;
        obj.kind = static_cast<ShapeKind>(rng.uniform_int(0, 2));
        obj.color = static_cast<ColorId>(rng.uniform_int(0, 3));
        obj.size = rng.uniform(0.10, 0.40) * height;
        obj.brightness = rng.uniform(0.85, 1.15);
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
            obj.cx = rng.uniform(obj.size / 2.0, width - obj.size / 2.0);
            obj.cy = rng.uniform(obj.size / 2.0, height - obj.size / 2.0);
            placed = true;
            for (const auto& other : spec.objects) {
                const double d = std::hypot(obj.cx - other.cx, obj.cy - other.cy);
                if (d < std::max(obj.size, other.size) / 2.0) {
                    placed = false;
                    break;
                }
            }
        }
        if (placed) spec.objects.push_back(obj);
    }

    // Drop objects that are mostly hidden by the ones above them, so every
    // attribute stays visually inferable. The topmost object is never hidden.
    std::vector<std::int64_t> visible(spec.objects.size(), 0), solo(spec.objects.size(), 0);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const double px = x + 0.5, py = y + 0.5;
            int top = -1;
            for (int i = static_cast<int>(spec.objects.size()) - 1; i >= 0; --i)
                if (shape_contains(spec.objects[static_cast<std::size_t>(i)], px, py)) {
                    if (top < 0) top = i;
                    ++solo[static_cast<std::size_t>(i)];
                }
            if (top >= 0) ++visible[static_cast<std::size_t>(top)];
        }
    std::vector<SceneObject> kept;
    for (std::size_t i = 0; i < spec.objects.size(); ++i)
        if (solo[i] > 0 && static_cast<double>(visible[i]) >= 0.3 * static_cast<double>(solo[i]))
            kept.push_back(spec.objects[i]);
    if (kept.empty() && !spec.objects.empty()) kept.push_back(spec.objects.back());
    spec.objects = std::move(kept);
    return spec;
}

LabeledSample render_scene(const SceneSpec& spec, int height, int width) {
    LabeledSample sample;
    sample.image = Image(height, width);
    sample.segmentation = SegmentationMap(height, width, kSegClasses);

    std::vector<Rgb> fills(spec.objects.size());
    for (std::size_t i = 0; i < spec.objects.size(); ++i) {
        const Rgb base = base_color(spec.objects[i].color);
        const double s = spec.objects[i].brightness;
        fills[i] = {clamp01(base.r * s), clamp01(base.g * s), clamp01(base.b * s)};
    }
    const float bg = clamp01(spec.bg_level);

    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const double px = x + 0.5, py = y + 0.5;
            Rgb color = {bg, bg, bg};
            int label = 0;
            for (int i = static_cast<int>(spec.objects.size()) - 1; i >= 0; --i) {
                const auto& obj = spec.objects[static_cast<std::size_t>(i)];
                if (shape_contains(obj, px, py)) {
                    color = fills[static_cast<std::size_t>(i)];
                    label = static_cast<int>(obj.kind) + 1;
                    break;
                }
            }
            sample.image.at(0, y, x) = color.r;
            sample.image.at(1, y, x) = color.g;
            sample.image.at(2, y, x) = color.b;
            sample.segmentation.at(y, x) = static_cast<std::uint8_t>(label);
        }

    sample.attributes = attributes_of(spec, height, width);
    return sample;
}

AttributeVector attributes_of(const SceneSpec& spec, int height, int width) {
    std::array<bool, kAttributeCount> bit{};
    bit[5] = spec.bg_band == BgBand::Dark;
    bit[6] = spec.bg_band == BgBand::Light;
    bit[7] = spec.bg_band == BgBand::Mid;
    const std::size_t n = spec.objects.size();
    bit[3] = n >= 2;
    bit[4] = n == 3;
    for (const auto& obj : spec.objects) {
        bit[static_cast<std::size_t>(obj.kind)] = true;
        bit[8 + static_cast<std::size_t>(obj.color)] = true;
        if (obj.size > 0.30 * height) bit[12] = true;
        if (obj.size < 0.15 * height) bit[13] = true;
        if (obj.cy < height / 2.0) bit[14] = true; else bit[15] = true;
        if (obj.cx < width / 2.0) bit[16] = true; else bit[17] = true;
    }
    AttributeVector v;
    v.values.resize(kAttributeCount);
    for (int i = 0; i < kAttributeCount; ++i) v.values[static_cast<std::size_t>(i)] = bit[static_cast<std::size_t>(i)] ? 1.0f : 0.0f;
    return v;
}

LabeledSample generate_scene(std::uint64_t seed, int height, int width) {
    return render_scene(sample_scene(seed, height, width), height, width);
}

Mask sample_mask(std::uint64_t seed, int height, int width) {
    if (height < 32 || width < 32)
        throw InvalidArgument("sample_mask: canvas must be at least 32x32");
    Rng rng(derive_seed(seed, "mask"));
    const auto side_range = [](int side) {
        const int lo = static_cast<int>(std::ceil(0.3125 * side));
        const int hi = static_cast<int>(std::floor(0.625 * side));
        return std::pair<int, int>(lo, hi);
    };
    const auto [h_lo, h_hi] = side_range(height);
    const auto [w_lo, w_hi] = side_range(width);
    const int box_h = static_cast<int>(rng.uniform_int(h_lo, h_hi));
    const int box_w = static_cast<int>(rng.uniform_int(w_lo, w_hi));
    const int top = static_cast<int>(rng.uniform_int(0, height - box_h));
    const int left = static_cast<int>(rng.uniform_int(0, width - box_w));
    return Mask::rect(height, width, top, left, box_h, box_w);
}

Mask center_mask(int height, int width) {
    const int box_h = height / 2, box_w = width / 2;
    return Mask::rect(height, width, (height - box_h) / 2, (width - box_w) / 2, box_h, box_w);
}

}  // namespace sip
