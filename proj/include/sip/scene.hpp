#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sip/image.hpp"

namespace sip {

// Synthetic scenes: a flat background plus 1-3 flat-colored shapes.
// Attribute and segmentation ground truth is exact by construction.

enum class ShapeKind : std::uint8_t { Circle = 0, Square = 1, Triangle = 2 };
enum class ColorId : std::uint8_t { Red = 0, Green = 1, Blue = 2, Yellow = 3 };
enum class BgBand : std::uint8_t { Dark = 0, Mid = 1, Light = 2 };

// Segmentation classes: 0 background, then one class per shape kind.
inline constexpr int kSegClasses = 4;
inline constexpr int kAttributeCount = 18;

// Attribute catalog. Index order is frozen; manifests and reports rely on it.
const std::array<std::string, kAttributeCount>& attribute_names();

struct SceneObject {
    ShapeKind kind;
    ColorId color;
    double cx, cy;      // center, pixels
    double size;        // full extent (diameter / side), pixels
    double brightness;  // per-object fill scale, attribute-neutral
};

struct SceneSpec {
    BgBand bg_band = BgBand::Mid;
    double bg_level = 0.5;            // gray level of the background
    std::vector<SceneObject> objects; // z-order: later entries are on top
    std::uint64_t seed = 0;
};

struct LabeledSample {
    Image image;
    AttributeVector attributes;   // binary ground truth, length kAttributeCount
    SegmentationMap segmentation; // kSegClasses classes
};

// Exact point-membership test used by the rasterizer (pixel centers at +0.5).
bool shape_contains(const SceneObject& obj, double px, double py);

// Draws a scene spec; placement honors the minimum center distance rule and
// objects that would end up mostly hidden are dropped. Deterministic in seed.
SceneSpec sample_scene(std::uint64_t seed, int height, int width);

// Rasterizes a spec into image + exact labels. Pure function of the spec.
LabeledSample render_scene(const SceneSpec& spec, int height, int width);

// Ground-truth attribute bits evaluated on the spec itself.
AttributeVector attributes_of(const SceneSpec& spec, int height, int width);

LabeledSample generate_scene(std::uint64_t seed, int height, int width);

// Random rectangular hole: side lengths uniform over
// [ceil(0.3125*side), floor(0.625*side)] per axis, position uniform over
// fully contained placements.
Mask sample_mask(std::uint64_t seed, int height, int width);

// Centered hole covering half the image side per axis (retrieval protocol).
Mask center_mask(int height, int width);

}  // namespace sip
