#pragma once

#include <string>

#include "sip/image.hpp"

namespace sip {

// 8-bit RGB PNG; pixel values map linearly (v = byte / 255).
void write_png(const std::string& path, const Image& image);
Image read_png(const std::string& path);

// Binary PGM (P5), one byte per pixel, used for segmentation labels
// (raw label values) and masks (0 / 255).
void write_pgm(const std::string& path, int height, int width,
               const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_pgm(const std::string& path, int& height, int& width);

void write_segmentation(const std::string& path, const SegmentationMap& seg);
SegmentationMap read_segmentation(const std::string& path, int num_classes);

void write_mask(const std::string& path, const Mask& mask);
Mask read_mask(const std::string& path);

}  // namespace sip
