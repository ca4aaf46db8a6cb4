#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dctprep {

/// Interleaved 8-bit RGB raster, row-major, R,G,B per pixel.
struct RgbImage {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> data;

    RgbImage() = default;
    RgbImage(int h, int w)
        : height(h), width(w), data(static_cast<std::size_t>(3) * h * w, 0) {}

    bool valid() const {
        return height >= 1 && width >= 1 &&
               data.size() == static_cast<std::size_t>(3) * height * width;
    }

    std::uint8_t& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::uint8_t at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

/// Parses a binary PPM (P6) stream with 8-bit maxval. Throws std::runtime_error
/// on malformed headers, truncated payloads, or unsupported variants.
RgbImage read_ppm(const std::vector<std::uint8_t>& bytes);

/// Serializes to a binary PPM (P6) stream; read_ppm(write_ppm(img)) == img.
std::vector<std::uint8_t> write_ppm(const RgbImage& img);

RgbImage read_ppm_file(const std::string& path);
void write_ppm_file(const RgbImage& img, const std::string& path);

std::vector<std::uint8_t> read_file(const std::string& path);

/// Writes to a temporary sibling then renames over the target, so a partially
/// written file is never observable at `path`.
void write_file_atomic(const std::string& path, const void* data, std::size_t size);

}  // namespace dctprep
