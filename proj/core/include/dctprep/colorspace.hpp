#pragma once

#include <array>
#include <vector>

#include "dctprep/image.hpp"

namespace dctprep {

/// One real-valued sample plane, row-major.
struct Plane {
    int height = 0;
    int width = 0;
    std::vector<double> v;

    Plane() = default;
    Plane(int h, int w) : height(h), width(w), v(static_cast<std::size_t>(h) * w, 0.0) {}

    double& at(int y, int x) { return v[static_cast<std::size_t>(y) * width + x]; }
    double at(int y, int x) const { return v[static_cast<std::size_t>(y) * width + x]; }

    friend bool operator==(const Plane&, const Plane&) = default;
};

/// Full-resolution Y/Cb/Cr planes (no chroma subsampling). `shifted` tracks
/// whether the -128 level shift has been applied.
struct YccPlanes {
    Plane y, cb, cr;
    bool shifted = false;

    int height() const { return y.height; }
    int width() const { return y.width; }
};

/// Full-range BT.601 RGB -> YCbCr, real-valued (no rounding).
/// Chroma planes are offset by +128; gray inputs map to Cb = Cr = 128 exactly.
std::array<double, 3> rgb_to_ycc_pixel(double r, double g, double b);

/// Exact algebraic inverse of rgb_to_ycc_pixel, real-valued and unclamped.
std::array<double, 3> ycc_to_rgb_pixel(double y, double cb, double cr);

YccPlanes rgb_to_ycc(const RgbImage& img);

/// Inverse conversion with rounding and clamping to [0, 255]. Requires
/// unshifted planes.
RgbImage ycc_to_rgb(const YccPlanes& p);

/// Subtracts 128 from every sample. Throws std::logic_error if already shifted.
void level_shift(YccPlanes& p);

/// Adds 128 back. Throws std::logic_error if not shifted.
void level_unshift(YccPlanes& p);

}  // namespace dctprep
