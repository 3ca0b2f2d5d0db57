#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "rsurf/algebra.hpp"
#include "rsurf/mesher.hpp"

namespace rsurf {

struct ColorParams {
    double base_intensity = 0.7;
    int phase_sectors = 24;                               // phase contours every 2*pi/24
    double modulus_log_spacing = std::numbers::pi / 12.0;
    bool enable_phase_lines = true;
    bool enable_modulus_lines = true;

    double phase_spacing() const;
};

struct RGB {
    double r = 0.0, g = 0.0, b = 0.0;
    friend bool operator==(const RGB&, const RGB&) = default;
};

/// Phase of y in [0, 2*pi).
double phase_of(Complex y);

/// Hue in [0, 1): phase / 2*pi.
double hue_of(Complex y);

/// Fully saturated colour of a hue on the six-sector wheel (0 red, 1/2 cyan).
RGB hue_to_rgb(double hue);

/// base + (1 - base) * frac(t / spacing), frac(t) = t - floor(t).
double sawtooth(double t, double spacing, double base);

/// Enhanced phase portrait colour of y; black at y = 0.
RGB domain_color(Complex y, const ColorParams& params = {});

/// 8-bit quantization with round-half-up.
std::uint8_t quantize(double channel);

struct Image {
    int width = 0;
    int height = 0;
    std::vector<RGB> pixels;  // row-major, row 0 at the top

    Image() = default;
    Image(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h) {}
    RGB& at(int col, int row) { return pixels[static_cast<std::size_t>(row) * width + col]; }
    const RGB& at(int col, int row) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
};

/// Complex coordinate of the centre of pixel (col, row) over the domain.
Complex pixel_center(const Domain& domain, int size, int col, int row);

/// Reference colour wheel over the square of side 2*half_side centred at 0.
Image render_reference(int size, double half_side = 5.0, const ColorParams& params = {},
                       unsigned threads = 1);

struct SheetRender {
    std::vector<Image> images;                 // one per sheet
    std::vector<std::vector<Complex>> values;  // per sheet, per pixel (row-major)
    std::vector<char> solved;                  // per pixel
    std::size_t failed_pixels = 0;
};

/// Sheet k at a pixel is the k-th fibre value ordered by real part, ties by
/// imaginary part. Pixels whose solve fails are black.
SheetRender render_sheets(const BivariatePoly& f, const Domain& domain, int size,
                          const ColorParams& params = {}, unsigned threads = 1);

}  // namespace rsurf
