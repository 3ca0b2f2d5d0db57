#include "rsurf/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rsurf/errors.hpp"
#include "rsurf/parallel.hpp"
#include "rsurf/roots.hpp"

namespace rsurf {

double ColorParams::phase_spacing() const { return 2.0 * std::numbers::pi / phase_sectors; }

double phase_of(Complex y) {
    double phi = std::atan2(y.imag(), y.real());
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    // atan2 of a tiny negative imaginary part can round up to exactly 2*pi
    return phi >= 2.0 * std::numbers::pi ? 0.0 : phi;
}

double hue_of(Complex y) { return phase_of(y) / (2.0 * std::numbers::pi); }

RGB hue_to_rgb(double hue) {
    const double h6 = 6.0 * (hue - std::floor(hue));
    const int sector = std::min(5, static_cast<int>(h6));
    const double f = h6 - sector;
    switch (sector) {
        case 0: return {1.0, f, 0.0};
        case 1: return {1.0 - f, 1.0, 0.0};
        case 2: return {0.0, 1.0, f};
        case 3: return {0.0, 1.0 - f, 1.0};
        case 4: return {f, 0.0, 1.0};
        default: return {1.0, 0.0, 1.0 - f};
    }
}

double sawtooth(double t, double spacing, double base) {
    const double u = t / spacing;
    return base + (1.0 - base) * (u - std::floor(u));
}

RGB domain_color(Complex y, const ColorParams& params) {
    if (y == Complex{}) return {};
    const double phi = phase_of(y);
    double intensity = 1.0;
    if (params.enable_phase_lines) intensity *= sawtooth(phi, params.phase_spacing(), params.base_intensity);
    if (params.enable_modulus_lines)
        intensity *= sawtooth(std::log(std::abs(y)), params.modulus_log_spacing, params.base_intensity);
    RGB c = hue_to_rgb(phi / (2.0 * std::numbers::pi));
    c.r = std::clamp(c.r * intensity, 0.0, 1.0);
    c.g = std::clamp(c.g * intensity, 0.0, 1.0);
    c.b = std::clamp(c.b * intensity, 0.0, 1.0);
    return c;
}

std::uint8_t quantize(double channel) {
    return static_cast<std::uint8_t>(std::floor(std::clamp(channel, 0.0, 1.0) * 255.0 + 0.5));
}

Complex pixel_center(const Domain& domain, int size, int col, int row) {
    const double re = domain.re_min + (col + 0.5) * (domain.re_max - domain.re_min) / size;
    const double im = domain.im_max - (row + 0.5) * (domain.im_max - domain.im_min) / size;
    return {re, im};
}

Image render_reference(int size, double half_side, const ColorParams& params, unsigned threads) {
    if (size < 1) throw std::invalid_argument("image size must be at least 1");
    const Domain window{-half_side, half_side, -half_side, half_side};
    Image img(size, size);
    parallel_for(static_cast<std::size_t>(size), threads, [&](std::size_t row) {
        for (int col = 0; col < size; ++col)
            img.at(col, static_cast<int>(row)) =
                domain_color(pixel_center(window, size, col, static_cast<int>(row)), params);
    });
    return img;
}

SheetRender render_sheets(const BivariatePoly& f, const Domain& domain, int size,
                          const ColorParams& params, unsigned threads) {
    if (size < 1) throw std::invalid_argument("image size must be at least 1");
    if (!f.is_curve()) throw std::invalid_argument("render_sheets requires a curve");
    const auto n = static_cast<std::size_t>(f.n);
    const std::size_t count = static_cast<std::size_t>(size) * size;

    SheetRender out;
    out.images.assign(n, Image(size, size));
    out.values.assign(n, std::vector<Complex>(count));
    out.solved.assign(count, 0);

    parallel_for(static_cast<std::size_t>(size), threads, [&](std::size_t row) {
        for (int col = 0; col < size; ++col) {
            const std::size_t idx = row * static_cast<std::size_t>(size) + col;
            const Complex x = pixel_center(domain, size, col, static_cast<int>(row));
            RootSet rs;
            try {
                rs = solve_all_roots(fiber_poly(f, x));
            } catch (const DegenerateLeadingCoefficient&) {
                rs.converged = false;
            }
            if (!rs.converged || rs.roots.size() != n) continue;
            std::sort(rs.roots.begin(), rs.roots.end(), [](Complex a, Complex b) {
                return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
            });
            out.solved[idx] = 1;
            for (std::size_t k = 0; k < n; ++k) {
                out.values[k][idx] = rs.roots[k];
                out.images[k].pixels[idx] = domain_color(rs.roots[k], params);
            }
        }
    });
    out.failed_pixels = static_cast<std::size_t>(std::count(out.solved.begin(), out.solved.end(), 0));
    return out;
}

}  // namespace rsurf
