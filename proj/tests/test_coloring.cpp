#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "rsurf/coloring.hpp"
#include "rsurf/curve_parser.hpp"

using namespace rsurf;

namespace {

constexpr double kPi = std::numbers::pi;

// Textbook HSV -> RGB with S = V = 1, via the max/min channel construction.
RGB hsv_oracle(double hue) {
    auto channel = [&](double offset) {
        const double k = std::fmod(offset + hue * 6.0, 6.0);
        return 1.0 - std::max(0.0, std::min({k, 4.0 - k, 1.0}));
    };
    return {channel(5.0), channel(3.0), channel(1.0)};
}

bool close(const RGB& a, const RGB& b, double tol) {
    return std::abs(a.r - b.r) <= tol && std::abs(a.g - b.g) <= tol && std::abs(a.b - b.b) <= tol;
}

}  // namespace

TEST_CASE("spot colours") {
    const RGB one = domain_color(1.0);
    CHECK(one.r == doctest::Approx(0.49));
    CHECK(one.g == 0.0);
    CHECK(one.b == 0.0);
    CHECK(domain_color(0.0) == RGB{});
    CHECK(hue_to_rgb(0.0) == RGB{1.0, 0.0, 0.0});
    CHECK(close(hue_to_rgb(0.5), RGB{0.0, 1.0, 1.0}, 1e-15));
    CHECK(close(hue_to_rgb(1.0 / 3.0), RGB{0.0, 1.0, 0.0}, 1e-12));
    CHECK(close(hue_to_rgb(2.0 / 3.0), RGB{0.0, 0.0, 1.0}, 1e-12));
    CHECK(phase_of(-1.0) == doctest::Approx(kPi));
    CHECK(phase_of(Complex(0.0, -1.0)) == doctest::Approx(1.5 * kPi));
    CHECK(phase_of(Complex(1.0, -0.0)) == 0.0);
}

TEST_CASE("hue wheel matches the HSV oracle") {
    for (int i = 0; i < 600; ++i) {
        const double h = i / 600.0;
        CHECK(close(hue_to_rgb(h), hsv_oracle(h), 1e-12));
    }
}

TEST_CASE("sawtooth") {
    CHECK(sawtooth(0.0, 1.0, 0.7) == doctest::Approx(0.7));
    CHECK(sawtooth(0.5, 1.0, 0.7) == doctest::Approx(0.85));
    CHECK(sawtooth(-0.25, 1.0, 0.7) == doctest::Approx(0.925));
    CHECK(sawtooth(3.0 + 0.5, 1.0, 0.7) == doctest::Approx(0.85));
}

TEST_CASE("colour invariances") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const ColorParams p;
    for (int i = 0; i < 500; ++i) {
        const Complex y(u(rng), u(rng));
        if (std::abs(y) < 1e-6) continue;
        // hue depends on the phase only
        CHECK(hue_of(y) == doctest::Approx(hue_of(3.7 * y)));
        // conjugation mirrors the hue
        const double hc = hue_of(std::conj(y));
        CHECK(std::min(std::abs(hc - (1.0 - hue_of(y))), std::abs(hc + hue_of(y))) < 1e-12);
        // modulus lines repeat under |y| -> |y| e^spacing
        const RGB a = domain_color(y, p);
        const RGB b = domain_color(y * std::exp(p.modulus_log_spacing), p);
        CHECK(close(a, b, 1e-9));
        // phase lines repeat under rotation by one sector, up to the hue change
        ColorParams no_mod = p;
        no_mod.enable_modulus_lines = false;
        const RGB c = domain_color(y, no_mod);
        const double peak = std::max({c.r, c.g, c.b});
        const double rotated_peak = [&] {
            const RGB d = domain_color(y * std::polar(1.0, p.phase_spacing()), no_mod);
            return std::max({d.r, d.g, d.b});
        }();
        if (std::abs(std::fmod(phase_of(y), p.phase_spacing())) > 1e-6)
            CHECK(peak == doctest::Approx(rotated_peak));
        CHECK(peak >= p.base_intensity - 1e-12);
        CHECK(peak <= 1.0);
    }
    ColorParams plain = p;
    plain.enable_phase_lines = plain.enable_modulus_lines = false;
    CHECK(close(domain_color(Complex(0.0, 2.0), plain), hue_to_rgb(0.25), 1e-12));
}

TEST_CASE("quantize") {
    CHECK(quantize(0.0) == 0);
    CHECK(quantize(1.0) == 255);
    CHECK(quantize(0.49) == 125);  // 124.95
    CHECK(quantize(0.5) == 128);   // 127.5 rounds up
    CHECK(quantize(-0.1) == 0);
    CHECK(quantize(1.2) == 255);
}

TEST_CASE("reference wheel") {
    const int size = 65;
    const Image img = render_reference(size);
    CHECK(img.width == size);
    CHECK(img.height == size);
    const Domain d{};
    CHECK(pixel_center(d, size, 0, 0).real() < -4.9);
    CHECK(pixel_center(d, size, 0, 0).imag() > 4.9);
    CHECK(pixel_center(d, size, 32, 32) == Complex(0.0, 0.0));
    // positive real axis is red, negative real axis is cyan
    for (int col = 34; col < size; ++col) {
        const RGB c = img.at(col, 32);
        CHECK(c.r > 0.0);
        CHECK(c.g == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(c.b == doctest::Approx(0.0).epsilon(1e-12));
    }
    for (int col = 0; col < 31; ++col) {
        const RGB c = img.at(col, 32);
        CHECK(c.r == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(c.g == doctest::Approx(c.b));
        CHECK(c.g > 0.0);
    }
    CHECK(img.at(32, 32) == RGB{});
    const Image parallel = render_reference(size, 5.0, {}, 4);
    CHECK(parallel.pixels == img.pixels);

    const Image tiny = render_reference(1);
    REQUIRE(tiny.pixels.size() == 1);
    CHECK(tiny.pixels[0] == RGB{});
}

TEST_CASE("sheet images") {
    const auto f = parse_curve("y^2 - x");
    const int size = 33;
    const Domain d{};
    const SheetRender r = render_sheets(f, d, size);
    REQUIRE(r.images.size() == 2);
    CHECK(r.failed_pixels == 0);
    std::size_t right = 0;
    for (int row = 0; row < size; ++row) {
        for (int col = 0; col < size; ++col) {
            const std::size_t i = static_cast<std::size_t>(row) * size + col;
            const Complex x = pixel_center(d, size, col, row);
            const Complex y0 = r.values[0][i], y1 = r.values[1][i];
            // ordered by real part, ties broken by imaginary part
            CHECK((y0.real() < y1.real() || (y0.real() == y1.real() && y0.imag() <= y1.imag())));
            CHECK(std::abs(y0 * y0 - x) < 1e-10 * (1.0 + std::abs(x)));
            CHECK(std::abs(y0 + y1) < 1e-10 * (1.0 + std::abs(y0)));
            if (std::abs(x) < 1e-12) continue;
            if (std::abs(x.imag()) > 1e-9 || x.real() > 0.0) {
                // off the negative axis the two sheets are -sqrt and +sqrt
                CHECK(std::abs(y1 - std::sqrt(x)) < 1e-10 * (1.0 + std::abs(y1)));
                ++right;
            }
            for (const Image* img : {&r.images[0], &r.images[1]}) {
                const std::size_t k = img == &r.images[0] ? 0 : 1;
                CHECK(close(img->at(col, row), domain_color(r.values[k][i]), 0.0));
            }
        }
    }
    CHECK(right > 0);
    const SheetRender threaded = render_sheets(f, d, size, {}, 3);
    CHECK(threaded.values == r.values);
}

TEST_CASE("sheet colour examples") {
    const int size = 41;
    SUBCASE("square root: positive real axis of sheet 2 is red, sheet 1 has Re y < 0") {
        const Domain d{};
        const SheetRender r = render_sheets(parse_curve("y^2 - x"), d, size);
        for (int col = 21; col < size; ++col) {
            const RGB c = r.images[1].at(col, 20);
            CHECK(c.r > 0.0);
            CHECK(c.g < 1e-12);
            CHECK(c.b < 1e-12);
        }
        for (const Complex y : r.values[0])
            if (std::abs(y) > 1e-9) CHECK(y.real() < 1e-12);
    }
    SUBCASE("folium: sheet 2 has a double zero at the centre") {
        const Domain d{-0.2, 0.2, -0.2, 0.2};
        const SheetRender r = render_sheets(parse_curve("x^3 + y^3 - 3*x*y"), d, size);
        // winding number of sheet 2 along a square ring of pixels around the centre
        std::vector<std::pair<int, int>> ring;
        const int lo = 10, hi = 30;
        for (int c = lo; c < hi; ++c) ring.emplace_back(c, lo);
        for (int rr = lo; rr < hi; ++rr) ring.emplace_back(hi, rr);
        for (int c = hi; c > lo; --c) ring.emplace_back(c, hi);
        for (int rr = hi; rr > lo; --rr) ring.emplace_back(lo, rr);
        double turn = 0.0;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const auto [c0, r0] = ring[i];
            const auto [c1, r1] = ring[(i + 1) % ring.size()];
            const Complex a = r.values[1][static_cast<std::size_t>(r0) * size + c0];
            const Complex b = r.values[1][static_cast<std::size_t>(r1) * size + c1];
            turn += std::arg(b / a);
        }
        CHECK(std::abs(std::abs(turn) / (2.0 * kPi) - 2.0) < 1e-6);
    }
}
