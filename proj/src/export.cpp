#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <png.h>

#include "rsurf/io.hpp"

namespace rsurf {

std::array<double, 3> project_vertex(const SurfaceVertex& v, HeightMode height) {
    return {v.x.real(), v.x.imag(), height == HeightMode::re ? v.y.real() : v.y.imag()};
}

std::string export_mesh_text(const SurfaceMesh& mesh, HeightMode height, ExportFormat format,
                             const ColorParams& params) {
    std::string out;
    char buf[192];
    if (format == ExportFormat::obj) {
        out += "# curve: " + mesh.meta.curve + "\n";
        for (const auto& v : mesh.vertices) {
            const auto p = project_vertex(v, height);
            const RGB c = domain_color(v.y, params);
            std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g %.6f %.6f %.6f\n", p[0], p[1], p[2], c.r, c.g, c.b);
            out += buf;
        }
        for (const auto& t : mesh.triangles) {
            std::snprintf(buf, sizeof buf, "f %u %u %u\n", t[0] + 1, t[1] + 1, t[2] + 1);
            out += buf;
        }
        return out;
    }

    out += "ply\nformat ascii 1.0\n";
    out += "comment curve: " + mesh.meta.curve + "\n";
    out += "element vertex " + std::to_string(mesh.vertices.size()) + "\n";
    out += "property double x\nproperty double y\nproperty double z\n";
    out += "property uchar red\nproperty uchar green\nproperty uchar blue\n";
    out += "element face " + std::to_string(mesh.triangles.size()) + "\n";
    out += "property list uchar int vertex_indices\nend_header\n";
    for (const auto& v : mesh.vertices) {
        const auto p = project_vertex(v, height);
        const RGB c = domain_color(v.y, params);
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %u %u %u\n", p[0], p[1], p[2], quantize(c.r),
                      quantize(c.g), quantize(c.b));
        out += buf;
    }
    for (const auto& t : mesh.triangles) {
        std::snprintf(buf, sizeof buf, "3 %u %u %u\n", t[0], t[1], t[2]);
        out += buf;
    }
    return out;
}

void export_mesh(const SurfaceMesh& mesh, HeightMode height, ExportFormat format,
                 const ColorParams& params, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << export_mesh_text(mesh, height, format, params);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_png(const Image& image, const std::filesystem::path& path) {
    std::FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw std::runtime_error("cannot open " + path.string() + " for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw std::runtime_error("libpng initialisation failed");
    }
    std::vector<png_byte> row(static_cast<std::size_t>(image.width) * 3);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw std::runtime_error("failed writing PNG " + path.string());
    }
    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int r = 0; r < image.height; ++r) {
        for (int c = 0; c < image.width; ++c) {
            const RGB& px = image.at(c, r);
            row[3 * static_cast<std::size_t>(c)] = quantize(px.r);
            row[3 * static_cast<std::size_t>(c) + 1] = quantize(px.g);
            row[3 * static_cast<std::size_t>(c) + 2] = quantize(px.b);
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

}  // namespace rsurf
