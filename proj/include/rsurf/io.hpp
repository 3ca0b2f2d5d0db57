#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rsurf/coloring.hpp"
#include "rsurf/mesher.hpp"

namespace rsurf {

inline constexpr int kRsmFormatVersion = 1;

/// Canonical .rsm.json text of a surface mesh:
///
///   {
///   "format_version": 1,
///   "curve": "...",
///   "degree": n,
///   "domain": {"re_min": .., "re_max": .., "im_min": .., "im_max": ..},
///   "config": {"grid": .., "max_depth": .., "rho_factor": ..},
///   "vertices": [[re_x, im_x, re_y, im_y], ...],
///   "triangles": [[i, j, k], ...]
///   }
///
/// One vertex or triangle per line, reals with 17 significant digits.
std::string serialize_rsm(const SurfaceMesh& mesh);

/// Throws FormatError on malformed documents or a version mismatch.
SurfaceMesh parse_rsm(std::string_view text);

void write_rsm(const SurfaceMesh& mesh, const std::filesystem::path& path);
SurfaceMesh read_rsm(const std::filesystem::path& path);

enum class HeightMode { re, im };
enum class ExportFormat { obj, ply };

/// (Re x, Im x, H(y)).
std::array<double, 3> project_vertex(const SurfaceVertex& v, HeightMode height);

/// 3D mesh with the domain colour of y baked per vertex. OBJ carries
/// "v x y z r g b" with colours in [0, 1]; PLY is ASCII with uchar colours.
std::string export_mesh_text(const SurfaceMesh& mesh, HeightMode height, ExportFormat format,
                             const ColorParams& params = {});
void export_mesh(const SurfaceMesh& mesh, HeightMode height, ExportFormat format,
                 const ColorParams& params, const std::filesystem::path& path);

/// 8-bit RGB PNG.
void write_png(const Image& image, const std::filesystem::path& path);

}  // namespace rsurf
