#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rsurf/errors.hpp"
#include "rsurf/io.hpp"

namespace rsurf {

namespace {

// -0 is written as 0: JSON readers take "-0" for an integer.
void append_real(std::string& out, double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

template <typename T>
T field(const nlohmann::json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key))
        throw FormatError(std::string("missing field '") + key + "' in " + where);
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw FormatError(std::string("field '") + key + "' in " + where + " has the wrong type");
    }
}

}  // namespace

std::string serialize_rsm(const SurfaceMesh& mesh) {
    const auto& m = mesh.meta;
    std::string out;
    out.reserve(96 * mesh.vertices.size() + 32 * mesh.triangles.size() + 256);
    out += "{\n\"format_version\": " + std::to_string(kRsmFormatVersion) + ",\n";
    out += "\"curve\": " + nlohmann::json(m.curve).dump() + ",\n";
    out += "\"degree\": " + std::to_string(m.n) + ",\n";
    out += "\"domain\": {\"re_min\": ";
    append_real(out, m.domain.re_min);
    out += ", \"re_max\": ";
    append_real(out, m.domain.re_max);
    out += ", \"im_min\": ";
    append_real(out, m.domain.im_min);
    out += ", \"im_max\": ";
    append_real(out, m.domain.im_max);
    out += "},\n\"config\": {\"grid\": " + std::to_string(m.grid) +
           ", \"max_depth\": " + std::to_string(m.max_depth) + ", \"rho_factor\": ";
    append_real(out, m.rho_factor);
    out += "},\n\"vertices\": [";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& v = mesh.vertices[i];
        out += i == 0 ? "\n[" : ",\n[";
        append_real(out, v.x.real());
        out += ", ";
        append_real(out, v.x.imag());
        out += ", ";
        append_real(out, v.y.real());
        out += ", ";
        append_real(out, v.y.imag());
        out += ']';
    }
    out += mesh.vertices.empty() ? "],\n" : "\n],\n";
    out += "\"triangles\": [";
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tri = mesh.triangles[t];
        out += t == 0 ? "\n[" : ",\n[";
        out += std::to_string(tri[0]) + ", " + std::to_string(tri[1]) + ", " + std::to_string(tri[2]) + ']';
    }
    out += mesh.triangles.empty() ? "]\n}\n" : "\n]\n}\n";
    return out;
}

SurfaceMesh parse_rsm(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed mesh document: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("mesh document must be a JSON object");

    const int version = field<int>(doc, "format_version", "document");
    if (version != kRsmFormatVersion)
        throw FormatError("unsupported format_version " + std::to_string(version) + " (expected " +
                          std::to_string(kRsmFormatVersion) + ")");

    SurfaceMesh mesh;
    auto& m = mesh.meta;
    m.curve = field<std::string>(doc, "curve", "document");
    m.n = field<int>(doc, "degree", "document");
    const auto& dom = doc.contains("domain") ? doc.at("domain") : nlohmann::json();
    m.domain = Domain{field<double>(dom, "re_min", "domain"), field<double>(dom, "re_max", "domain"),
                      field<double>(dom, "im_min", "domain"), field<double>(dom, "im_max", "domain")};
    const auto& cfg = doc.contains("config") ? doc.at("config") : nlohmann::json();
    m.grid = field<int>(cfg, "grid", "config");
    m.max_depth = field<int>(cfg, "max_depth", "config");
    m.rho_factor = field<double>(cfg, "rho_factor", "config");

    const auto vertices = field<nlohmann::json>(doc, "vertices", "document");
    if (!vertices.is_array()) throw FormatError("'vertices' must be an array");
    mesh.vertices.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& v = vertices[i];
        if (!v.is_array() || v.size() != 4)
            throw FormatError("vertex " + std::to_string(i) + " must have 4 components");
        for (const auto& c : v)
            if (!c.is_number()) throw FormatError("vertex " + std::to_string(i) + " has a non-numeric component");
        mesh.vertices.push_back({Complex(v[0].get<double>(), v[1].get<double>()),
                                 Complex(v[2].get<double>(), v[3].get<double>())});
    }

    const auto triangles = field<nlohmann::json>(doc, "triangles", "document");
    if (!triangles.is_array()) throw FormatError("'triangles' must be an array");
    mesh.triangles.reserve(triangles.size());
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        const auto& tri = triangles[t];
        if (!tri.is_array() || tri.size() != 3)
            throw FormatError("triangle " + std::to_string(t) + " must have 3 indices");
        std::array<VertexIndex, 3> idx{};
        for (std::size_t c = 0; c < 3; ++c) {
            if (!tri[c].is_number_unsigned() || tri[c].get<std::uint64_t>() >= mesh.vertices.size())
                throw FormatError("triangle " + std::to_string(t) + " has an index out of range");
            idx[c] = static_cast<VertexIndex>(tri[c].get<std::uint64_t>());
        }
        mesh.triangles.push_back(idx);
    }
    return mesh;
}

void write_rsm(const SurfaceMesh& mesh, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << serialize_rsm(mesh);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

SurfaceMesh read_rsm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rsm(buf.str());
}

}  // namespace rsurf
