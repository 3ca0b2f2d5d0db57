#include "rsurf/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rsurf/coloring.hpp"
#include "rsurf/curve_parser.hpp"
#include "rsurf/errors.hpp"
#include "rsurf/io.hpp"
#include "rsurf/mesher.hpp"

namespace rsurf {

namespace {

void add_domain_flags(CLI::App& cmd, Domain& domain) {
    cmd.add_option("--re-min", domain.re_min, "Domain lower real bound")->capture_default_str();
    cmd.add_option("--re-max", domain.re_max, "Domain upper real bound")->capture_default_str();
    cmd.add_option("--im-min", domain.im_min, "Domain lower imaginary bound")->capture_default_str();
    cmd.add_option("--im-max", domain.im_max, "Domain upper imaginary bound")->capture_default_str();
}

Complex parse_point(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re >> comma >> im) || comma != ',' || !(in >> std::ws).eof())
        throw CLI::ValidationError("--center", "expected <re,im>, got '" + text + "'");
    return {re, im};
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Riemann surface meshes of plane algebraic curves"};
    app.require_subcommand(1);

    std::string curve;
    Domain domain;
    MesherConfig mesher;
    mesher.threads = 0;
    std::string out_path;

    auto* generate = app.add_subcommand("generate", "Generate a surface mesh (.rsm.json)");
    generate->add_option("--curve", curve, "Curve expression f(x, y)")->required();
    add_domain_flags(*generate, domain);
    generate->add_option("--grid", mesher.grid, "Initial grid cells per side")
        ->check(CLI::PositiveNumber)->capture_default_str();
    generate->add_option("--max-depth", mesher.max_depth, "Maximum refine passes")
        ->check(CLI::NonNegativeNumber)->capture_default_str();
    generate->add_option("--rho-factor", mesher.bound.rho_factor, "Clearance radius factor in (0, 1)")
        ->check(CLI::Validator(
            [](std::string& v) {
                char* end = nullptr;
                const double r = std::strtod(v.c_str(), &end);
                return end != v.c_str() && *end == '\0' && r > 0.0 && r < 1.0 ? std::string() : "must lie strictly between 0 and 1";
            },
            "(0, 1)"))
        ->capture_default_str();
    generate->add_option("--threads", mesher.threads, "Worker threads (0 = all cores)")->capture_default_str();
    generate->add_option("--out", out_path, "Output .rsm.json path")->required();

    int size = 512;
    std::string out_prefix;
    auto* sheets = app.add_subcommand("sheets", "Render one domain-coloured image per sheet");
    sheets->add_option("--curve", curve, "Curve expression f(x, y)")->required();
    add_domain_flags(*sheets, domain);
    sheets->add_option("--size", size, "Image side in pixels")->check(CLI::PositiveNumber)->capture_default_str();
    sheets->add_option("--out-prefix", out_prefix, "Writes <prefix>1.png ... <prefix>n.png")->required();

    auto* wheel = app.add_subcommand("wheel", "Render the domain colouring reference image");
    wheel->add_option("--size", size, "Image side in pixels")->check(CLI::PositiveNumber)->capture_default_str();
    wheel->add_option("--out", out_path, "Output PNG path")->required();

    std::string in_path;
    std::string height = "re";
    std::string format = "obj";
    auto* exporter = app.add_subcommand("export", "Export a cached mesh as coloured OBJ or PLY");
    exporter->add_option("--in", in_path, "Input .rsm.json")->required()->check(CLI::ExistingFile);
    exporter->add_option("--height", height, "Height function")
        ->check(CLI::IsMember({"re", "im"}))->capture_default_str();
    exporter->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"obj", "ply"}))->capture_default_str();
    exporter->add_option("--out", out_path, "Output path")->required();

    std::string center_text;
    double radius = 0.0;
    auto* monodromy = app.add_subcommand("monodromy", "Monodromy permutation around a circle");
    monodromy->add_option("--curve", curve, "Curve expression f(x, y)")->required();
    monodromy->add_option("--center", center_text, "Circle centre as re,im")->required();
    monodromy->add_option("--radius", radius, "Circle radius")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) {
            const BivariatePoly f = parse_curve(curve);
            GenerateResult r = generate_surface(f, curve, domain, mesher);
            if (r.stats.empty_output)
                err << "warning: every triangle was discarded; the mesh is empty\n";
            if (r.stats.non_bijective > 0)
                err << "warning: " << r.stats.non_bijective << " triangles dropped by non-bijective matching\n";
            write_rsm(r.surface, out_path);
            err << "wrote " << out_path << ": " << r.surface.vertices.size() << " vertices, "
                << r.surface.triangles.size() << " triangles (" << r.stats.passes << " passes, "
                << r.stats.discarded_triangles << " domain triangles discarded)\n";
        } else if (sheets->parsed()) {
            const BivariatePoly f = parse_curve(curve);
            const SheetRender r = render_sheets(f, domain, size, {}, 0);
            for (std::size_t k = 0; k < r.images.size(); ++k)
                write_png(r.images[k], out_prefix + std::to_string(k + 1) + ".png");
            if (r.failed_pixels > 0) err << "warning: " << r.failed_pixels << " pixels failed to solve\n";
        } else if (wheel->parsed()) {
            write_png(render_reference(size, 5.0, {}, 0), out_path);
        } else if (exporter->parsed()) {
            const SurfaceMesh mesh = read_rsm(in_path);
            export_mesh(mesh, height == "re" ? HeightMode::re : HeightMode::im,
                        format == "obj" ? ExportFormat::obj : ExportFormat::ply, {}, out_path);
        } else if (monodromy->parsed()) {
            const Complex center = parse_point(center_text);
            const CurveGlobals globals = compute_globals(parse_curve(curve));
            const std::vector<int> perm = monodromy_permutation(globals, circle_loop(center, radius));
            out << format_cycles(perm) << '\n';
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: curve " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace rsurf
