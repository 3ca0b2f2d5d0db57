#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rsurf/cli.hpp"
#include "rsurf/curve_parser.hpp"
#include "rsurf/io.hpp"

using namespace rsurf;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "rsurf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "rsurf_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"generate", "--out", scratch("x.json").string()}).code == kExitUsage);
    CHECK(run({"generate", "--curve", "y^2 - x", "--out", scratch("x.json").string(), "--rho-factor", "1.5"}).code ==
          kExitUsage);
    CHECK(run({"generate", "--curve", "y^2 - x", "--out", scratch("x.json").string(), "--grid", "0"}).code ==
          kExitUsage);
    CHECK(run({"export", "--in", scratch("missing.json").string(), "--out", scratch("o.obj").string()}).code ==
          kExitUsage);
    CHECK(run({"monodromy", "--curve", "y^2 - x", "--center", "zero", "--radius", "1"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("curve parse errors exit with 1 and name the position") {
    const auto r = run({"generate", "--curve", "y^2 +* x", "--out", scratch("bad.json").string()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("position 5") != std::string::npos);
}

TEST_CASE("malformed mesh file exits with 1") {
    const auto bad = scratch("bad.rsm.json");
    std::ofstream(bad) << "{\"format_version\": 9}";
    const auto r = run({"export", "--in", bad.string(), "--out", scratch("bad.obj").string()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("format_version") != std::string::npos);
}

TEST_CASE("numeric failures exit with 2") {
    const auto r = run({"generate", "--curve", "(y - x)^2", "--out", scratch("sq.json").string()});
    CHECK(r.code == kExitNumeric);
    CHECK(r.err.find("squarefree") != std::string::npos);
}

TEST_CASE("monodromy prints cycle notation") {
    const auto r = run({"monodromy", "--curve", "y^2 - x", "--center", "0,0", "--radius", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "(1 2)\n");
    const auto id = run({"monodromy", "--curve", "y^2 - x", "--center", "3,0", "--radius", "1"});
    CHECK(id.out == "()\n");
    const auto neg = run({"monodromy", "--curve", "y^2 - x", "--center", "-0.5,-0.25", "--radius", "2"});
    CHECK(neg.out == "(1 2)\n");
}

TEST_CASE("generate and export agree with the library") {
    const auto path = scratch("sqrt.rsm.json");
    const auto r = run({"generate", "--curve", "y^2 - x", "--max-depth", "3", "--grid", "8", "--re-min", "-2",
                        "--threads", "2", "--out", path.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.err.find("wrote") != std::string::npos);

    MesherConfig cfg;
    cfg.grid = 8;
    cfg.max_depth = 3;
    const Domain d{-2.0, 5.0, -5.0, 5.0};
    const auto lib = generate_surface(parse_curve("y^2 - x"), "y^2 - x", d, cfg);
    CHECK(slurp(path) == serialize_rsm(lib.surface));

    const auto obj = scratch("sqrt.obj");
    REQUIRE(run({"export", "--in", path.string(), "--height", "im", "--out", obj.string()}).code == kExitOk);
    CHECK(slurp(obj) == export_mesh_text(lib.surface, HeightMode::im, ExportFormat::obj));
    const auto ply = scratch("sqrt.ply");
    REQUIRE(run({"export", "--in", path.string(), "--format", "ply", "--out", ply.string()}).code == kExitOk);
    CHECK(slurp(ply) == export_mesh_text(lib.surface, HeightMode::re, ExportFormat::ply));
}

TEST_CASE("image subcommands write PNG files") {
    const auto wheel = scratch("wheel.png");
    fs::remove(wheel);
    REQUIRE(run({"wheel", "--size", "16", "--out", wheel.string()}).code == kExitOk);
    const std::string bytes = slurp(wheel);
    REQUIRE(bytes.size() > 8);
    CHECK(bytes.substr(1, 3) == "PNG");

    const auto prefix = scratch("sheet_").string();
    for (int k = 1; k <= 4; ++k) fs::remove(prefix + std::to_string(k) + ".png");
    REQUIRE(run({"sheets", "--curve", "x^3 + y^3 - 3*x*y", "--size", "12", "--out-prefix", prefix}).code == kExitOk);
    for (int k = 1; k <= 3; ++k) CHECK(fs::exists(prefix + std::to_string(k) + ".png"));
    CHECK_FALSE(fs::exists(prefix + "4.png"));
}
