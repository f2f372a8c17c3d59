#include "support.hpp"

#include "hexlet/cli.hpp"
#include "hexlet/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace hexlet;
using namespace hexlet::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "hexlet");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hexlet_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
    std::string read(const std::string& name) const {
        std::ifstream in(path / name);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
};

std::string family_doc(const Family& f) {
    io::Document d;
    d.kind = "family";
    d.payload = io::to_json(f);
    return io::serialize(d);
}

std::string error_code(const Result& r) { return io::Json::parse(r.err)["error"].get<std::string>(); }

}  // namespace

TEST_CASE("soddy then verify") {
    TempDir tmp;
    const Result s = run({"soddy", "-n", "3", "-m", "3"});
    REQUIRE(s.code == 0);
    const io::Document doc = io::parse(s.out);
    CHECK(doc.kind == "arrangement");
    CHECK(doc.payload["spheres"].size() == 6);
    CHECK(doc.payload["family"]["members"].size() == 3);
    CHECK(doc.metadata["command"] == "hexlet soddy -n 3 -m 3");
    const Result v = run({"verify", "-a", tmp.write("hexlet.json", s.out)});
    CHECK(v.code == 0);
    CHECK(io::parse(v.out).payload["pass"] == true);

    // m = n + 1: two spheres that never touch each other, so verify fails
    const Result two = run({"soddy", "-n", "3", "-m", "4"});
    REQUIRE(two.code == 0);
    CHECK(io::parse(two.out).payload["spheres"].size() == 2);
    const Result v2 = run({"verify", "-a", tmp.write("two.json", two.out)});
    CHECK(v2.code == 1);
    CHECK(io::parse(v2.out).payload["pass"] == false);

    CHECK(run({"soddy", "-n", "4", "-m", "3"}).code == 0);
    CHECK(run({"soddy", "-n", "3", "-m", "3", "-c", "polygon:5"}).code == 1);
}

TEST_CASE("tight matches the catalog hexagon") {
    const Result t = run({"tight", "-d", "2", "--psi", "1.0471975511965976"});
    REQUIRE(t.code == 0);
    const Result e = run({"codes", "emit", "polygon", "--k", "6"});
    REQUIRE(e.code == 0);
    const SphericalCode a = io::code_from_json(io::parse(t.out).payload);
    const SphericalCode b = io::code_from_json(io::parse(e.out).payload);
    CHECK(a.size() == 6);
    CHECK(codes_isometric(a, b));
}

TEST_CASE("build, extract, render") {
    TempDir tmp;
    const std::string fam = tmp.write("annulus.json", family_doc(concentric_annulus()));
    const Result b = run({"build", "-f", fam, "-c", "hexagon"});
    REQUIRE(b.code == 0);
    const std::string arr = tmp.write("chain.json", b.out);

    const Result x = run({"extract", "-a", arr});
    REQUIRE(x.code == 0);
    CHECK(codes_isometric(io::code_from_json(io::parse(x.out).payload), make_code("hexagon")));

    REQUIRE(run({"render", "-a", arr, "-o", tmp.file("chain.svg")}).code == 0);
    const std::string svg = tmp.read("chain.svg");
    const std::regex circle("<circle");
    CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), circle), std::sregex_iterator()) == 8);
    CHECK(run({"render", "-a", arr, "-o", tmp.file("points.json")}).code == 0);
    CHECK(run({"render", "-a", arr, "-o", tmp.file("chain.ply")}).code == 1);
    CHECK(run({"render", "-a", arr, "-o", tmp.file("chain.png")}).code == 2);

    // rotation file
    const std::string rot = tmp.write("rot.json", "[[0, -1], [1, 0]]");
    CHECK(run({"build", "-f", fam, "-c", "hexagon", "--rotation", rot}).code == 0);

    // code document as the -c argument
    const std::string code = tmp.write("hex.json", run({"codes", "emit", "hexagon"}).out);
    CHECK(run({"build", "-f", fam, "-c", code}).code == 0);
}

TEST_CASE("validate, canonicalize, locus, classify, hexlet") {
    TempDir tmp;
    const std::string fam = tmp.write("f.json", family_doc(mutually_tangent_family(3, 3)));
    const Result v = run({"validate", "-f", fam});
    REQUIRE(v.code == 0);
    CHECK(io::parse(v.out).payload["is_s_family"] == true);
    CHECK(io::parse(run({"canonicalize", "-f", fam}).out).kind == "canonical_form");
    const io::Json locus = io::parse(run({"locus", "-f", fam}).out).payload;
    CHECK(locus["status"] == "sphere");
    CHECK(locus["radius"].get<double>() == doctest::Approx(2.0));
    CHECK(locus["contact_angle"]["psi"].get<double>() == doctest::Approx(pi / 3));

    const Result h = run({"hexlet", "-f", fam});
    REQUIRE(h.code == 0);
    CHECK(io::parse(h.out).payload["spheres"].size() == 6);

    const Result c = run({"classify", "-c", "icosahedron", "--psi", "1.1071487177940904"});
    REQUIRE(c.code == 0);
    CHECK(io::parse(c.out).payload["kind"] == "icosahedron");

    const Result list = run({"codes", "list"});
    CHECK(list.code == 0);
    CHECK(io::Json::parse(list.out)["codes"].size() >= 7);
}

TEST_CASE("exit codes and error JSON") {
    TempDir tmp;
    const Result usage = run({"frobnicate"});
    CHECK(usage.code == 2);
    CHECK(error_code(usage) == "UsageError");

    const Result missing = run({"validate", "-f", tmp.file("nope.json")});
    CHECK(missing.code == 2);

    const Result malformed = run({"validate", "-f", tmp.write("bad.json", "{ not json")});
    CHECK(malformed.code == 2);
    CHECK(error_code(malformed) == "MalformedInput");

    const Result schema = run({"validate", "-f", tmp.write("v9.json", R"({"schema_version":"9","kind":"family","payload":{}})")});
    CHECK(schema.code == 2);
    CHECK(error_code(schema) == "SchemaMismatch");

    const std::string fam = tmp.write("annulus.json", family_doc(concentric_annulus()));
    const Result domain = run({"build", "-f", fam, "-c", "polygon:7"});
    CHECK(domain.code == 1);
    CHECK(error_code(domain) == "CodeAngleMismatch");

    // verify contract: exit 0 iff pass
    Arrangement a = arrangement_from_code(concentric_annulus(), make_code("hexagon"));
    auto s = as_sphere(a.spheres[0]);
    s.radius *= 1.01;
    a.spheres[0] = s;
    io::Document d;
    d.kind = "arrangement";
    d.payload = io::to_json(a);
    const Result bad = run({"verify", "-a", tmp.write("bad_arr.json", io::serialize(d))});
    CHECK(bad.code == 1);
    CHECK(io::parse(bad.out).payload["pass"] == false);
    const Result loose = run({"verify", "-a", tmp.file("bad_arr.json"), "--tol", "0.1"});
    CHECK(loose.code == (io::parse(loose.out).payload["pass"] == true ? 0 : 1));
}
