#include "support.hpp"

#include "hexlet/io.hpp"

#include <doctest.h>

#include <regex>

using namespace hexlet;
using namespace hexlet::testing;

namespace {

std::string wrap(const std::string& kind, io::Json payload) {
    io::Document d;
    d.kind = kind;
    d.payload = std::move(payload);
    return io::serialize(d);
}

// serialize -> parse -> decode -> encode -> serialize must be byte-identical
template <typename Decode>
void check_fixed_point(const std::string& kind, const io::Json& payload, Decode decode) {
    const std::string first = wrap(kind, payload);
    const io::Document parsed = io::parse(first);
    CHECK(parsed.kind == kind);
    const std::string second = wrap(kind, io::to_json(decode(parsed.payload)));
    CHECK(first == second);
}

}  // namespace

TEST_CASE("round trips are byte-identical") {
    const Family hexf = mutually_tangent_family(3, 3);
    check_fixed_point("family", io::to_json(hexf), io::family_from_json);
    const Arrangement hexlet = soddy_arrangement(hexf, make_code("hexagon"));
    check_fixed_point("arrangement", io::to_json(hexlet), io::arrangement_from_json);
    for (const auto& name : {"hexagon", "icosahedron", "cell24", "cell600", "simplex:6"})
        check_fixed_point("code", io::to_json(make_code_by_spec(name)), io::code_from_json);
    const CanonicalForm cf = canonical_transform(hexf);
    check_fixed_point("canonical_form", io::to_json(cf), io::canonical_form_from_json);

    // full-precision doubles
    const Family decoded = io::family_from_json(io::parse(wrap("family", io::to_json(hexf))).payload);
    for (std::size_t i = 0; i < hexf.members.size(); ++i) {
        CHECK((as_sphere(decoded.members[i]).center - as_sphere(hexf.members[i]).center).norm() == 0);
        CHECK(as_sphere(decoded.members[i]).radius == as_sphere(hexf.members[i]).radius);
    }

    // a chain decoded from JSON acts exactly like the original
    const TransformChain chain = io::chain_from_json(io::to_json(cf.chain));
    for (const auto& m : hexf.members) {
        const auto a = apply_chain(cf.chain, m), b = apply_chain(chain, m);
        CHECK(a.index() == b.index());
    }
}

TEST_CASE("hyperplanes") {
    const Family slab = make_family({make_hyperplane(vec({0, 3}), -1.0), make_hyperplane(vec({0, 1}), 1.0)});
    const io::Json j = io::to_json(slab);
    CHECK(j["members"][0]["type"] == "hyperplane");
    const Family back = io::family_from_json(j);
    for (const auto& m : back.members) CHECK(std::abs(std::get<HyperplaneD>(m).normal.norm() - 1) < 1e-15);

    io::Json bad = j;
    bad["members"][0]["normal"] = {0, 2};
    CHECK_THROWS_AS(io::family_from_json(bad), Error);
}

TEST_CASE("parse errors") {
    try {
        io::parse("{\n  \"schema_version\": \"1.0\",\n  \"kind\": ]\n}");
        FAIL("expected MalformedInput");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MalformedInput);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    try {
        io::parse(R"({"schema_version": "9.9", "kind": "family", "payload": {}})");
        FAIL("expected SchemaMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SchemaMismatch);
    }
    CHECK_THROWS_AS(io::parse(R"({"kind": "family", "payload": {}})"), Error);
    CHECK_THROWS_AS(io::family_from_json(io::Json::parse(R"({"ambient_dim": 2, "members": [{"type": "blob"}]})")),
                    Error);
    CHECK_THROWS_AS(io::family_from_json(io::Json::parse(
                        R"({"ambient_dim": 3, "members": [{"type": "sphere", "center": [0, 0], "radius": 1}]})")),
                    Error);
    CHECK_THROWS_AS(io::expect_kind(io::parse(wrap("code", io::to_json(make_code("hexagon")))), "family"), Error);
}

TEST_CASE("SVG of a Steiner chain") {
    const Family f = concentric_annulus();
    const Arrangement a = arrangement_from_code(f, make_code("hexagon"));
    const std::string svg = io::render_svg(a);
    const std::regex circle(
        R"re(<circle class="(\w+)" cx="([^"]+)" cy="([^"]+)" r="([^"]+)"[^/]*stroke-width="([^"]+)")re");
    int family = 0, chain = 0;
    double lo_x = 1e9, hi_x = -1e9, family_width = 0, chain_width = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it) {
        const bool is_family = (*it)[1] == "family";
        (is_family ? family : chain)++;
        (is_family ? family_width : chain_width) = std::stod((*it)[5]);
        const double cx = std::stod((*it)[2]), r = std::stod((*it)[4]);
        lo_x = std::min(lo_x, cx - r);
        hi_x = std::max(hi_x, cx + r);
    }
    CHECK(family == 2);
    CHECK(chain == 6);

    std::smatch vb;
    REQUIRE(std::regex_search(svg, vb, std::regex(R"re(viewBox="([^ ]+) ([^ ]+) ([^ ]+) ([^ "]+)")re")));
    const double x0 = std::stod(vb[1]), w = std::stod(vb[3]);
    CHECK(x0 <= lo_x);
    CHECK(x0 + w >= hi_x);

    CHECK(family_width > chain_width);

    CHECK_THROWS_AS(io::render_svg(soddy_arrangement(mutually_tangent_family(3, 3), make_code("hexagon"))), Error);
}

TEST_CASE("PLY and point JSON") {
    const Arrangement a = soddy_arrangement(mutually_tangent_family(3, 3), make_code("hexagon"));
    const std::string ply = io::render_ply(a);
    CHECK(ply.rfind("ply\nformat ascii 1.0\n", 0) == 0);
    CHECK(ply.find("element vertex 9\n") != std::string::npos);
    const auto body = ply.substr(ply.find("end_header\n") + 11);
    CHECK(std::count(body.begin(), body.end(), '\n') == 9);

    const io::Json pts = io::Json::parse(io::render_point_json(a));
    CHECK(pts["items"].size() == 9);
    CHECK(pts["items"][0]["role"] == "family");
}
