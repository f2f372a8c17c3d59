#include "hexlet/cli.hpp"

#include "hexlet/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hexlet {

namespace {

using io::Json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

io::Document load(const std::string& path, std::string_view kind) {
    io::Document doc = io::parse(read_file(path));
    io::expect_kind(doc, kind);
    return doc;
}

Family load_family(const std::string& path) { return io::family_from_json(load(path, "family").payload); }

Arrangement load_arrangement(const std::string& path) {
    return io::arrangement_from_json(load(path, "arrangement").payload);
}

/// Catalog spec ("hexagon", "polygon:6") or a path to a code document.
SphericalCode resolve_code(const std::string& what) {
    if (std::filesystem::exists(what)) return io::code_from_json(load(what, "code").payload);
    return make_code_by_spec(what);
}

struct Context {
    std::ostream& out;
    std::string command_line;
    Tolerance tol;

    void emit(std::string kind, Json payload) const {
        io::Document doc;
        doc.kind = std::move(kind);
        doc.payload = std::move(payload);
        doc.metadata["tolerance"] = io::tolerance_json(tol);
        doc.metadata["command"] = command_line;
        out << io::serialize(doc);
    }
};

void error_json(std::ostream& err, std::string_view code, const std::string& message) {
    err << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arrangements of spheres tangent to a family, via spherical codes", "hexlet"};
    app.require_subcommand(1);

    std::string family_path, arrangement_path, code_spec, rotation_path, seed_path, output_path;
    int dim = 0, n = 0, m = 0;
    double psi = 0, verify_tol = -1;
    int code_k = 0, code_d = 0;
    std::string codes_action, codes_name;

    auto* validate = app.add_subcommand("validate", "Check the S-family conditions");
    validate->add_option("-f,--family", family_path)->required();

    auto* canonicalize = app.add_subcommand("canonicalize", "Inversive canonical form of a family");
    canonicalize->add_option("-f,--family", family_path)->required();

    auto* locus = app.add_subcommand("locus", "Locus sphere and contact angle");
    locus->add_option("-f,--family", family_path)->required();

    auto* build = app.add_subcommand("build", "Arrangement from a spherical code");
    build->add_option("-f,--family", family_path)->required();
    build->add_option("-c,--code", code_spec, "catalog name or code document")->required();
    build->add_option("--rotation", rotation_path, "JSON array of rows");

    auto* extract = app.add_subcommand("extract", "Spherical code of an arrangement");
    extract->add_option("-f,--family", family_path, "defaults to the family stored in the arrangement");
    extract->add_option("-a,--arrangement", arrangement_path)->required();

    auto* tight = app.add_subcommand("tight", "Greedy tight code");
    tight->add_option("-d,--dim", dim)->required();
    tight->add_option("--psi", psi)->required();
    tight->add_option("--seed", seed_path, "code document with d-1 seed points");

    auto* classify = app.add_subcommand("classify", "Steiner classification of a code");
    classify->add_option("-c,--code", code_spec)->required();
    classify->add_option("--psi", psi)->required();

    auto* soddy = app.add_subcommand("soddy", "Arrangement around m mutually tangent spheres in R^n");
    soddy->add_option("-n", n)->required();
    soddy->add_option("-m", m)->required();
    soddy->add_option("-c,--code", code_spec);

    auto* hexlet_cmd = app.add_subcommand("hexlet", "Six-sphere chain around three mutually tangent spheres");
    hexlet_cmd->add_option("-f,--family", family_path)->required();

    auto* verify = app.add_subcommand("verify", "Check an arrangement");
    verify->add_option("-f,--family", family_path, "defaults to the family stored in the arrangement");
    verify->add_option("-a,--arrangement", arrangement_path)->required();
    verify->add_option("--tol", verify_tol, "relative tolerance");

    auto* render = app.add_subcommand("render", "Write SVG (n = 2), JSON or PLY (n = 3)");
    render->add_option("-a,--arrangement", arrangement_path)->required();
    render->add_option("-o,--output", output_path)->required();

    auto* codes = app.add_subcommand("codes", "Catalog of named codes");
    codes->add_option("action", codes_action)->required()->check(CLI::IsMember({"list", "emit"}));
    codes->add_option("name", codes_name);
    codes->add_option("--k", code_k);
    codes->add_option("--d", code_d);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        error_json(err, "UsageError", e.what());
        return 2;
    }

    Context ctx{out, {}, {}};
    for (int i = 0; i < argc; ++i) ctx.command_line += (i ? " " : "") + std::string(argv[i]);
    if (verify_tol > 0) ctx.tol.rel = verify_tol;

    try {
        if (*validate) {
            ctx.emit("report", io::to_json(validate_s_family(load_family(family_path), ctx.tol)));
        } else if (*canonicalize) {
            ctx.emit("canonical_form", io::to_json(canonical_transform(load_family(family_path), ctx.tol)));
        } else if (*locus) {
            const CanonicalForm cf = canonical_transform(load_family(family_path), ctx.tol);
            const LocusResult l = locus_sphere(cf, ctx.tol);
            std::optional<ContactAngle> angle;
            if (const auto* s = std::get_if<LocusSphere>(&l)) angle = contact_angle(*s);
            ctx.emit("locus", io::to_json(l, angle));
        } else if (*build) {
            Mat rotation;
            if (!rotation_path.empty()) rotation = io::matrix_from_rows(io::parse_json(read_file(rotation_path)));
            const Arrangement a =
                arrangement_from_code(load_family(family_path), resolve_code(code_spec), rotation, ctx.tol);
            ctx.emit("arrangement", io::to_json(a));
        } else if (*extract) {
            const Arrangement a = load_arrangement(arrangement_path);
            const Family f = family_path.empty() ? a.family : load_family(family_path);
            ctx.emit("code", io::to_json(code_from_arrangement(f, a.spheres, ctx.tol).code));
        } else if (*tight) {
            std::optional<Mat> seed;
            if (!seed_path.empty()) seed = io::code_from_json(load(seed_path, "code").payload).points;
            ctx.emit("code", io::to_json(tight_code(dim, psi, seed, ctx.tol.angle)));
        } else if (*classify) {
            ctx.emit("classification", io::to_json(classify_steiner(resolve_code(code_spec), psi, ctx.tol.angle)));
        } else if (*soddy) {
            const Family f = mutually_tangent_family(n, m);
            const SphericalCode code = code_spec.empty() ? default_soddy_code(n, m) : resolve_code(code_spec);
            // m = n + 1 leaves a 0-sphere whose two points never touch.
            ctx.emit("arrangement", io::to_json(soddy_arrangement(f, code, ctx.tol, m == n + 1)));
        } else if (*hexlet_cmd) {
            ctx.emit("arrangement", io::to_json(soddy_arrangement(load_family(family_path), make_code("hexagon"), ctx.tol)));
        } else if (*verify) {
            const Arrangement a = load_arrangement(arrangement_path);
            const Family f = family_path.empty() ? a.family : load_family(family_path);
            const VerificationReport report = verify_arrangement(f, a.spheres, ctx.tol);
            ctx.emit("report", io::to_json(report));
            return report.pass ? 0 : 1;
        } else if (*render) {
            const Arrangement a = load_arrangement(arrangement_path);
            const std::string ext = std::filesystem::path(output_path).extension().string();
            if (ext == ".svg") write_file(output_path, io::render_svg(a));
            else if (ext == ".json") write_file(output_path, io::render_point_json(a));
            else if (ext == ".ply") write_file(output_path, io::render_ply(a));
            else throw InputError("output must end in .svg, .json or .ply");
        } else if (*codes) {
            if (codes_action == "list") {
                Json list = Json::array();
                for (const auto& name : catalog_names()) list.push_back(name);
                out << Json{{"codes", std::move(list)}}.dump(2) << "\n";
            } else {
                if (codes_name.empty()) throw InputError("codes emit needs a name");
                const SphericalCode code = (code_k || code_d) ? make_code(codes_name, CodeParams{code_k, code_d})
                                                              : make_code_by_spec(codes_name);
                ctx.emit("code", io::to_json(code));
            }
        }
    } catch (const InputError& e) {
        error_json(err, "InputError", e.what());
        return 2;
    } catch (const Error& e) {
        error_json(err, to_string(e.code()), e.what());
        const bool input = e.code() == ErrorCode::MalformedInput || e.code() == ErrorCode::SchemaMismatch;
        return input ? 2 : 1;
    }
    return 0;
}

}  // namespace hexlet
