#include "hexlet/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hexlet::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) malformed(std::string("expected an object holding '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) malformed(std::string("missing field '") + key + "'");
    return *it;
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) malformed(std::string("field '") + what + "' must be a number");
    return j.get<double>();
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) malformed(std::string("field '") + what + "' must be an integer");
    return j.get<int>();
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Json matrix_columns(const Mat& m) {
    Json out = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(to_json(Vec(m.col(c))));
    return out;
}

Mat matrix_from_columns(const Json& j, Eigen::Index rows) {
    if (!j.is_array()) malformed("expected an array of vectors");
    Mat out(rows, static_cast<Eigen::Index>(j.size()));
    for (std::size_t c = 0; c < j.size(); ++c) {
        const Vec v = vec_from_json(j[c]);
        if (v.size() != rows) malformed("vector " + std::to_string(c) + " has the wrong length");
        out.col(static_cast<Eigen::Index>(c)) = v;
    }
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(std::numeric_limits<double>::max_digits10);
    os << x;
    return os.str();
}

}  // namespace

std::string serialize(const Document& doc) {
    Json j;
    j["schema_version"] = doc.schema_version;
    j["kind"] = doc.kind;
    j["payload"] = doc.payload;
    j["metadata"] = doc.metadata;
    return j.dump(2) + "\n";
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        malformed("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
}

Document parse(std::string_view text) {
    const Json j = parse_json(text);
    const Json& version = field(j, "schema_version");
    if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
        throw Error(ErrorCode::SchemaMismatch, "unsupported schema_version " + version.dump());
    Document doc;
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) malformed("kind must be a string");
    doc.kind = kind.get<std::string>();
    doc.payload = field(j, "payload");
    if (const auto it = j.find("metadata"); it != j.end()) doc.metadata = *it;
    return doc;
}

void expect_kind(const Document& doc, std::string_view kind) {
    if (doc.kind != kind) malformed("expected a '" + std::string(kind) + "' document, got '" + doc.kind + "'");
}

Json tolerance_json(const Tolerance& tol) {
    return Json{{"rel", tol.rel}, {"abs", tol.abs}, {"angle", tol.angle}};
}

// ---------------------------------------------------------------------------
// encoders

Json to_json(const Vec& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Json matrix_rows(const Mat& m) {
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(Vec(m.row(r).transpose())));
    return out;
}

Json to_json(const GenSphere& s) {
    Json out;
    if (const auto* sp = std::get_if<SphereD>(&s)) {
        out["type"] = "sphere";
        out["center"] = to_json(sp->center);
        out["radius"] = sp->radius;
    } else {
        const auto& h = std::get<HyperplaneD>(s);
        out["type"] = "hyperplane";
        out["normal"] = to_json(h.normal);
        out["offset"] = h.offset;
    }
    return out;
}

Json to_json(const Family& f) {
    Json members = Json::array();
    for (const auto& m : f.members) members.push_back(to_json(m));
    return Json{{"ambient_dim", f.ambient_dim}, {"members", std::move(members)}};
}

Json to_json(const SphericalCode& code) {
    Json out;
    out["dim"] = code.dim();
    out["points"] = matrix_columns(code.points);
    out["nominal_psi"] = code.nominal_psi ? Json(*code.nominal_psi) : Json(nullptr);
    return out;
}

Json to_json(const Arrangement& a) {
    Json spheres = Json::array();
    for (const auto& s : a.spheres) spheres.push_back(to_json(s));
    Json graph = Json::array();
    for (const auto& [i, j] : a.tangency_graph) graph.push_back(Json::array({i, j}));
    Json out;
    out["family"] = to_json(a.family);
    out["spheres"] = std::move(spheres);
    out["tangency_graph"] = std::move(graph);
    return out;
}

Json to_json(const SFamilyReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(Json{{"condition", v.condition}, {"indices", v.indices}, {"message", v.message}});
    Json out;
    out["is_s_family"] = r.is_s_family;
    out["case"] = std::string(to_string(r.family_case));
    out["violations"] = std::move(violations);
    return out;
}

Json to_json(const TransformChain& chain) {
    Json steps = Json::array();
    for (const auto& step : chain.steps) {
        Json s;
        if (const auto* inv = std::get_if<InversionD>(&step)) {
            s["type"] = "inversion";
            s["center"] = to_json(inv->center);
            s["radius_sq"] = inv->radius_sq;
        } else {
            const auto& sim = std::get<SimilarityD>(step);
            s["type"] = "similarity";
            s["scale"] = sim.scale;
            s["rotation"] = matrix_rows(sim.rotation);
            s["translation"] = to_json(sim.translation);
        }
        steps.push_back(std::move(s));
    }
    return steps;
}

Json to_json(const CanonicalForm& cf) {
    Json members = Json::array();
    for (const auto& m : cf.members) members.push_back(to_json(m));
    Json out;
    out["case"] = std::string(to_string(cf.family_case));
    out["chain"] = to_json(cf.chain);
    out["members"] = std::move(members);
    return out;
}

Json to_json(const ContactAngle& angle) {
    if (angle.is_solitary()) return Json{{"type", "solitary"}};
    return Json{{"type", "finite"}, {"psi", angle.psi()}};
}

Json to_json(const LocusResult& locus, const std::optional<ContactAngle>& angle) {
    Json out;
    if (const auto* l = std::get_if<LocusSphere>(&locus)) {
        out["status"] = "sphere";
        out["center"] = to_json(l->center);
        out["radius"] = l->radius;
        out["flat_dim"] = l->flat_dim();
        out["basis"] = matrix_columns(l->basis);
    } else if (const auto* e = std::get_if<EmptyLocus>(&locus)) {
        out["status"] = "empty";
        out["reason"] = e->reason;
    } else if (const auto* p = std::get_if<PointLocus>(&locus)) {
        out["status"] = "point";
        out["center"] = to_json(p->center);
    } else {
        const auto& u = std::get<UnboundedLocus>(locus);
        out["status"] = "unbounded";
        out["point"] = to_json(u.point);
        out["basis"] = matrix_columns(u.basis);
    }
    out["contact_angle"] = angle ? to_json(*angle) : Json(nullptr);
    return out;
}

Json to_json(const VerificationReport& r) {
    Json residuals = Json::array();
    for (Eigen::Index i = 0; i < r.family_residuals.rows(); ++i)
        residuals.push_back(to_json(Vec(r.family_residuals.row(i).transpose())));
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(Json{{"i", p.first}, {"j", p.second}, {"kind", std::string(to_string(p.kind))}});
    Json out;
    out["pass"] = r.pass;
    out["max_residual"] = r.max_residual;
    out["family_residuals"] = std::move(residuals);
    out["pairs"] = std::move(pairs);
    out["failures"] = r.failures;
    return out;
}

Json to_json(const SteinerClass& c) {
    static constexpr const char* names[] = {"polygon", "simplex", "crosspolytope", "icosahedron", "cell600",
                                            "not_steiner"};
    Json out;
    out["kind"] = names[static_cast<int>(c.kind)];
    out["param"] = c.param;
    out["label"] = to_string(c);
    return out;
}

// ---------------------------------------------------------------------------
// decoders

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) malformed("expected an array of numbers");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], "coordinate");
    return v;
}

Mat matrix_from_rows(const Json& j) {
    if (!j.is_array() || j.empty()) malformed("expected a nonempty array of rows");
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    Mat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < j.size(); ++r) {
        const Vec row = vec_from_json(j[r]);
        if (static_cast<std::size_t>(row.size()) != cols) malformed("ragged matrix rows");
        m.row(static_cast<Eigen::Index>(r)) = row.transpose();
    }
    return m;
}

GenSphere gensphere_from_json(const Json& j) {
    const Json& type = field(j, "type");
    if (type == "sphere") {
        const double r = number(field(j, "radius"), "radius");
        if (!(r > 0)) malformed("sphere radius must be positive");
        return SphereD{vec_from_json(field(j, "center")), r};
    }
    if (type == "hyperplane") {
        Vec n = vec_from_json(field(j, "normal"));
        if (std::abs(n.norm() - 1.0) > 1e-9) malformed("hyperplane normal must have unit length");
        return HyperplaneD{std::move(n), number(field(j, "offset"), "offset")};
    }
    malformed("unknown generalized sphere type " + type.dump());
}

Family family_from_json(const Json& j) {
    const int n = integer(field(j, "ambient_dim"), "ambient_dim");
    const Json& members = field(j, "members");
    if (!members.is_array()) malformed("members must be an array");
    std::vector<GenSphere> out;
    for (const auto& m : members) out.push_back(gensphere_from_json(m));
    for (const auto& m : out)
        if (ambient_dim(m) != n) throw Error(ErrorCode::DimensionMismatch, "member dimension differs from ambient_dim");
    Family f;
    f.ambient_dim = n;
    f.members = std::move(out);
    return f;
}

SphericalCode code_from_json(const Json& j) {
    const int d = integer(field(j, "dim"), "dim");
    Mat points = matrix_from_columns(field(j, "points"), d);
    std::optional<double> psi;
    if (const auto it = j.find("nominal_psi"); it != j.end() && !it->is_null()) psi = number(*it, "nominal_psi");
    try {
        return make_code_from_points(std::move(points), psi, 1e-9);
    } catch (const Error& e) {
        malformed(e.what());
    }
}

Arrangement arrangement_from_json(const Json& j) {
    Arrangement a;
    a.family = family_from_json(field(j, "family"));
    const Json& spheres = field(j, "spheres");
    if (!spheres.is_array()) malformed("spheres must be an array");
    for (const auto& s : spheres) a.spheres.push_back(gensphere_from_json(s));
    if (const auto it = j.find("tangency_graph"); it != j.end()) {
        for (const auto& e : *it) {
            if (!e.is_array() || e.size() != 2) malformed("tangency_graph entries must be pairs");
            a.tangency_graph.emplace_back(integer(e[0], "edge"), integer(e[1], "edge"));
        }
    }
    return a;
}

TransformChain chain_from_json(const Json& j) {
    if (!j.is_array()) malformed("chain must be an array");
    TransformChain chain;
    for (const auto& s : j) {
        const Json& type = field(s, "type");
        if (type == "inversion") {
            chain.steps.emplace_back(
                InversionD{vec_from_json(field(s, "center")), number(field(s, "radius_sq"), "radius_sq")});
        } else if (type == "similarity") {
            chain.steps.emplace_back(SimilarityD{number(field(s, "scale"), "scale"),
                                                 matrix_from_rows(field(s, "rotation")),
                                                 vec_from_json(field(s, "translation"))});
        } else {
            malformed("unknown transform step " + type.dump());
        }
    }
    return chain;
}

CanonicalForm canonical_form_from_json(const Json& j) {
    CanonicalForm cf;
    const Json& c = field(j, "case");
    if (c == "tangent") cf.family_case = FamilyCase::Tangent;
    else if (c == "non_tangent") cf.family_case = FamilyCase::NonTangent;
    else cf.family_case = FamilyCase::Invalid;
    cf.chain = chain_from_json(field(j, "chain"));
    for (const auto& m : field(j, "members")) cf.members.push_back(gensphere_from_json(m));
    return cf;
}

// ---------------------------------------------------------------------------
// rendering

std::string render_svg(const Arrangement& a) {
    if (a.family.ambient_dim != 2) throw Error(ErrorCode::BadDims, "SVG rendering needs a planar arrangement");

    struct Item {
        const GenSphere* shape;
        bool family;
    };
    std::vector<Item> items;
    for (const auto& m : a.family.members) items.push_back({&m, true});
    for (const auto& s : a.spheres) items.push_back({&s, false});

    // Bounding box of all circles, y flipped to SVG orientation.
    double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
    double max_x = -min_x, max_y = -min_x;
    for (const auto& it : items)
        if (const auto* s = std::get_if<SphereD>(it.shape)) {
            min_x = std::min(min_x, s->center(0) - s->radius);
            max_x = std::max(max_x, s->center(0) + s->radius);
            min_y = std::min(min_y, -s->center(1) - s->radius);
            max_y = std::max(max_y, -s->center(1) + s->radius);
        }
    if (!std::isfinite(min_x)) min_x = min_y = -1, max_x = max_y = 1;
    const double size = std::max(max_x - min_x, max_y - min_y);
    const double margin = 0.05 * size;
    min_x -= margin;
    min_y -= margin;
    const double width = max_x - min_x + margin;
    const double height = max_y - min_y + margin;
    const double thin = 0.002 * size;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x) << ' ' << fmt(min_y) << ' '
       << fmt(width) << ' ' << fmt(height) << "\">\n";
    for (const auto& it : items) {
        const double stroke = it.family ? 3 * thin : thin;
        if (const auto* s = std::get_if<SphereD>(it.shape)) {
            os << "  <circle class=\"" << (it.family ? "family" : "arrangement") << "\" cx=\"" << fmt(s->center(0))
               << "\" cy=\"" << fmt(-s->center(1)) << "\" r=\"" << fmt(s->radius)
               << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
        } else {
            // Line <normal, x> = offset clipped to the view box diagonal.
            const auto& h = std::get<HyperplaneD>(*it.shape);
            const Vec foot = h.offset * h.normal;
            const Vec dir(Eigen::Vector2d(-h.normal(1), h.normal(0)));
            const double reach = 2 * (width + height) + foot.norm();
            const Vec p = foot - reach * dir, q = foot + reach * dir;
            os << "  <line class=\"" << (it.family ? "family" : "arrangement") << "\" x1=\"" << fmt(p(0))
               << "\" y1=\"" << fmt(-p(1)) << "\" x2=\"" << fmt(q(0)) << "\" y2=\"" << fmt(-q(1))
               << "\" stroke=\"black\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_point_json(const Arrangement& a) {
    Json items = Json::array();
    auto add = [&](const GenSphere& g, const char* role) {
        Json item = to_json(g);
        item["role"] = role;
        items.push_back(std::move(item));
    };
    for (const auto& m : a.family.members) add(m, "family");
    for (const auto& s : a.spheres) add(s, "arrangement");
    return Json{{"ambient_dim", a.family.ambient_dim}, {"items", std::move(items)}}.dump(2) + "\n";
}

std::string render_ply(const Arrangement& a) {
    if (a.family.ambient_dim != 3) throw Error(ErrorCode::BadDims, "PLY export needs a three-dimensional arrangement");
    std::vector<std::pair<const SphereD*, int>> rows;
    for (const auto& m : a.family.members)
        if (const auto* s = std::get_if<SphereD>(&m)) rows.emplace_back(s, 0);
    for (const auto& m : a.spheres)
        if (const auto* s = std::get_if<SphereD>(&m)) rows.emplace_back(s, 1);

    std::ostringstream os;
    os << "ply\nformat ascii 1.0\ncomment role 0 = family, 1 = arrangement\n"
       << "element vertex " << rows.size() << "\n"
       << "property double x\nproperty double y\nproperty double z\nproperty double radius\n"
       << "property uchar role\nend_header\n";
    for (const auto& [s, role] : rows)
        os << fmt(s->center(0)) << ' ' << fmt(s->center(1)) << ' ' << fmt(s->center(2)) << ' ' << fmt(s->radius)
           << ' ' << role << '\n';
    return os.str();
}

}  // namespace hexlet::io
