#pragma once

// JSON documents for every domain type, plus SVG / JSON / PLY rendering.

#include "hexlet/steiner.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace hexlet::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1.0";

/// family, code, arrangement, report, canonical_form, locus, classification
struct Document {
    std::string schema_version{kSchemaVersion};
    std::string kind;
    Json payload;
    Json metadata = Json::object();
};

std::string serialize(const Document& doc);

/// Plain JSON value; throws MalformedInput with line/column.
Json parse_json(std::string_view text);

/// Throws MalformedInput (with line/column) or SchemaMismatch.
Document parse(std::string_view text);

/// Throws MalformedInput unless doc.kind == kind.
void expect_kind(const Document& doc, std::string_view kind);

Json tolerance_json(const Tolerance& tol);

Json to_json(const Vec& v);
Json to_json(const GenSphere& s);
Json to_json(const Family& f);
Json to_json(const SphericalCode& code);
Json to_json(const Arrangement& a);
Json to_json(const SFamilyReport& r);
Json to_json(const TransformChain& chain);
Json to_json(const CanonicalForm& cf);
Json to_json(const ContactAngle& angle);
Json to_json(const LocusResult& locus, const std::optional<ContactAngle>& angle);
Json to_json(const VerificationReport& r);
Json to_json(const SteinerClass& c);

/// Rows of a matrix as nested arrays.
Json matrix_rows(const Mat& m);

Vec vec_from_json(const Json& j);
Mat matrix_from_rows(const Json& j);
GenSphere gensphere_from_json(const Json& j);
Family family_from_json(const Json& j);
SphericalCode code_from_json(const Json& j);
Arrangement arrangement_from_json(const Json& j);
TransformChain chain_from_json(const Json& j);
CanonicalForm canonical_form_from_json(const Json& j);

/// n = 2 only: one <circle> per sphere, family members drawn thick.
std::string render_svg(const Arrangement& a);
/// Any n: centers and radii with a role tag.
std::string render_point_json(const Arrangement& a);
/// n = 3 only: ASCII PLY point cloud with radius and role properties.
std::string render_ply(const Arrangement& a);

}  // namespace hexlet::io
