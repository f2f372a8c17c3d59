#pragma once

#include "hexlet/inversive.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hexlet {

/// The given spheres S_1..S_m; S_1 and S_2 are the pair that gets
/// normalized, the rest are carried along.
struct Family {
    Eigen::Index ambient_dim = 0;
    std::vector<GenSphere> members;
};

/// Builds a family, checking that all members share one ambient dimension.
Family make_family(std::vector<GenSphere> members);

enum class FamilyCase { Tangent, NonTangent, Invalid };

std::string_view to_string(FamilyCase c);

struct Violation {
    /// 1: first pair intersects, 2: a later member crosses both of the
    /// first pair, 3: no bounded nonempty locus of admissible centers.
    int condition = 0;
    std::vector<int> indices;
    std::string message;
};

struct SFamilyReport {
    bool is_s_family = false;
    std::vector<Violation> violations;
    FamilyCase family_case = FamilyCase::Invalid;
};

/// Members mapped so that S_1, S_2 are the hyperplanes x_n = +-1 (Tangent)
/// or concentric spheres about the origin with radii differing by 2
/// (NonTangent). Admissible spheres in this frame are unit spheres.
struct CanonicalForm {
    TransformChain chain;
    std::vector<GenSphere> members;
    FamilyCase family_case = FamilyCase::Invalid;
};

SFamilyReport validate_s_family(const Family& family, const Tolerance& tol = {});

/// The two points on the center line at which inversion makes the pair
/// concentric, ordered along the direction from S1 to S2. A concentric
/// pair yields its common center twice (the other limiting point is at
/// infinity).
std::pair<Vec, Vec> limiting_points(const GenSphere& s1, const GenSphere& s2, const Tolerance& tol = {});

/// Requires conditions (1) and (2) of validate_s_family; throws NotSFamily otherwise.
CanonicalForm canonical_transform(const Family& family, const Tolerance& tol = {});

/// Proper rotation taking the unit vector `normal` to the last axis.
Mat rotation_to_last_axis(const Vec& normal);

}  // namespace hexlet
