#pragma once

#include "hexlet/codes.hpp"
#include "hexlet/locus.hpp"

#include <utility>
#include <vector>

namespace hexlet {

/// Spheres tangent to every family member, with their mutual tangencies.
struct Arrangement {
    Family family;
    std::vector<GenSphere> spheres;
    std::vector<std::pair<int, int>> tangency_graph;
};

struct PairEntry {
    int first = 0;
    int second = 0;
    PairKind kind{};
};

struct VerificationReport {
    Mat family_residuals;  ///< spheres x family members, scale-free tangency residuals
    std::vector<PairEntry> pairs;  ///< i < j, coincident pairs omitted (reported as failures)
    double max_residual = 0;
    bool pass = false;
    std::vector<std::string> failures;
};

struct ExtractedCode {
    SphericalCode code;
    ContactAngle angle;
};

/// Conformal map carrying P_A(X) onto P_B(Y); sphere j of the first goes to
/// sphere matching[j] of the second.
struct Equivalence {
    TransformChain chain;
    std::vector<int> matching;
    Mat isometry;
};

/// Tangent pair mapped onto the slab |x_n| <= 1; packing centers expressed
/// in the first n-1 coordinates of that frame.
struct SlabPacking {
    TransformChain chain;
    Mat centers;  ///< (n-1) x k
    double max_radius_residual = 0;
    double max_midplane_offset = 0;
};

/// Throws BadParams unless `rotation` is in SO(d) within 1e-9.
void check_rotation(const Mat& rotation, Eigen::Index d);

/// Pairs of spheres that touch (either orientation) within `tol`.
std::vector<std::pair<int, int>> tangency_graph(const std::vector<GenSphere>& spheres, const Tolerance& tol = {});

/// Rotates the code by `rotation` (identity when empty) and pulls unit
/// spheres on the locus back to the original frame. `allow_isolated`
/// skips the no-isolated-sphere requirement.
Arrangement arrangement_from_code(const Family& family, const SphericalCode& code, const Mat& rotation = {},
                                  const Tolerance& tol = {}, bool allow_isolated = false);

ExtractedCode code_from_arrangement(const Family& family, const std::vector<GenSphere>& spheres,
                                    const Tolerance& tol = {});

Equivalence equivalence_map(const Family& family, const SphericalCode& x, const SphericalCode& y, const Mat& a,
                            const Mat& b, const Tolerance& tol = {});

SlabPacking tangent_pair_correspondence(const GenSphere& s1, const GenSphere& s2,
                                        const std::vector<GenSphere>& packing, const Tolerance& tol = {});

/// Inverse direction: unit spheres centered at `centers` in the slab frame,
/// mapped back next to the original pair.
std::vector<GenSphere> packing_from_slab(const GenSphere& s1, const GenSphere& s2, const Mat& centers,
                                         const Tolerance& tol = {});

VerificationReport verify_arrangement(const Family& family, const std::vector<GenSphere>& spheres,
                                      const Tolerance& tol = {});

}  // namespace hexlet
