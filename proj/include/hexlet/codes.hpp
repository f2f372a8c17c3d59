#pragma once

#include "hexlet/common.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hexlet {

/// Finite set of unit vectors in R^d, stored column-wise (d x N).
struct SphericalCode {
    Mat points;
    std::optional<double> nominal_psi;

    Eigen::Index dim() const { return points.rows(); }
    Eigen::Index size() const { return points.cols(); }
    Vec point(Eigen::Index i) const { return points.col(i); }
};

/// Validates unit norms (within `norm_tol`) and pairwise distinctness.
SphericalCode make_code_from_points(Mat points, std::optional<double> nominal_psi = std::nullopt,
                                    double norm_tol = 1e-12);

/// Parameters for the parametrized generators.
struct CodeParams {
    int k = 0;  ///< polygon vertex count
    int d = 0;  ///< simplex / crosspolytope dimension
};

/// polygon, simplex, crosspolytope, icosahedron, cuboctahedron, cell24, cell600.
SphericalCode make_code(std::string_view name, const CodeParams& params = {});

/// Accepts "hexagon", "polygon:6", "simplex:3", "crosspolytope:4", or a
/// parameter-free catalog name.
SphericalCode make_code_by_spec(std::string_view spec);

/// Angle between unit vectors, accurate at both ends of [0, pi].
double angle_between(const Vec& a, const Vec& b);

double min_angle(const SphericalCode& code);
bool is_psi_code(const SphericalCode& code, double psi, double tol = 1e-7);

/// Orthogonal A with A * X = Y as point sets, plus the point matching.
struct Isometry {
    Mat map;
    std::vector<int> matching;  ///< X column j goes to Y column matching[j]
    double determinant = 1;
    double residual = 0;
};

/// Absent when no isometry exists at tolerance `tol` (on inner products and
/// mapped coordinates). Throws SizeGuard above `max_points`.
std::optional<Isometry> codes_isometric(const SphericalCode& x, const SphericalCode& y, double tol = 1e-8,
                                        Eigen::Index max_points = 200);

struct KnownCode {
    std::string name;
    int dim;
    int cardinality;
    double min_angle;
};

/// Reference table for the fixed catalog codes.
const std::vector<KnownCode>& known_codes();

/// Solved kissing numbers k(d) = A(d, pi/3): d in {1, 2, 3, 4, 8, 24}.
std::optional<long long> kissing_number(int d);

/// Every catalog name accepted by make_code_by_spec (parametrized families
/// listed with their parameter placeholder).
std::vector<std::string> catalog_names();

}  // namespace hexlet
