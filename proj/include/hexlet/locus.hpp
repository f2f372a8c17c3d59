#pragma once

#include "hexlet/canonicalize.hpp"

#include <string>
#include <variant>

namespace hexlet {

/// A (d-1)-sphere of admissible unit-sphere centers inside the d-flat
/// center + span(basis). `basis` is n x d with orthonormal columns.
struct LocusSphere {
    Vec center;
    double radius = 0;
    Mat basis;

    Eigen::Index ambient_dim() const { return center.size(); }
    Eigen::Index flat_dim() const { return basis.cols(); }
};

struct EmptyLocus {
    std::string reason;
};

struct PointLocus {
    Vec center;
};

/// The constraints cut out a flat rather than a sphere.
struct UnboundedLocus {
    Vec point;
    Mat basis;
};

using LocusResult = std::variant<LocusSphere, EmptyLocus, PointLocus, UnboundedLocus>;

/// Side on which admissible spheres touch members beyond the first pair.
enum class Orientation { External, Internal };

class ContactAngle {
public:
    static ContactAngle finite(double psi) { return ContactAngle(psi); }
    static ContactAngle solitary() { return ContactAngle(); }

    bool is_finite() const { return finite_; }
    bool is_solitary() const { return !finite_; }
    /// Throws BadParams on a solitary angle.
    double psi() const;

private:
    ContactAngle() = default;
    explicit ContactAngle(double psi) : psi_(psi), finite_(true) {}

    double psi_ = 0;
    bool finite_ = false;
};

/// Z_0 followed by one surface per member beyond the first pair.
std::vector<GenSphere> constraint_surfaces(const CanonicalForm& cf,
                                           Orientation orientation = Orientation::External);

/// Throws DegenerateConstraint when a surface adds no independent condition.
LocusResult locus_sphere(const CanonicalForm& cf, const Tolerance& tol = {},
                         Orientation orientation = Orientation::External);

/// arccos(1 - 2/r^2) for r >= 1, Solitary below.
ContactAngle contact_angle(const LocusSphere& locus);

Vec project_to_unit(const LocusSphere& locus, const Vec& p, const Tolerance& tol = {});
Vec lift_from_unit(const LocusSphere& locus, const Vec& x);

/// Convenience: the locus of a canonical form, throwing NotSFamily unless it
/// is a proper sphere.
LocusSphere require_locus_sphere(const CanonicalForm& cf, const Tolerance& tol = {});

}  // namespace hexlet
