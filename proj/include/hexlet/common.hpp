#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hexlet {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VectorX<double>;
using Mat = MatrixX<double>;

/// Numerical tolerances shared by every predicate in the library.
///
/// `rel` scales with the geometry involved (radii, distances), `abs` is the
/// floor. `angle` is an absolute bound on angles compared against a contact
/// angle; it is looser because arccos loses precision.
template <typename Scalar>
struct BasicTolerance {
    Scalar rel = Scalar(1e-9);
    Scalar abs = Scalar(1e-12);
    Scalar angle = Scalar(1e-7);

    Scalar bound(Scalar scale) const { return abs + rel * scale; }
};

using Tolerance = BasicTolerance<double>;

enum class ErrorCode {
    CenterSingularity,
    IdenticalSpheres,
    DimensionMismatch,
    TangentPair,
    IntersectingPair,
    NotSFamily,
    DegenerateConstraint,
    OffLocus,
    UnknownCode,
    BadParams,
    TooFewPoints,
    SizeGuard,
    CodeAngleMismatch,
    IsolatedSphere,
    NotTangentToFamily,
    NonCongruentImages,
    NotIsometric,
    NotTangentPair,
    NotTangentToPair,
    NoRealSolution,
    DegenerateSimplex,
    InfeasiblePsi,
    UnclassifiableSteiner,
    BadM,
    BadDims,
    SchemaMismatch,
    MalformedInput,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::CenterSingularity: return "CenterSingularity";
        case ErrorCode::IdenticalSpheres: return "IdenticalSpheres";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::TangentPair: return "TangentPair";
        case ErrorCode::IntersectingPair: return "IntersectingPair";
        case ErrorCode::NotSFamily: return "NotSFamily";
        case ErrorCode::DegenerateConstraint: return "DegenerateConstraint";
        case ErrorCode::OffLocus: return "OffLocus";
        case ErrorCode::UnknownCode: return "UnknownCode";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::SizeGuard: return "SizeGuard";
        case ErrorCode::CodeAngleMismatch: return "CodeAngleMismatch";
        case ErrorCode::IsolatedSphere: return "IsolatedSphere";
        case ErrorCode::NotTangentToFamily: return "NotTangentToFamily";
        case ErrorCode::NonCongruentImages: return "NonCongruentImages";
        case ErrorCode::NotIsometric: return "NotIsometric";
        case ErrorCode::NotTangentPair: return "NotTangentPair";
        case ErrorCode::NotTangentToPair: return "NotTangentToPair";
        case ErrorCode::NoRealSolution: return "NoRealSolution";
        case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
        case ErrorCode::InfeasiblePsi: return "InfeasiblePsi";
        case ErrorCode::UnclassifiableSteiner: return "UnclassifiableSteiner";
        case ErrorCode::BadM: return "BadM";
        case ErrorCode::BadDims: return "BadDims";
        case ErrorCode::SchemaMismatch: return "SchemaMismatch";
        case ErrorCode::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hexlet
