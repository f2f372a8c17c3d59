#pragma once

// Cliques, adjacency, the greedy tight closure, Steiner classification and
// the mutually tangent (Soddy-type) families.

#include "hexlet/correspondence.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hexlet {

using Clique = std::vector<int>;

/// Index sets of `size` points whose pairwise angles are within
/// `angle_tol` of psi, in lexicographic order.
std::vector<Clique> find_cliques(const SphericalCode& code, double psi, int size, double angle_tol = 1e-7);

/// The two unit vectors at angle psi from every column of `verts` (d x (d-1)),
/// mirror images across span(verts).
std::pair<Vec, Vec> adjacent_points(const Mat& verts, double psi, double angle_tol = 1e-7);

/// d-1 unit vectors in R^d with pairwise angle psi (a regular (d-2)-simplex).
Mat regular_simplex_seed(int d, double psi);

/// Greedy clique-extension closure started from `seed` (default:
/// regular_simplex_seed). Deterministic.
SphericalCode tight_code(int d, double psi, const std::optional<Mat>& seed = std::nullopt,
                         double angle_tol = 1e-7);

bool is_steiner(const SphericalCode& code, double psi, double angle_tol = 1e-7);

struct SteinerClass {
    enum class Kind { Polygon, Simplex, Crosspolytope, Icosahedron, Cell600, NotSteiner };
    Kind kind = Kind::NotSteiner;
    int param = 0;  ///< k for Polygon, d for Simplex / Crosspolytope

    friend bool operator==(const SteinerClass&, const SteinerClass&) = default;
};

std::string to_string(const SteinerClass& c);

SteinerClass classify_steiner(const SphericalCode& code, double psi, double angle_tol = 1e-7);

struct SoddyParams {
    int m = 0;
    double psi = 0;
    std::optional<double> r;  ///< locus radius, m >= 3 only
};

SoddyParams soddy_params(int m);

/// m pairwise externally tangent spheres in R^n (one representative).
Family mutually_tangent_family(int n, int m);

/// Arrangement for m mutually tangent spheres; checks that the contact angle
/// equals arccos(1/(m-1)).
Arrangement soddy_arrangement(const Family& family, const SphericalCode& code, const Tolerance& tol = {},
                              bool allow_isolated = false);

/// Maximum arrangement size for m mutually tangent spheres in R^n when known.
std::optional<long long> cardinality_hint(int n, int m);

/// Code used when none is given: the known kissing configurations for m = 3
/// (hexagon, cuboctahedron, 24-cell), the antipodal pair for m = n + 1 and
/// the tight closure otherwise.
SphericalCode default_soddy_code(int n, int m);

}  // namespace hexlet
