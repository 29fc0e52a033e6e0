#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace horn {

/// Convex hull of a finite set of integer points in Z^n, for membership
/// queries only.
///
/// Construction finds the affine hull exactly (fraction-free elimination),
/// picks coordinates in which the hull is full-dimensional, and lists the
/// supporting hyperplanes by brute force over affinely independent d-subsets
/// of the points. Cost grows like C(N, d); intended for d <= 3 and a few
/// hundred points.
///
/// Rational points are tested exactly as (numerators, common denominator).
/// Floating-point points are tested with an absolute tolerance on the
/// distance to the affine hull and, for each facet, on the signed distance
/// to the facet measured in the reduced coordinates.
class LatticeHull {
public:
    explicit LatticeHull(std::vector<std::vector<std::int64_t>> points);

    std::size_t ambient_dimension() const noexcept { return ambient_; }
    /// Dimension of the affine hull; -1 when there are no points.
    int dimension() const noexcept { return dim_; }
    std::size_t point_count() const noexcept { return points_.size(); }

    /// Exact test of numerators/denominator; denominator must be positive.
    bool contains(std::span<const std::int64_t> numerators, std::int64_t denominator = 1) const;
    bool contains_approx(std::span<const double> point, double tolerance) const;

private:
    struct Halfspace {
        std::vector<__int128> normal;  // in reduced coordinates
        __int128 offset;               // normal . x <= offset
        double norm;
    };

    std::size_t ambient_ = 0;
    int dim_ = -1;
    std::vector<std::vector<std::int64_t>> points_;
    std::vector<std::int64_t> base_;
    std::vector<std::vector<std::int64_t>> equations_;  // integer normals of the affine hull
    std::vector<std::size_t> coords_;                  // reduced coordinates
    std::vector<Halfspace> facets_;
};

}  // namespace horn
