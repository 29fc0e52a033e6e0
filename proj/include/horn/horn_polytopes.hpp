#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horn/hull.hpp"
#include "horn/partition.hpp"

namespace horn {

/// Lattice points of a Horn polytope: partitions of one declared length and
/// one weight, kept sorted and duplicate-free.
class LatticePointSet {
public:
    explicit LatticePointSet(std::size_t dimension) : dimension_(dimension) {}
    LatticePointSet(std::size_t dimension, std::vector<Partition> points);

    /// Throws ShapeError on a declared-length or weight mismatch.
    void insert(Partition point);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<Partition>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool contains(const Partition& p) const;

    LatticeHull hull() const;

    friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;

private:
    std::size_t dimension_;
    std::vector<Partition> points_;
};

/// |gamma| = |alpha| + |beta| and c^gamma_{alpha beta} != 0.
bool horn_membership(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// nu with at most p parts, |nu| = |sigma|, c^nu_{sigma- sigma+} != 0.
/// Candidates satisfy nu_1 <= sigma_1 + sigma_2. Throws ShapeError on odd length.
LatticePointSet p1_points(const Partition& sigma);
/// nu with at most p parts, |nu| = |sigma|, c^{nu^(2)}_{sigma sigma} != 0.
/// Candidates satisfy nu_1 <= 2 sigma_1.
LatticePointSet p2_points(const Partition& sigma);
/// gamma with at most 2p parts, |gamma| = 2|sigma|, c^gamma_{sigma sigma} != 0.
LatticePointSet p_points(const Partition& sigma);

/// Orthogonal projection onto the doubled vectors: nu_i = (gamma_{2i-1} +
/// gamma_{2i}) / 2, returned as numerators over the common denominator 2.
struct HalfIntegerVector {
    std::vector<std::int64_t> twice;  // 2 * nu_i
    std::vector<double> values() const;
};
HalfIntegerVector projection_onto_delta(const Partition& gamma);

/// One (sigma, nu) comparison: an inequality lhs <= rhs, an implication, or
/// a membership test, with the numbers that decided it.
struct ReportRecord {
    Partition sigma;
    std::optional<std::pair<Partition, Partition>> split;  // (lambda, mu) when relevant
    Partition nu;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool ok = true;
    std::string note;
};

struct Report {
    std::string suite;
    std::vector<ReportRecord> records;
    bool complete = true;

    std::size_t failures() const;
    bool passed() const { return complete && failures() == 0; }
    void append(Report other);
};

/// Set equality of p1_points and p2_points; one record per point of the
/// union, lhs = [in P1], rhs = [in P2].
Report verify_p1_equals_p2(const Partition& sigma);

/// For every nu with at most p parts and |nu| = |sigma|, checks
/// c^{nu^(2)}_{sigma sigma} != 0  =>  c^nu_{sigma- sigma+} != 0.
/// Records carry lhs = c^nu_{sigma- sigma+}, rhs = c^{nu^(2)}_{sigma sigma}.
Report verify_nonvanishing_implication(const Partition& sigma);

/// c^nu_{lambda mu} <= c^{tau(nu,nu)}_{tau(lambda,mu) tau(lambda,mu)}, all
/// three padded to a common declared length. Throws std::invalid_argument
/// when |nu| != |lambda| + |mu|.
Report verify_fflp_inequality(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^nu_{lambda mu} <= c^nu_{sigma- sigma+} for a split (lambda, mu) of the
/// parts of sigma into two partitions of length p. Throws
/// std::invalid_argument on an invalid split.
Report verify_lpp_inequality(const Partition& sigma, const Partition& lambda, const Partition& mu,
                             const Partition& nu);

/// The C(2p-1, p-1) ways to distribute the positions of sigma into two
/// groups of p, the first group holding sigma_1.
std::vector<std::pair<Partition, Partition>> sigma_splits(const Partition& sigma);

/// Every gamma in p_points(sigma) projects into the convex hull of
/// p1_points(sigma); exact rational test.
Report verify_projection_inclusion(const Partition& sigma);

/// Strictness data for one (sigma, nu): lhs = c^nu_{sigma- sigma+},
/// rhs = c^{nu^(2)}_{sigma sigma}; ok when lhs <= rhs.
ReportRecord prop2_record(const Partition& sigma, const Partition& nu);

}  // namespace horn
