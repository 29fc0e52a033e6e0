#include "horn/horn_polytopes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "horn/lr_rule.hpp"

namespace horn {

LatticePointSet::LatticePointSet(std::size_t dimension, std::vector<Partition> points) : dimension_(dimension) {
    for (auto& p : points) insert(std::move(p));
}

void LatticePointSet::insert(Partition point) {
    if (point.declared_length() != dimension_)
        throw ShapeError("lattice point " + to_string(point) + " does not have length " + std::to_string(dimension_));
    if (!points_.empty() && point.weight() != points_.front().weight())
        throw ShapeError("lattice points must share a weight");
    auto it = std::lower_bound(points_.begin(), points_.end(), point);
    if (it == points_.end() || *it != point) points_.insert(it, std::move(point));
}

bool LatticePointSet::contains(const Partition& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

LatticeHull LatticePointSet::hull() const {
    std::vector<std::vector<std::int64_t>> pts;
    for (const auto& p : points_) pts.emplace_back(p.parts().begin(), p.parts().end());
    return LatticeHull(std::move(pts));
}

bool horn_membership(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    return gamma.weight() == alpha.weight() + beta.weight() && lr_nonzero(alpha, beta, gamma);
}

namespace {

int half_length(const Partition& sigma) {
    if (sigma.declared_length() % 2 != 0)
        throw ShapeError("sigma must have even declared length, got " + to_string(sigma));
    return static_cast<int>(sigma.declared_length() / 2);
}

}  // namespace

LatticePointSet p1_points(const Partition& sigma) {
    const int p = half_length(sigma);
    const auto [minus, plus] = sigma_split(sigma);
    LatticePointSet out(p);
    for (auto& nu : partitions_of(static_cast<int>(sigma.weight()), p, sigma[0] + sigma[1]))
        if (lr_nonzero(minus, plus, nu)) out.insert(std::move(nu));
    return out;
}

LatticePointSet p2_points(const Partition& sigma) {
    const int p = half_length(sigma);
    LatticePointSet out(p);
    for (auto& nu : partitions_of(static_cast<int>(sigma.weight()), p, 2 * sigma[0]))
        if (lr_nonzero(sigma, sigma, doubled(nu))) out.insert(std::move(nu));
    return out;
}

LatticePointSet p_points(const Partition& sigma) {
    const int p = half_length(sigma);
    LatticePointSet out(2 * p);
    for (auto& gamma : partitions_of(static_cast<int>(2 * sigma.weight()), 2 * p, 2 * sigma[0]))
        if (lr_nonzero(sigma, sigma, gamma)) out.insert(std::move(gamma));
    return out;
}

std::vector<double> HalfIntegerVector::values() const {
    std::vector<double> out;
    for (auto x : twice) out.push_back(static_cast<double>(x) / 2.0);
    return out;
}

HalfIntegerVector projection_onto_delta(const Partition& gamma) {
    if (gamma.declared_length() % 2 != 0)
        throw ShapeError("projection needs an even-length vector, got " + to_string(gamma));
    HalfIntegerVector out;
    for (std::size_t i = 0; i < gamma.declared_length(); i += 2)
        out.twice.push_back(static_cast<std::int64_t>(gamma[i]) + gamma[i + 1]);
    return out;
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.ok; }));
}

void Report::append(Report other) {
    if (suite.empty()) suite = other.suite;
    complete = complete && other.complete;
    records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                   std::make_move_iterator(other.records.end()));
}

Report verify_p1_equals_p2(const Partition& sigma) {
    const auto p1 = p1_points(sigma);
    const auto p2 = p2_points(sigma);
    std::vector<Partition> all = p1.points();
    all.insert(all.end(), p2.points().begin(), p2.points().end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    Report report{"p1p2", {}, true};
    for (auto& nu : all) {
        ReportRecord rec;
        rec.sigma = sigma;
        rec.lhs = p1.contains(nu);
        rec.rhs = p2.contains(nu);
        rec.ok = rec.lhs == rec.rhs;
        if (!rec.ok) rec.note = rec.lhs ? "in P1 only" : "in P2 only";
        rec.nu = std::move(nu);
        report.records.push_back(std::move(rec));
    }
    return report;
}

Report verify_nonvanishing_implication(const Partition& sigma) {
    const int p = half_length(sigma);
    const auto [minus, plus] = sigma_split(sigma);
    Report report{"implication", {}, true};
    for (auto& nu : partitions_of(static_cast<int>(sigma.weight()), p, 2 * sigma[0])) {
        ReportRecord rec;
        rec.sigma = sigma;
        rec.lhs = lr_coefficient(minus, plus, nu);
        rec.rhs = lr_coefficient(sigma, sigma, doubled(nu));
        rec.ok = rec.rhs == 0 || rec.lhs != 0;
        if (!rec.ok) rec.note = "c_{sigma sigma}^{nu(2)} != 0 but c_{sigma- sigma+}^nu = 0";
        rec.nu = std::move(nu);
        report.records.push_back(std::move(rec));
    }
    return report;
}

Report verify_fflp_inequality(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight())
        throw std::invalid_argument("FFLP inequality needs |nu| = |lambda| + |mu|");
    const std::size_t r = std::max({lambda.nonzero_length(), mu.nonzero_length(), nu.nonzero_length(),
                                    lambda.declared_length(), mu.declared_length(), nu.declared_length()});
    const Partition l = lambda.padded(r), m = mu.padded(r), n = nu.padded(r);
    const Partition shape = tau_partitions(l, m);

    ReportRecord rec;
    rec.split = std::make_pair(l, m);
    rec.nu = n;
    rec.lhs = lr_coefficient(l, m, n);
    rec.rhs = lr_coefficient(shape, shape, tau_partitions(n, n));
    rec.ok = rec.lhs <= rec.rhs;
    return Report{"fflp", {std::move(rec)}, true};
}

std::vector<std::pair<Partition, Partition>> sigma_splits(const Partition& sigma) {
    const int p = half_length(sigma);
    const int n = 2 * p;
    std::vector<std::pair<Partition, Partition>> out;
    if (p == 0) {
        out.emplace_back(Partition{}, Partition{});
        return out;
    }
    // Bitmasks over positions 1..2p-1; position 0 always goes to lambda.
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        if (__builtin_popcount(mask) != p - 1) continue;
        std::vector<int> l{sigma[0]}, m;
        for (int i = 1; i < n; ++i) (mask >> (i - 1) & 1u ? l : m).push_back(sigma[i]);
        out.emplace_back(Partition(std::move(l)), Partition(std::move(m)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Report verify_lpp_inequality(const Partition& sigma, const Partition& lambda, const Partition& mu,
                             const Partition& nu) {
    const std::size_t p = static_cast<std::size_t>(half_length(sigma));
    if (lambda.declared_length() != p || mu.declared_length() != p)
        throw std::invalid_argument("split parts must both have length " + std::to_string(p));
    std::vector<int> pooled = lambda.parts(), target = sigma.parts();
    pooled.insert(pooled.end(), mu.parts().begin(), mu.parts().end());
    std::sort(pooled.begin(), pooled.end());
    std::sort(target.begin(), target.end());
    if (pooled != target)
        throw std::invalid_argument(to_string(lambda) + " and " + to_string(mu) + " do not split " + to_string(sigma));

    const auto [minus, plus] = sigma_split(sigma);
    ReportRecord rec;
    rec.sigma = sigma;
    rec.split = std::make_pair(lambda, mu);
    rec.nu = nu;
    rec.lhs = lr_coefficient(lambda, mu, nu);
    rec.rhs = lr_coefficient(minus, plus, nu);
    rec.ok = rec.lhs <= rec.rhs;
    return Report{"lpp", {std::move(rec)}, true};
}

Report verify_projection_inclusion(const Partition& sigma) {
    const auto hull = p1_points(sigma).hull();
    Report report{"projection", {}, true};
    const auto big = p_points(sigma);
    for (const auto& gamma : big.points()) {
        const auto proj = projection_onto_delta(gamma);
        ReportRecord rec;
        rec.sigma = sigma;
        rec.nu = gamma;
        rec.ok = hull.contains(proj.twice, 2);
        rec.lhs = rec.ok;
        rec.rhs = 1;
        if (!rec.ok) rec.note = "projection outside hull(P1)";
        report.records.push_back(std::move(rec));
    }
    return report;
}

ReportRecord prop2_record(const Partition& sigma, const Partition& nu) {
    const auto [minus, plus] = sigma_split(sigma);
    ReportRecord rec;
    rec.sigma = sigma;
    rec.nu = nu;
    rec.lhs = lr_coefficient(minus, plus, nu);
    rec.rhs = lr_coefficient(sigma, sigma, doubled(nu));
    rec.ok = rec.lhs <= rec.rhs;
    return rec;
}

}  // namespace horn
