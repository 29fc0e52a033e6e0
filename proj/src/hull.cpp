#include "horn/hull.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace horn {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void reduce(std::vector<i128>& v) {
    i128 g = 0;
    for (i128 x : v) g = gcd128(g, x);
    if (g > 1)
        for (i128& x : v) x /= g;
}

// Bareiss determinant of a square matrix (destroys the input).
i128 determinant(std::vector<std::vector<i128>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    i128 sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

LatticeHull::LatticeHull(std::vector<std::vector<std::int64_t>> points) : points_(std::move(points)) {
    if (points_.empty()) return;
    ambient_ = points_.front().size();
    for (const auto& p : points_)
        if (p.size() != ambient_) throw std::invalid_argument("hull points must share a dimension");
    base_ = points_.front();

    // Row-reduce the difference vectors (fraction-free, rows kept primitive).
    std::vector<std::vector<i128>> rows;
    std::vector<std::size_t> pivots;
    for (const auto& p : points_) {
        std::vector<i128> v(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) v[j] = static_cast<i128>(p[j]) - base_[j];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::size_t c = pivots[r];
            if (v[c] == 0) continue;
            const i128 a = rows[r][c], b = v[c];
            for (std::size_t j = 0; j < ambient_; ++j) v[j] = v[j] * a - rows[r][j] * b;
            reduce(v);
        }
        std::size_t c = 0;
        while (c < ambient_ && v[c] == 0) ++c;
        if (c == ambient_) continue;
        // Clear the new pivot column from earlier rows to stay in echelon-reduced form.
        for (auto& row : rows) {
            if (row[c] == 0) continue;
            const i128 a = v[c], b = row[c];
            for (std::size_t j = 0; j < ambient_; ++j) row[j] = row[j] * a - v[j] * b;
            reduce(row);
        }
        rows.push_back(std::move(v));
        pivots.push_back(c);
    }
    dim_ = static_cast<int>(rows.size());
    coords_ = pivots;

    // Integer basis of the orthogonal complement: one vector per free column.
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    i128 lcm = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const i128 a = abs128(rows[r][pivots[r]]);
        lcm = lcm / gcd128(lcm, a) * a;
    }
    for (std::size_t f = 0; f < ambient_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<i128> n(ambient_, 0);
        n[f] = lcm;
        for (std::size_t r = 0; r < rows.size(); ++r) n[pivots[r]] = -rows[r][f] * lcm / rows[r][pivots[r]];
        reduce(n);
        equations_.emplace_back(n.begin(), n.end());
    }

    // Supporting halfspaces in the reduced coordinates.
    const std::size_t d = coords_.size();
    const std::size_t count = points_.size();
    std::vector<std::vector<i128>> reduced(count, std::vector<i128>(d));
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t j = 0; j < d; ++j) reduced[k][j] = points_[k][coords_[j]];

    std::set<std::pair<std::vector<i128>, i128>> seen;
    auto add = [&](std::vector<i128> normal, i128 offset) {
        std::vector<i128> key = normal;
        key.push_back(offset);
        reduce(key);
        offset = key.back();
        key.pop_back();
        if (!seen.emplace(key, offset).second) return;
        double norm = 0;
        for (i128 x : key) norm += static_cast<double>(x) * static_cast<double>(x);
        facets_.push_back({std::move(key), offset, std::sqrt(norm)});
    };
    auto consider = [&](std::vector<i128> normal, i128 offset) {
        bool le = true, ge = true;
        for (const auto& p : reduced) {
            i128 s = -offset;
            for (std::size_t j = 0; j < d; ++j) s += normal[j] * p[j];
            le = le && s <= 0;
            ge = ge && s >= 0;
            if (!le && !ge) return;
        }
        if (le) add(normal, offset);
        if (ge) {
            for (i128& x : normal) x = -x;
            add(std::move(normal), -offset);
        }
    };

    if (d == 1) {
        consider({1}, reduced.front()[0]);
        for (const auto& p : reduced) consider({1}, p[0]);
    } else if (d >= 2) {
        std::vector<std::size_t> pick(d);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            // Normal to the hyperplane through the picked points: cofactors
            // of the (d-1) x d matrix of differences.
            std::vector<std::vector<i128>> diff(d - 1, std::vector<i128>(d));
            for (std::size_t r = 1; r < d; ++r)
                for (std::size_t j = 0; j < d; ++j) diff[r - 1][j] = reduced[pick[r]][j] - reduced[pick[0]][j];
            std::vector<i128> normal(d);
            bool nonzero = false;
            for (std::size_t m = 0; m < d; ++m) {
                std::vector<std::vector<i128>> minor(d - 1);
                for (std::size_t r = 0; r + 1 < d; ++r)
                    for (std::size_t j = 0; j < d; ++j)
                        if (j != m) minor[r].push_back(diff[r][j]);
                normal[m] = (m % 2 == 0 ? 1 : -1) * determinant(std::move(minor));
                nonzero = nonzero || normal[m] != 0;
            }
            if (nonzero) {
                i128 offset = 0;
                for (std::size_t j = 0; j < d; ++j) offset += normal[j] * reduced[pick[0]][j];
                consider(std::move(normal), offset);
            }
            // Next combination.
            std::size_t i = d;
            while (i > 0 && pick[i - 1] == count - d + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

bool LatticeHull::contains(std::span<const std::int64_t> x, std::int64_t den) const {
    if (dim_ < 0) return false;
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    if (x.size() != ambient_) throw std::invalid_argument("point dimension mismatch");
    for (const auto& n : equations_) {
        i128 s = 0;
        for (std::size_t j = 0; j < ambient_; ++j) s += static_cast<i128>(n[j]) * (x[j] - static_cast<i128>(den) * base_[j]);
        if (s != 0) return false;
    }
    for (const auto& h : facets_) {
        i128 s = 0;
        for (std::size_t j = 0; j < coords_.size(); ++j) s += h.normal[j] * x[coords_[j]];
        if (s > h.offset * den) return false;
    }
    return true;
}

bool LatticeHull::contains_approx(std::span<const double> x, double tolerance) const {
    if (dim_ < 0) return false;
    if (x.size() != ambient_) throw std::invalid_argument("point dimension mismatch");
    for (const auto& n : equations_) {
        double s = 0, norm = 0;
        for (std::size_t j = 0; j < ambient_; ++j) {
            s += static_cast<double>(n[j]) * (x[j] - static_cast<double>(base_[j]));
            norm += static_cast<double>(n[j]) * static_cast<double>(n[j]);
        }
        if (std::abs(s) / std::sqrt(norm) > tolerance) return false;
    }
    for (const auto& h : facets_) {
        double s = -static_cast<double>(h.offset);
        for (std::size_t j = 0; j < coords_.size(); ++j) s += static_cast<double>(h.normal[j]) * x[coords_[j]];
        if (s / h.norm > tolerance) return false;
    }
    return true;
}

}  // namespace horn
