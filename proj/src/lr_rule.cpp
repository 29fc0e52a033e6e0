#include "horn/lr_rule.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace horn {

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner))
        throw ShapeError(to_string(inner) + " does not fit inside " + to_string(outer));
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

class LRSearch {
public:
    LRSearch(const Partition& lambda, const Partition& mu, const Partition& nu, bool first_only)
        : first_only_(first_only) {
        const auto outer = nu.trimmed();
        rows_ = outer.declared_length();
        for (std::size_t i = 0; i < rows_; ++i) {
            outer_.push_back(outer[i]);
            inner_.push_back(lambda[i]);
        }
        const auto content = mu.trimmed();
        content_ = content.parts();
        labels_ = static_cast<int>(content_.size());
    }

    std::uint64_t run() {
        std::vector<int> counts(labels_ + 1, 0);
        std::vector<int> above;  // labels of the previous row, indexed by column; 0 = not skew
        return row(0, counts, above);
    }

private:
    // Fills row `r` right to left then recurses into row r+1.
    std::uint64_t row(std::size_t r, std::vector<int>& counts, const std::vector<int>& above) {
        if (r == rows_) return 1;
        Key key{r, counts, above};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<int> current(outer_[r], 0);
        std::uint64_t total = 0;
        cell(r, outer_[r] - 1, labels_, counts, above, current, total);
        memo_.emplace(std::move(key), total);
        return total;
    }

    void cell(std::size_t r, int col, int hi, std::vector<int>& counts, const std::vector<int>& above,
              std::vector<int>& current, std::uint64_t& total) {
        if (first_only_ && total > 0) return;
        if (col < inner_[r]) {
            // Only columns at or beyond inner_[r+1] matter to the next row.
            std::vector<int> next_above(current);
            const int keep_from = r + 1 < rows_ ? inner_[r + 1] : outer_[r];
            for (int c = 0; c < keep_from && c < static_cast<int>(next_above.size()); ++c) next_above[c] = 0;
            total = checked_add(total, row(r + 1, counts, next_above));
            return;
        }
        int lo = 1;
        if (col < static_cast<int>(above.size()) && above[col] > 0) lo = above[col] + 1;
        for (int label = lo; label <= hi; ++label) {
            if (counts[label] >= content_[label - 1]) continue;
            if (label > 1 && counts[label] + 1 > counts[label - 1]) continue;
            ++counts[label];
            current[col] = label;
            cell(r, col - 1, label, counts, above, current, total);
            current[col] = 0;
            --counts[label];
            if (first_only_ && total > 0) return;
        }
    }

    struct Key {
        std::size_t row;
        std::vector<int> counts;
        std::vector<int> above;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    bool first_only_;
    std::size_t rows_ = 0;
    std::vector<int> outer_, inner_, content_;
    int labels_ = 0;
    std::map<Key, std::uint64_t> memo_;
};

bool admissible(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return nu.weight() == lambda.weight() + mu.weight() && nu.contains(lambda) && nu.contains(mu);
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!admissible(lambda, mu, nu)) return 0;
    return LRSearch(lambda, mu, nu, false).run();
}

bool lr_nonzero(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!admissible(lambda, mu, nu)) return false;
    return LRSearch(lambda, mu, nu, true).run() > 0;
}

}  // namespace horn
