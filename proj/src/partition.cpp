#include "horn/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace horn {

namespace {

void check_partition(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition part " + std::to_string(i) + " is negative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

void check_increasing(const std::vector<int>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i] < 1)
            throw std::invalid_argument("increasing sequence terms must be >= 1");
        if (i + 1 < terms.size() && terms[i] >= terms[i + 1])
            throw std::invalid_argument("increasing sequence must be strictly increasing");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { check_partition(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { check_partition(parts_); }

std::int64_t Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::size_t Partition::nonzero_length() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

Partition Partition::trimmed() const {
    Partition out;
    out.parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(nonzero_length()));
    return out;
}

Partition Partition::padded(std::size_t length) const {
    if (nonzero_length() > length)
        throw ShapeError("cannot pad " + to_string(*this) + " to length " + std::to_string(length));
    Partition out;
    out.parts_.assign(length, 0);
    std::copy_n(parts_.begin(), std::min(length, parts_.size()), out.parts_.begin());
    return out;
}

bool Partition::contains(const Partition& inner) const noexcept {
    const std::size_t n = std::max(parts_.size(), inner.parts_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (inner[i] > (*this)[i]) return false;
    return true;
}

bool same_up_to_padding(const Partition& a, const Partition& b) noexcept {
    const std::size_t n = std::max(a.declared_length(), b.declared_length());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string to_string(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.declared_length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    out += ']';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

Partition parse_partition(std::string_view text, int max_part) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
    ++pos;
    std::vector<int> parts;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        for (;;) {
            skip_ws();
            const std::size_t start = pos;
            long long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > max_part) throw ParseError("part exceeds maximum " + std::to_string(max_part), start);
                ++pos;
            }
            if (pos == start) throw ParseError("expected a nonnegative integer", pos);
            if (!parts.empty() && value > parts.back())
                throw ParseError("parts must be weakly decreasing", start);
            parts.push_back(static_cast<int>(value));
            skip_ws();
            if (pos >= text.size()) throw ParseError("unterminated partition literal", pos);
            if (text[pos] == ']') {
                ++pos;
                break;
            }
            if (text[pos] != ',') throw ParseError("expected ',' or ']'", pos);
            ++pos;
        }
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    return Partition(std::move(parts));
}

IncreasingSequence::IncreasingSequence(std::initializer_list<int> terms) : terms_(terms) {
    check_increasing(terms_);
}

IncreasingSequence::IncreasingSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    check_increasing(terms_);
}

Partition lambda_of_sequence(const IncreasingSequence& seq) {
    const auto& t = seq.terms();
    const int r = static_cast<int>(t.size());
    std::vector<int> parts(t.size());
    for (int k = 0; k < r; ++k) parts[k] = t[r - 1 - k] - (r - k);
    return Partition(std::move(parts));
}

IncreasingSequence sequence_of_partition(const Partition& p) {
    const auto& parts = p.parts();
    const int r = static_cast<int>(parts.size());
    std::vector<int> terms(parts.size());
    for (int k = 1; k <= r; ++k) terms[k - 1] = parts[r - k] + k;
    return IncreasingSequence(std::move(terms));
}

IncreasingSequence tau_sequences(const IncreasingSequence& i, const IncreasingSequence& j) {
    if (i.size() != j.size())
        throw RankMismatch("tau needs sequences of equal length, got " + std::to_string(i.size()) +
                           " and " + std::to_string(j.size()));
    std::vector<int> odd, even, merged;
    for (int x : i.terms()) odd.push_back(2 * x - 1);
    for (int x : j.terms()) even.push_back(2 * x);
    std::merge(odd.begin(), odd.end(), even.begin(), even.end(), std::back_inserter(merged));
    return IncreasingSequence(std::move(merged));
}

Partition tau_partitions(const Partition& lambda, const Partition& mu) {
    if (lambda.declared_length() != mu.declared_length())
        throw RankMismatch("tau needs partitions of equal declared length, got " + to_string(lambda) +
                           " and " + to_string(mu));
    return lambda_of_sequence(tau_sequences(sequence_of_partition(lambda), sequence_of_partition(mu)));
}

std::pair<Partition, Partition> sigma_split(const Partition& sigma) {
    const auto& s = sigma.parts();
    if (s.size() % 2 != 0)
        throw ShapeError("sigma must have even declared length, got " + to_string(sigma));
    std::vector<int> minus, plus;
    for (std::size_t k = 0; k < s.size(); k += 2) {
        minus.push_back(s[k]);
        plus.push_back(s[k + 1]);
    }
    return {Partition(std::move(minus)), Partition(std::move(plus))};
}

Partition doubled(const Partition& nu) {
    std::vector<int> out;
    out.reserve(2 * nu.declared_length());
    for (int x : nu.parts()) {
        out.push_back(x);
        out.push_back(x);
    }
    return Partition(std::move(out));
}

namespace {

void partitions_rec(int remaining, int max_parts, int bound, std::vector<int>& cur,
                    std::vector<Partition>& out, std::size_t length) {
    if (remaining == 0) {
        std::vector<int> parts = cur;
        parts.resize(length, 0);
        out.emplace_back(std::move(parts));
        return;
    }
    if (max_parts == 0) return;
    for (int x = std::min(remaining, bound); x >= 1; --x) {
        if (static_cast<long long>(x) * max_parts < remaining) break;
        cur.push_back(x);
        partitions_rec(remaining - x, max_parts - 1, x, cur, out, length);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
    std::vector<Partition> out;
    if (n < 0 || max_parts < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, max_parts, max_part, cur, out, static_cast<std::size_t>(max_parts));
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int max_part) {
    std::vector<Partition> out;
    for (int n = 0; n <= rows * max_part; ++n) {
        auto layer = partitions_of(n, rows, max_part);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace horn
