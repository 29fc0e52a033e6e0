#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "horn/errors.hpp"

namespace horn {

/// Upper bound on parts accepted from user input (CLI literals, config).
inline constexpr int kDefaultMaxPart = 64;

/// A weakly decreasing sequence of nonnegative integers with a declared
/// length. Trailing zeros are part of the value: (5,3,2,0) and (5,3,2) are
/// different partitions with the same weight. Use `trimmed()` or
/// `same_up_to_padding()` when zeros should not matter.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t declared_length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); zero past the declared length.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    std::int64_t weight() const noexcept;
    /// Number of nonzero parts.
    std::size_t nonzero_length() const noexcept;

    Partition trimmed() const;
    /// Zero-padded to `length`. Throws ShapeError if a nonzero part would be cut.
    Partition padded(std::size_t length) const;

    /// Young-diagram containment, ignoring padding.
    bool contains(const Partition& inner) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

bool same_up_to_padding(const Partition& a, const Partition& b) noexcept;

/// "[5,3,2,0]"; the empty partition is "[]".
std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses the bracketed literal. Whitespace around tokens is allowed.
/// Throws ParseError (with offset) on malformed text, non-decreasing input
/// or parts above `max_part`.
Partition parse_partition(std::string_view text, int max_part = kDefaultMaxPart);

/// Strictly increasing sequence of positive integers i1 < i2 < ... < ir.
class IncreasingSequence {
public:
    IncreasingSequence() = default;
    IncreasingSequence(std::initializer_list<int> terms);
    explicit IncreasingSequence(std::vector<int> terms);

    const std::vector<int>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    friend bool operator==(const IncreasingSequence&, const IncreasingSequence&) = default;

private:
    std::vector<int> terms_;
};

/// (i_r - r, i_{r-1} - (r-1), ..., i_1 - 1).
Partition lambda_of_sequence(const IncreasingSequence& seq);
/// Inverse of lambda_of_sequence: i_k = part_{r+1-k} + k.
IncreasingSequence sequence_of_partition(const Partition& p);

/// (2i_1-1, ..., 2i_r-1) merged with (2j_1, ..., 2j_r). Throws RankMismatch.
IncreasingSequence tau_sequences(const IncreasingSequence& i, const IncreasingSequence& j);
/// tau transported to partitions; result has declared length 2r.
Partition tau_partitions(const Partition& lambda, const Partition& mu);

/// (sigma_minus, sigma_plus) = (odd-indexed parts, even-indexed parts), 1-based.
/// Throws ShapeError on odd declared length.
std::pair<Partition, Partition> sigma_split(const Partition& sigma);

/// Each part repeated twice.
Partition doubled(const Partition& nu);

/// All partitions of `n` with at most `max_parts` parts, each part at most
/// `max_part`, zero-padded to declared length `max_parts`. Reverse
/// lexicographic order (largest first part first).
std::vector<Partition> partitions_of(int n, int max_parts, int max_part);

/// All partitions fitting in a `rows` x `max_part` box, every weight,
/// declared length `rows`.
std::vector<Partition> partitions_in_box(int rows, int max_part);

}  // namespace horn
