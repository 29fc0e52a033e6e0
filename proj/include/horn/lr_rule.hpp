#pragma once

#include <cstdint>

#include "horn/partition.hpp"

namespace horn {

/// Skew shape outer/inner; inner must fit inside outer.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer, Partition inner);
    std::int64_t size() const noexcept { return outer.weight() - inner.weight(); }
};

/// Littlewood-Richardson coefficient c^nu_{lambda mu} by the classical rule:
/// the number of semistandard fillings of nu/lambda with content mu whose
/// reading word is a lattice word.
///
/// Reading convention: rows top to bottom, each row right to left. Cells are
/// filled in that same order, so the lattice condition is checked on every
/// prefix as the search goes. Partial results are memoized at row
/// boundaries on (row, content so far, labels of the finished row).
///
/// Declared lengths are irrelevant here; trailing zeros are ignored.
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// lr_coefficient > 0, stopping at the first filling found.
bool lr_nonzero(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace horn
