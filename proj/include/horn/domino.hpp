#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "horn/partition.hpp"

namespace horn {

enum class Orientation : std::uint8_t { horizontal, vertical };

/// A 1x2 (horizontal) or 2x1 (vertical) block. `row` and `col` locate the
/// top-left cell, 1-based, rows counted from the top.
struct Domino {
    int row = 1;
    int col = 1;
    Orientation orientation = Orientation::horizontal;
    int label = 1;

    int second_row() const noexcept { return orientation == Orientation::vertical ? row + 1 : row; }
    int second_col() const noexcept { return orientation == Orientation::horizontal ? col + 1 : col; }

    friend bool operator==(const Domino&, const Domino&) = default;
    friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// Which half of its domino a cell is.
enum class Half : std::uint8_t { left, right, top, bottom };

/// A semistandard domino tableau. Construction validates the tiling and the
/// ordering rules, so every instance is a valid tableau:
///   - the dominoes tile the diagram of `shape` exactly;
///   - cell labels weakly increase along rows;
///   - down a column, cells of different dominoes strictly increase.
/// Dominoes are stored sorted by (row, col).
class DominoTableau {
public:
    DominoTableau(Partition shape, std::vector<Domino> dominoes);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<Domino>& dominoes() const noexcept { return dominoes_; }

    /// Label of cell (row, col), 1-based. Cell must lie in the diagram.
    int label_at(int row, int col) const;
    Half half_at(int row, int col) const;

    /// Number of dominoes with label i+1 at index i; no trailing zeros.
    std::vector<int> weight() const;

    /// Row-major cell labels then row-major halves; canonical sort key.
    std::vector<int> canonical_key() const;

    friend bool operator==(const DominoTableau& a, const DominoTableau& b) {
        return a.shape_ == b.shape_ && a.dominoes_ == b.dominoes_;
    }
    friend bool operator<(const DominoTableau& a, const DominoTableau& b) {
        return a.canonical_key() < b.canonical_key();
    }

private:
    std::size_t cell_index(int row, int col) const;

    Partition shape_;
    std::vector<Domino> dominoes_;
    std::vector<int> row_offset_;
    std::vector<int> cell_label_;
    std::vector<Half> cell_half_;
};

/// Labels of a tableau in reading order.
using ReadingWord = std::vector<int>;

/// True iff the diagram of `shape` can be tiled by dominoes (empty 2-core).
bool is_domino_decomposable(const Partition& shape);

/// Columns right to left, each column top to bottom. A vertical domino is
/// read at its top cell; a horizontal domino is skipped in its right column
/// and read in its left column.
ReadingWord reading_word(const DominoTableau& t);

/// Every prefix has count(i) >= count(i+1) for all i.
bool is_yamanouchi(const ReadingWord& w);

struct EnumerateOptions {
    /// Keep only Yamanouchi tableaux. The search prunes as soon as two
    /// consecutive label layers violate the prefix condition, which gives
    /// the same list as filtering the full enumeration.
    bool yamanouchi_only = false;
};

/// All semistandard domino tableaux of `shape` whose label-i count equals
/// weight_i, sorted by canonical_key. Empty if |shape| != 2|weight|.
std::vector<DominoTableau> enumerate_domino_tableaux(const Partition& shape, const Partition& weight,
                                                     EnumerateOptions options = {});

/// Number of Yamanouchi domino tableaux of `shape` and `weight`, counted
/// without materializing them.
std::uint64_t count_yamanouchi_tableaux(const Partition& shape, const Partition& weight);

/// Number of Yamanouchi domino tableaux of shape tau(lambda, mu) and weight
/// nu. lambda and mu must share a declared length (RankMismatch otherwise).
std::uint64_t cl_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Text form: one line per row of the declared shape (zero rows give empty
/// lines), cells separated by one space, each cell "<label><marker>" with
/// marker '<' left half, '>' right half, '^' top half, 'v' bottom half.
/// Example, shape (2,1,1):
///     1< 1>
///     2^
///     2v
std::string serialize(const DominoTableau& t);
/// Inverse of serialize. Throws ParseError on malformed text and
/// std::invalid_argument if the result is not a valid tableau.
DominoTableau deserialize(std::string_view text);

std::string to_string(const ReadingWord& w);

}  // namespace horn
