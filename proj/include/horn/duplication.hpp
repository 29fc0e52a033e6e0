#pragma once

#include <optional>

#include "horn/domino.hpp"

namespace horn {

/// Row-doubling injection. Row i of T becomes rows 2i-1 and 2i; each domino
/// labeled k, once stretched to double height, is cut into a top piece
/// labeled 2k-1 and a bottom piece labeled 2k:
///   - horizontal (row i, cols j, j+1) -> horizontal at row 2i-1 labeled
///     2k-1 and horizontal at row 2i labeled 2k;
///   - vertical (rows i, i+1, col j) -> vertical at rows 2i-1, 2i labeled
///     2k-1 and vertical at rows 2i+1, 2i+2 labeled 2k.
/// The result has shape doubled(shape(T)) and weight doubled(weight(T)), and
/// its reading word is T's word with every k replaced by (2k-1)(2k), so
/// Yamanouchi tableaux map to Yamanouchi tableaux.
DominoTableau duplicate(const DominoTableau& t);

/// duplicate() restricted to tableaux of shape tau(sigma_plus, sigma_minus)
/// = (2 sigma_1, ..., 2 sigma_2p). Throws ShapeError otherwise.
DominoTableau duplicate_from_sigma(const DominoTableau& t, const Partition& sigma);

/// The preimage under duplicate(), found by matching the row-pair pattern
/// directly; nullopt when `u` is not in the image.
std::optional<DominoTableau> undo_duplicate(const DominoTableau& u);

}  // namespace horn
