#pragma once

#include <string>

#include "horn/domino.hpp"

namespace horn {

/// Box drawing with '+', '-' and '|'; only domino boundaries are drawn and
/// each label sits at the centre of its domino. Rows run top to bottom.
std::string render_ascii(const DominoTableau& t);

/// Standalone SVG 1.1 document: 40-unit cells, one outlined rectangle
/// (stroke width 2) per domino with its label centred, elements emitted in
/// (row, col) order.
std::string render_svg(const DominoTableau& t);

}  // namespace horn
