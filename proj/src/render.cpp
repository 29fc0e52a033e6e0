#include "horn/render.hpp"

#include <sstream>

namespace horn {

namespace {

constexpr int kCell = 40;
constexpr int kBorder = 2;

// Identifier of the domino covering (row, col), 1-based; -1 outside.
int domino_id(const DominoTableau& t, int row, int col) {
    if (row < 1 || col < 1 || row > static_cast<int>(t.shape().declared_length()) || col > t.shape()[row - 1])
        return -1;
    const auto& ds = t.dominoes();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& d = ds[i];
        if ((d.row == row || d.second_row() == row) && (d.col == col || d.second_col() == col))
            return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

std::string render_ascii(const DominoTableau& t) {
    const int rows = static_cast<int>(t.shape().declared_length());
    const int cols = rows == 0 ? 0 : t.shape()[0];
    if (rows == 0 || cols == 0) return "";
    const int height = 2 * rows + 1, width = 4 * cols + 1;
    std::vector<std::string> canvas(height, std::string(width, ' '));

    auto boundary = [&](int r1, int c1, int r2, int c2) { return domino_id(t, r1, c1) != domino_id(t, r2, c2); };
    for (int r = 1; r <= rows + 1; ++r)
        for (int c = 1; c <= cols; ++c)
            if (boundary(r - 1, c, r, c))
                for (int k = 1; k <= 3; ++k) canvas[2 * (r - 1)][4 * (c - 1) + k] = '-';
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols + 1; ++c)
            if (boundary(r, c - 1, r, c)) canvas[2 * r - 1][4 * (c - 1)] = '|';
    for (int y = 0; y < height; y += 2)
        for (int x = 0; x < width; x += 4) {
            const bool left = x > 0 && canvas[y][x - 1] == '-';
            const bool right = x + 1 < width && canvas[y][x + 1] == '-';
            const bool up = y > 0 && canvas[y - 1][x] == '|';
            const bool down = y + 1 < height && canvas[y + 1][x] == '|';
            if ((left || right) && (up || down))
                canvas[y][x] = '+';
            else if (left || right)
                canvas[y][x] = '-';
            else if (up || down)
                canvas[y][x] = '|';
        }

    for (const auto& d : t.dominoes()) {
        const std::string label = std::to_string(d.label);
        int y = 2 * d.row - 1, x = 4 * (d.col - 1) + 2;
        if (d.orientation == Orientation::horizontal)
            x += 2;
        else
            y += 1;
        const int start = x - static_cast<int>(label.size() - 1) / 2;
        for (std::size_t k = 0; k < label.size(); ++k) canvas[y][start + static_cast<int>(k)] = label[k];
    }

    while (!canvas.empty() && canvas.back().find_first_not_of(' ') == std::string::npos) canvas.pop_back();
    std::string out;
    for (auto& line : canvas) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_svg(const DominoTableau& t) {
    const int rows = static_cast<int>(t.shape().declared_length());
    const int cols = rows == 0 ? 0 : t.shape()[0];
    const int width = cols * kCell + 2 * kBorder, height = rows * kCell + 2 * kBorder;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<g fill=\"white\" stroke=\"black\" stroke-width=\"" << kBorder << "\">\n";
    for (const auto& d : t.dominoes()) {
        const int w = (d.orientation == Orientation::horizontal ? 2 : 1) * kCell;
        const int h = (d.orientation == Orientation::vertical ? 2 : 1) * kCell;
        os << "<rect x=\"" << kBorder + (d.col - 1) * kCell << "\" y=\"" << kBorder + (d.row - 1) * kCell
           << "\" width=\"" << w << "\" height=\"" << h << "\"/>\n";
    }
    os << "</g>\n"
       << "<g font-family=\"sans-serif\" font-size=\"20\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
    for (const auto& d : t.dominoes()) {
        const int w = (d.orientation == Orientation::horizontal ? 2 : 1) * kCell;
        const int h = (d.orientation == Orientation::vertical ? 2 : 1) * kCell;
        os << "<text x=\"" << kBorder + (d.col - 1) * kCell + w / 2 << "\" y=\""
           << kBorder + (d.row - 1) * kCell + h / 2 << "\">" << d.label << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace horn
