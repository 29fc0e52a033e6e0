#include "horn/domino.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace horn {

// ---------------------------------------------------------------------------
// DominoTableau

DominoTableau::DominoTableau(Partition shape, std::vector<Domino> dominoes)
    : shape_(std::move(shape)), dominoes_(std::move(dominoes)) {
    std::sort(dominoes_.begin(), dominoes_.end(),
              [](const Domino& a, const Domino& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });

    const int rows = static_cast<int>(shape_.declared_length());
    row_offset_.assign(rows + 1, 0);
    for (int r = 0; r < rows; ++r) row_offset_[r + 1] = row_offset_[r] + shape_.parts()[r];
    const std::size_t cells = static_cast<std::size_t>(row_offset_[rows]);
    if (2 * dominoes_.size() != cells)
        throw std::invalid_argument("domino count does not match the shape's cell count");

    cell_label_.assign(cells, 0);
    cell_half_.assign(cells, Half::left);
    auto inside = [&](int r, int c) { return r >= 1 && r <= rows && c >= 1 && c <= shape_[r - 1]; };
    auto place = [&](int r, int c, int label, Half half) {
        if (!inside(r, c))
            throw std::invalid_argument("domino cell (" + std::to_string(r) + "," + std::to_string(c) +
                                        ") lies outside the diagram");
        auto& slot = cell_label_[cell_index(r, c)];
        if (slot != 0) throw std::invalid_argument("dominoes overlap");
        slot = label;
        cell_half_[cell_index(r, c)] = half;
    };
    for (const auto& d : dominoes_) {
        if (d.label < 1) throw std::invalid_argument("domino labels must be positive");
        if (d.orientation == Orientation::horizontal) {
            place(d.row, d.col, d.label, Half::left);
            place(d.row, d.col + 1, d.label, Half::right);
        } else {
            place(d.row, d.col, d.label, Half::top);
            place(d.row + 1, d.col, d.label, Half::bottom);
        }
    }
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= shape_[r - 1]; ++c) {
            const int here = label_at(r, c);
            if (c < shape_[r - 1] && here > label_at(r, c + 1))
                throw std::invalid_argument("labels must weakly increase along rows");
            if (r < rows && c <= shape_[r]) {
                const bool same = half_at(r, c) == Half::top;
                const int below = label_at(r + 1, c);
                if (!same && here >= below)
                    throw std::invalid_argument("labels must strictly increase down columns");
            }
        }
    }
}

std::size_t DominoTableau::cell_index(int row, int col) const {
    return static_cast<std::size_t>(row_offset_[row - 1] + col - 1);
}

int DominoTableau::label_at(int row, int col) const { return cell_label_.at(cell_index(row, col)); }

Half DominoTableau::half_at(int row, int col) const { return cell_half_.at(cell_index(row, col)); }

std::vector<int> DominoTableau::weight() const {
    std::vector<int> w;
    for (const auto& d : dominoes_) {
        if (static_cast<int>(w.size()) < d.label) w.resize(d.label, 0);
        ++w[d.label - 1];
    }
    return w;
}

std::vector<int> DominoTableau::canonical_key() const {
    std::vector<int> key(cell_label_);
    for (Half h : cell_half_) key.push_back(static_cast<int>(h));
    return key;
}

// ---------------------------------------------------------------------------
// Shapes, words

bool is_domino_decomposable(const Partition& shape) {
    // Beta numbers on an even number of beads; the 2-core is empty iff the
    // beads split evenly between the two runners.
    const std::size_t len = shape.declared_length() + shape.declared_length() % 2;
    std::size_t odd = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const std::int64_t beta = shape[i] + static_cast<std::int64_t>(len - 1 - i);
        odd += static_cast<std::size_t>(beta % 2);
    }
    return 2 * odd == len;
}

namespace {

// Reading order: column descending, then row ascending, on the domino's
// top-left cell.
bool reads_before(int row_a, int col_a, int row_b, int col_b) {
    return col_a != col_b ? col_a > col_b : row_a < row_b;
}

}  // namespace

ReadingWord reading_word(const DominoTableau& t) {
    std::vector<Domino> ds = t.dominoes();
    std::sort(ds.begin(), ds.end(),
              [](const Domino& a, const Domino& b) { return reads_before(a.row, a.col, b.row, b.col); });
    ReadingWord w;
    w.reserve(ds.size());
    for (const auto& d : ds) w.push_back(d.label);
    return w;
}

bool is_yamanouchi(const ReadingWord& w) {
    std::vector<int> count;
    for (int x : w) {
        if (x < 1) return false;
        if (static_cast<int>(count.size()) <= x) count.resize(x + 1, 0);
        ++count[x];
        if (x > 1 && count[x] > count[x - 1]) return false;
    }
    return true;
}

std::string to_string(const ReadingWord& w) {
    std::string out;
    bool wide = std::any_of(w.begin(), w.end(), [](int x) { return x > 9; });
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration
//
// Cells with label <= k form a partition s_k, so a tableau is a chain
// s_0 = 0 < s_1 < ... < s_n = shape. In the layer s_k / s_{k-1} two cells in
// one column must be one vertical domino (strictness across dominoes), so a
// column holds at most two layer cells, and the remaining single cells of a
// row form one run that must be tiled by horizontal dominoes. The tiling of
// a layer is therefore unique when it exists, and the search is over chains
// of shapes.

namespace {

using Shape = std::vector<int>;

struct LayerDomino {
    int row;  // 0-based top-left cell
    int col;
    Orientation orientation;
};

// Dominoes of the layer next/cur, in reading order.
std::vector<LayerDomino> layer_dominoes(const Shape& cur, const Shape& next) {
    const int rows = static_cast<int>(cur.size());
    std::vector<LayerDomino> out;
    for (int i = 0; i < rows; ++i) {
        const int next_below = i + 1 < rows ? next[i + 1] : 0;
        const int cur_above = i > 0 ? cur[i - 1] : std::numeric_limits<int>::max();
        for (int c = cur[i]; c < next_below; ++c) out.push_back({i, c, Orientation::vertical});
        const int run_begin = std::max(cur[i], next_below);
        const int run_end = std::min(next[i], cur_above);
        for (int c = run_begin; c < run_end; c += 2)
            out.push_back({i, c, Orientation::horizontal});
    }
    std::sort(out.begin(), out.end(),
              [](const LayerDomino& a, const LayerDomino& b) { return reads_before(a.row, a.col, b.row, b.col); });
    return out;
}

// Prefix condition for the pair (earlier label, later label).
bool pair_lattice(const std::vector<LayerDomino>& earlier, const std::vector<LayerDomino>& later) {
    std::size_t a = 0, b = 0;
    while (b < later.size()) {
        if (a < earlier.size() &&
            reads_before(earlier[a].row, earlier[a].col, later[b].row, later[b].col)) {
            ++a;
        } else {
            ++b;
            if (b > a) return false;
        }
    }
    return true;
}

class ChainSearch {
public:
    ChainSearch(const Partition& shape, const Partition& weight)
        : target_(shape.parts()), weight_(weight.trimmed().parts()) {}

    // Valid layer tops `next` over `cur` with exactly `dominoes` dominoes.
    const std::vector<Shape>& transitions(const Shape& cur, int dominoes) {
        auto key = std::make_pair(cur, dominoes);
        if (auto it = transitions_.find(key); it != transitions_.end()) return it->second;
        std::vector<Shape> out;
        Shape next(cur.size(), 0);
        extend(cur, next, 0, 2 * dominoes, out);
        return transitions_.emplace(std::move(key), std::move(out)).first->second;
    }

    const Shape& target() const { return target_; }
    const std::vector<int>& weight() const { return weight_; }

private:
    static int run_length(const Shape& cur, const Shape& next, std::size_t i) {
        const int next_below = i + 1 < cur.size() ? next[i + 1] : 0;
        const int cur_above = i > 0 ? cur[i - 1] : std::numeric_limits<int>::max();
        return std::min(next[i], cur_above) - std::max(cur[i], next_below);
    }

    void extend(const Shape& cur, Shape& next, std::size_t i, int remaining, std::vector<Shape>& out) {
        const std::size_t rows = cur.size();
        if (i == rows) {
            if (remaining == 0 && (rows == 0 || run_length(cur, next, rows - 1) % 2 == 0)) out.push_back(next);
            return;
        }
        int hi = std::min(target_[i], cur[i] + remaining);
        if (i > 0) hi = std::min(hi, next[i - 1]);
        if (i >= 2) hi = std::min(hi, cur[i - 2]);
        for (int v = hi; v >= cur[i]; --v) {
            next[i] = v;
            if (i > 0 && run_length(cur, next, i - 1) % 2 != 0) continue;
            extend(cur, next, i + 1, remaining - (v - cur[i]), out);
        }
        next[i] = cur[i];
    }

    Shape target_;
    std::vector<int> weight_;
    std::map<std::pair<Shape, int>, std::vector<Shape>> transitions_;
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("tableau count overflow");
    return r;
}

bool sizes_match(const Partition& shape, const Partition& weight) {
    return shape.weight() == 2 * weight.weight();
}

}  // namespace

std::vector<DominoTableau> enumerate_domino_tableaux(const Partition& shape, const Partition& weight,
                                                     EnumerateOptions options) {
    std::vector<DominoTableau> result;
    if (!sizes_match(shape, weight)) return result;

    ChainSearch search(shape, weight);
    const auto& w = search.weight();
    const std::size_t labels = w.size();
    std::vector<Shape> chain{Shape(shape.declared_length(), 0)};
    std::vector<std::vector<LayerDomino>> layers;

    auto emit = [&] {
        std::vector<Domino> ds;
        for (std::size_t k = 0; k < layers.size(); ++k)
            for (const auto& d : layers[k])
                ds.push_back({d.row + 1, d.col + 1, d.orientation, static_cast<int>(k + 1)});
        result.emplace_back(shape, std::move(ds));
    };

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == labels) {
            if (chain.back() == search.target()) emit();
            return;
        }
        // Copy: transitions() may rehash the cache during recursion.
        const std::vector<Shape> nexts = search.transitions(chain.back(), w[k]);
        for (const auto& next : nexts) {
            auto layer = layer_dominoes(chain.back(), next);
            if (options.yamanouchi_only && k > 0 && !pair_lattice(layers.back(), layer)) continue;
            chain.push_back(next);
            layers.push_back(std::move(layer));
            self(self, k + 1);
            layers.pop_back();
            chain.pop_back();
        }
    };
    rec(rec, 0);

    std::sort(result.begin(), result.end());
    return result;
}

std::uint64_t count_yamanouchi_tableaux(const Partition& shape, const Partition& weight) {
    if (!sizes_match(shape, weight)) return 0;
    ChainSearch search(shape, weight);
    const auto& w = search.weight();
    const std::size_t labels = w.size();
    if (labels == 0) return 1;  // sizes match, so the shape is empty

    // After layer k the future depends only on (k, s_{k-1}, s_k).
    std::map<std::tuple<std::size_t, Shape, Shape>, std::uint64_t> memo;
    auto rec = [&](auto&& self, std::size_t k, const Shape& prev, const Shape& cur) -> std::uint64_t {
        if (k == labels) return cur == search.target() ? 1 : 0;
        auto key = std::make_tuple(k, prev, cur);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const auto last = layer_dominoes(prev, cur);
        const std::vector<Shape> nexts = search.transitions(cur, w[k]);
        std::uint64_t total = 0;
        for (const auto& next : nexts) {
            if (!pair_lattice(last, layer_dominoes(cur, next))) continue;
            total = checked_add(total, self(self, k + 1, cur, next));
        }
        memo.emplace(std::move(key), total);
        return total;
    };

    const Shape empty(shape.declared_length(), 0);
    std::uint64_t total = 0;
    const std::vector<Shape> firsts = search.transitions(empty, w[0]);
    for (const auto& first : firsts) total = checked_add(total, rec(rec, 1, empty, first));
    return total;
}

std::uint64_t cl_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return count_yamanouchi_tableaux(tau_partitions(lambda, mu), nu);
}

// ---------------------------------------------------------------------------
// Text form

std::string serialize(const DominoTableau& t) {
    std::string out;
    const auto& shape = t.shape();
    for (std::size_t r = 1; r <= shape.declared_length(); ++r) {
        for (int c = 1; c <= shape[r - 1]; ++c) {
            if (c > 1) out += ' ';
            out += std::to_string(t.label_at(static_cast<int>(r), c));
            switch (t.half_at(static_cast<int>(r), c)) {
                case Half::left: out += '<'; break;
                case Half::right: out += '>'; break;
                case Half::top: out += '^'; break;
                case Half::bottom: out += 'v'; break;
            }
        }
        out += '\n';
    }
    return out;
}

DominoTableau deserialize(std::string_view text) {
    struct Cell {
        int label;
        char marker;
    };
    std::vector<std::vector<Cell>> rows;
    std::vector<std::size_t> row_start;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        row_start.push_back(pos);
        std::vector<Cell> row;
        std::size_t p = pos;
        while (p < eol) {
            if (text[p] == ' ' || text[p] == '\r') {
                ++p;
                continue;
            }
            const std::size_t start = p;
            int label = 0;
            while (p < eol && std::isdigit(static_cast<unsigned char>(text[p]))) {
                label = label * 10 + (text[p] - '0');
                if (label > 1'000'000) throw ParseError("label too large", start);
                ++p;
            }
            if (p == start) throw ParseError("expected a label", p);
            if (p >= eol || std::string_view("<>^v").find(text[p]) == std::string_view::npos)
                throw ParseError("expected one of '<', '>', '^', 'v'", p);
            row.push_back({label, text[p]});
            ++p;
        }
        rows.push_back(std::move(row));
        pos = eol + 1;
    }

    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    for (std::size_t r = 1; r < parts.size(); ++r)
        if (parts[r] > parts[r - 1]) throw ParseError("row lengths must weakly decrease", row_start[r]);
    Partition shape(parts);

    std::vector<Domino> ds;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const auto& cell = rows[r][c];
            const int row1 = static_cast<int>(r) + 1, col1 = static_cast<int>(c) + 1;
            if (cell.marker == '<') {
                if (c + 1 >= rows[r].size() || rows[r][c + 1].marker != '>' || rows[r][c + 1].label != cell.label)
                    throw ParseError("left half without matching right half", row_start[r]);
                ds.push_back({row1, col1, Orientation::horizontal, cell.label});
            } else if (cell.marker == '^') {
                if (r + 1 >= rows.size() || c >= rows[r + 1].size() || rows[r + 1][c].marker != 'v' ||
                    rows[r + 1][c].label != cell.label)
                    throw ParseError("top half without matching bottom half", row_start[r]);
                ds.push_back({row1, col1, Orientation::vertical, cell.label});
            } else if (cell.marker == '>') {
                if (c == 0 || rows[r][c - 1].marker != '<')
                    throw ParseError("right half without matching left half", row_start[r]);
            } else {
                if (r == 0 || c >= rows[r - 1].size() || rows[r - 1][c].marker != '^')
                    throw ParseError("bottom half without matching top half", row_start[r]);
            }
        }
    }
    return DominoTableau(std::move(shape), std::move(ds));
}

}  // namespace horn
