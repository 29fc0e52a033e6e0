#include "horn/duplication.hpp"

#include <map>
#include <utility>

namespace horn {

DominoTableau duplicate(const DominoTableau& t) {
    std::vector<Domino> out;
    out.reserve(2 * t.dominoes().size());
    for (const auto& d : t.dominoes()) {
        const int top = 2 * d.row - 1;
        if (d.orientation == Orientation::horizontal) {
            out.push_back({top, d.col, Orientation::horizontal, 2 * d.label - 1});
            out.push_back({top + 1, d.col, Orientation::horizontal, 2 * d.label});
        } else {
            out.push_back({top, d.col, Orientation::vertical, 2 * d.label - 1});
            out.push_back({top + 2, d.col, Orientation::vertical, 2 * d.label});
        }
    }
    return DominoTableau(doubled(t.shape()), std::move(out));
}

DominoTableau duplicate_from_sigma(const DominoTableau& t, const Partition& sigma) {
    const auto [minus, plus] = sigma_split(sigma);
    const Partition expected = tau_partitions(plus, minus);
    if (t.shape() != expected)
        throw ShapeError("tableau shape " + to_string(t.shape()) + " is not tau(sigma+, sigma-) = " +
                         to_string(expected));
    return duplicate(t);
}

std::optional<DominoTableau> undo_duplicate(const DominoTableau& u) {
    const auto& parts = u.shape().parts();
    if (parts.size() % 2 != 0) return std::nullopt;
    std::vector<int> half_shape;
    for (std::size_t i = 0; i < parts.size(); i += 2) {
        if (parts[i] != parts[i + 1]) return std::nullopt;
        half_shape.push_back(parts[i]);
    }

    std::map<std::pair<int, int>, const Domino*> at;
    for (const auto& d : u.dominoes()) at[{d.row, d.col}] = &d;

    std::vector<Domino> original;
    std::size_t consumed = 0;
    for (const auto& d : u.dominoes()) {
        // Only top pieces (odd row, odd label) start a match.
        if (d.row % 2 == 0 || d.label % 2 == 0) continue;
        const int partner_row = d.orientation == Orientation::horizontal ? d.row + 1 : d.row + 2;
        auto it = at.find({partner_row, d.col});
        if (it == at.end()) return std::nullopt;
        const Domino& partner = *it->second;
        if (partner.orientation != d.orientation || partner.label != d.label + 1) return std::nullopt;
        original.push_back({(d.row + 1) / 2, d.col, d.orientation, (d.label + 1) / 2});
        consumed += 2;
    }
    if (consumed != u.dominoes().size()) return std::nullopt;

    try {
        DominoTableau t(Partition(std::move(half_shape)), std::move(original));
        if (duplicate(t) != u) return std::nullopt;
        return t;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace horn
