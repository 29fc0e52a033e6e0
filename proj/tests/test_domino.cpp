#include <doctest.h>

#include <set>

#include "horn/domino.hpp"
#include "horn/lr_rule.hpp"
#include "oracles.hpp"

using namespace horn;

namespace {

std::vector<int> key_of(const Partition& shape, const std::vector<oracle::Piece>& pieces) {
    std::vector<Domino> ds;
    for (const auto& p : pieces)
        ds.push_back({p.r1 + 1, p.c1 + 1, p.r1 == p.r2 ? Orientation::horizontal : Orientation::vertical, p.label});
    return DominoTableau(shape, ds).canonical_key();
}

bool yamanouchi_full(const ReadingWord& w) {
    // every pair (i, j) with i < j, not just neighbours
    int top = 0;
    for (int x : w) top = std::max(top, x);
    std::vector<int> count(top + 1, 0);
    for (int x : w) {
        ++count[x];
        for (int i = 1; i < x; ++i)
            if (count[i] < count[x]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("domino decomposability against brute-force tiling") {
    for (int rows = 0; rows <= 4; ++rows)
        for (const auto& shape : partitions_in_box(rows, 5))
            CHECK(is_domino_decomposable(shape) == oracle::domino_tileable(shape.parts()));
}

TEST_CASE("enumeration against brute force") {
    const std::vector<std::pair<Partition, Partition>> cases{
        {{2}, {1}},          {{2, 2}, {1, 1}},       {{2, 2}, {2}},           {{4, 2}, {2, 1}},
        {{4, 2}, {1, 1, 1}}, {{3, 3, 2}, {2, 1, 1}}, {{4, 4, 2, 2}, {3, 2, 1}}, {{6, 4, 2}, {3, 2, 1}},
        {{6, 2, 2}, {2, 2, 1}}, {{4, 3, 1}, {2, 2}},  {{5, 3, 2}, {2, 2, 1}},   {{3, 3}, {2, 1}},
    };
    for (const auto& [shape, weight] : cases) {
        const auto brute = oracle::domino_tableaux(shape.parts(), weight.parts());
        std::set<std::vector<int>> want, want_yam;
        for (const auto& t : brute) {
            want.insert(key_of(shape, t));
            if (oracle::lattice(oracle::reading_word(shape.parts(), t))) want_yam.insert(key_of(shape, t));
        }
        const auto all = enumerate_domino_tableaux(shape, weight);
        const auto yam = enumerate_domino_tableaux(shape, weight, {.yamanouchi_only = true});
        std::set<std::vector<int>> got, got_yam;
        for (const auto& t : all) got.insert(t.canonical_key());
        for (const auto& t : yam) got_yam.insert(t.canonical_key());
        CHECK(got.size() == all.size());
        CHECK(got == want);
        CHECK(got_yam == want_yam);
        CHECK(count_yamanouchi_tableaux(shape, weight) == yam.size());
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    }
}

TEST_CASE("reading word against the cell-level definition") {
    const auto brute = oracle::domino_tableaux({6, 4, 4, 2}, {3, 3, 2});
    REQUIRE(brute.size() > 10);
    for (const auto& t : brute) {
        const Partition shape{6, 4, 4, 2};
        std::vector<Domino> ds;
        for (const auto& p : t)
            ds.push_back({p.r1 + 1, p.c1 + 1, p.r1 == p.r2 ? Orientation::horizontal : Orientation::vertical, p.label});
        CHECK(reading_word(DominoTableau(shape, ds)) == oracle::reading_word(shape.parts(), t));
    }
}

TEST_CASE("pruned Yamanouchi listing equals the filtered full listing") {
    for (const auto& shape : partitions_in_box(4, 6)) {
        if (!is_domino_decomposable(shape) || shape.weight() > 14) continue;
        const int n = static_cast<int>(shape.weight() / 2);
        for (const auto& weight : partitions_of(n, 3, n)) {
            std::vector<std::vector<int>> filtered;
            for (const auto& t : enumerate_domino_tableaux(shape, weight))
                if (is_yamanouchi(reading_word(t))) filtered.push_back(t.canonical_key());
            std::vector<std::vector<int>> pruned;
            for (const auto& t : enumerate_domino_tableaux(shape, weight, {.yamanouchi_only = true}))
                pruned.push_back(t.canonical_key());
            CHECK(pruned == filtered);
        }
    }
}

TEST_CASE("adjacent-label Yamanouchi check agrees with the all-pairs check") {
    std::uniform_int_distribution<int> len(0, 12), label(1, 4);
    for (int i = 0; i < 5000; ++i) {
        ReadingWord w(len(oracle::rng()));
        for (int& x : w) x = label(oracle::rng());
        CHECK(is_yamanouchi(w) == yamanouchi_full(w));
    }
    CHECK(is_yamanouchi({}));
    CHECK_FALSE(is_yamanouchi({2, 1}));
}

TEST_CASE("domino count equals the classical coefficient on small cases") {
    for (int r = 1; r <= 2; ++r)
        for (const auto& l : partitions_in_box(r, 3))
            for (const auto& m : partitions_in_box(r, 3)) {
                const int n = static_cast<int>(l.weight() + m.weight());
                for (const auto& nu : partitions_of(n, n, n)) CHECK(cl_coefficient(l, m, nu) == lr_coefficient(l, m, nu));
            }
    CHECK_THROWS_AS(cl_coefficient(Partition{1}, Partition{1, 0}, Partition{2}), RankMismatch);
}

TEST_CASE("tableaux of shape (10,6,4,0) with two labels") {
    const Partition shape{10, 6, 4, 0};
    std::map<std::vector<int>, std::vector<std::string>> words;
    for (const auto& nu : partitions_of(10, 2, 10))
        for (const auto& t : enumerate_domino_tableaux(shape, nu, {.yamanouchi_only = true}))
            words[t.weight()].push_back(to_string(reading_word(t)));
    const std::map<std::vector<int>, std::vector<std::string>> expected{
        {{5, 5}, {"1112212212"}},
        {{6, 4}, {"1112212112"}},
        {{7, 3}, {"1112112112"}},
        {{8, 2}, {"1111112112"}},
    };
    CHECK(words == expected);
    CHECK(enumerate_domino_tableaux(shape, Partition{5, 5}).size() == 4);
    CHECK(enumerate_domino_tableaux(shape, Partition{8, 2}).size() == 1);
    CHECK(enumerate_domino_tableaux(Partition{2}, Partition{1}).size() == 1);
}

TEST_CASE("shape/weight mismatch gives no tableaux") {
    CHECK(enumerate_domino_tableaux(Partition{4}, Partition{1}).empty());
    CHECK(enumerate_domino_tableaux(Partition{3}, Partition{1, 1}).empty());
    CHECK(count_yamanouchi_tableaux(Partition{2, 1}, Partition{1}) == 0);
}

TEST_CASE("constructor rejects invalid tableaux") {
    using O = Orientation;
    CHECK_NOTHROW(DominoTableau(Partition{2, 2}, {{1, 1, O::vertical, 1}, {1, 2, O::vertical, 1}}));
    // row decrease
    CHECK_THROWS(DominoTableau(Partition{4}, {{1, 1, O::horizontal, 2}, {1, 3, O::horizontal, 1}}));
    // column not strict
    CHECK_THROWS(DominoTableau(Partition{2, 2}, {{1, 1, O::horizontal, 1}, {2, 1, O::horizontal, 1}}));
    // overlap / gap
    CHECK_THROWS(DominoTableau(Partition{2, 2}, {{1, 1, O::vertical, 1}, {1, 1, O::horizontal, 2}}));
    CHECK_THROWS(DominoTableau(Partition{4}, {{1, 1, O::horizontal, 1}}));
    CHECK_THROWS(DominoTableau(Partition{2}, {{1, 2, O::horizontal, 1}}));
}

TEST_CASE("text serialization") {
    const auto ts = enumerate_domino_tableaux(Partition{6, 4, 4, 2, 0}, Partition{3, 3, 2});
    REQUIRE_FALSE(ts.empty());
    for (const auto& t : ts) CHECK(deserialize(serialize(t)) == t);

    using O = Orientation;
    const DominoTableau t(Partition{2, 1, 1}, {{1, 1, O::horizontal, 1}, {2, 1, O::vertical, 2}});
    CHECK(serialize(t) == "1< 1>\n2^\n2v\n");
    CHECK_THROWS_AS(deserialize("1< 1x\n"), ParseError);
    CHECK_THROWS_AS(deserialize("1<\n"), std::invalid_argument);
}
