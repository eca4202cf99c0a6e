#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "rsk/corpus.hpp"

using namespace rsk;

TEST_CASE("partition counts match the partition function") {
    std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15};
    for (std::size_t n = 0; n < counts.size(); ++n) CHECK(partitions_of(n).size() == counts[n]);
    std::size_t cumulative = 0;
    for (std::size_t n = 0; n <= 7; ++n) cumulative += counts[n];
    CHECK(partitions_up_to(7).size() == cumulative);
    std::set<std::vector<int>> distinct;
    for (const Partition& p : partitions_up_to(7)) {
        CHECK(p.box_count() <= 7);
        distinct.insert(p.parts());
    }
    CHECK(distinct.size() == cumulative);
}

TEST_CASE("bounded sampling stays in range") {
    Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        CHECK(rng.below(7) < 7);
        int v = rng.range(-3, 4);
        CHECK(v >= -3);
        CHECK(v <= 4);
    }
    CHECK(rng.below(1) == 0);
}

TEST_CASE("identical seeds generate identical corpora") {
    Rng a(99), b(99);
    for (int i = 0; i < 25; ++i) CHECK(random_tableau(a, 9, 4) == random_tableau(b, 9, 4));
    Rng c(99), d(100);
    bool all_equal = true;
    for (int i = 0; i < 25; ++i)
        if (random_tableau(c, 9, 4) != random_tableau(d, 9, 4)) all_equal = false;
    CHECK_FALSE(all_equal);
}

TEST_CASE("random tableaux respect their bounds") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        NTableau t = random_tableau(rng, 6, 2);
        CHECK(t.shape().box_count() <= 6);
        for (const Box& b : t.shape().boxes()) CHECK(t.at(b) <= 2);
    }
    NTableau sq = random_square(rng, 4, 3);
    CHECK(sq.shape() == Partition({4, 4, 4, 4}));
}

TEST_CASE("random linear extensions are valid and eventually exhaustive") {
    Partition p({2, 2});
    std::set<std::vector<Box>> seen;
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        auto ext = random_linear_extension(rng, p);
        REQUIRE(ext.size() == 4);
        std::map<Box, std::size_t> pos;
        for (std::size_t k = 0; k < ext.size(); ++k) pos[ext[k]] = k;
        for (const Box& b : p.boxes()) {
            if (p.contains({b.row - 1, b.col})) CHECK(pos[{b.row - 1, b.col}] < pos[b]);
            if (p.contains({b.row, b.col - 1})) CHECK(pos[{b.row, b.col - 1}] < pos[b]);
        }
        seen.insert(ext);
    }
    CHECK(seen.size() == 2);
}

TEST_CASE("filling enumeration visits every assignment once") {
    std::set<std::vector<std::vector<Entry>>> seen;
    std::size_t count = 0;
    for_each_filling(Partition({2, 1}), 2, [&](const NTableau& t) {
        ++count;
        seen.insert(t.rows());
    });
    CHECK(count == 27);
    CHECK(seen.size() == 27);
    for_each_filling(Partition{}, 5, [&](const NTableau& t) {
        CHECK(t.shape().empty());
        ++count;
    });
    CHECK(count == 28);
}
