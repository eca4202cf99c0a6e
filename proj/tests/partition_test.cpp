#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "rsk/corpus.hpp"
#include "rsk/hook_series.hpp"
#include "rsk/partition.hpp"

using namespace rsk;

namespace {

// Definitional scans, independent of the Partition member implementations.
std::set<Box> corners_by_definition(const Partition& p) {
    std::set<Box> out;
    for (const Box& b : p.boxes())
        if (!p.contains({b.row + 1, b.col}) && !p.contains({b.row, b.col + 1})) out.insert(b);
    return out;
}

std::set<Box> borders_by_definition(const Partition& p) {
    std::set<Box> out;
    for (const Box& b : p.boxes())
        if (!p.contains({b.row + 1, b.col + 1})) out.insert(b);
    return out;
}

} // namespace

TEST_CASE("construction validates monotonicity and positivity") {
    CHECK_THROWS_AS(Partition({2, 3}), ShapeMismatch);
    CHECK_THROWS_AS(Partition({3, 0}), ShapeMismatch);
    CHECK_THROWS_AS(Partition({-1}), ShapeMismatch);
    CHECK(Partition{}.empty());
    CHECK(Partition({3, 3, 1}).box_count() == 7);
}

TEST_CASE("containment and probing beyond the diagram") {
    Partition p({3, 1});
    CHECK(p.contains({1, 3}));
    CHECK(p.contains({2, 1}));
    CHECK_FALSE(p.contains({2, 2}));
    CHECK_FALSE(p.contains({0, 1}));
    CHECK(p.part(5) == 0);
}

TEST_CASE("corner and border boxes match their definitions") {
    CHECK(Partition({3, 2, 1}).corner_boxes() == std::set<Box>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(Partition({2, 1}).border_boxes() == std::set<Box>{{1, 1}, {1, 2}, {2, 1}});
    for (const Partition& p : partitions_up_to(7)) {
        CHECK(p.corner_boxes() == corners_by_definition(p));
        CHECK(p.border_boxes() == borders_by_definition(p));
    }
}

TEST_CASE("hook cells collect the row tail and column tail") {
    Partition p({2, 2});
    CHECK(p.hook_cells({1, 1}) == std::set<Box>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(p.hook_cells({2, 2}) == std::set<Box>{{2, 2}});
    CHECK(p.hook_cells({3, 3}).empty());
}

TEST_CASE("content is constant on diagonals") {
    CHECK(content({1, 1}) == 0);
    CHECK(content({2, 1}) == -1);
    CHECK(content({1, 4}) == 3);
    CHECK(content({5, 7}) == content({4, 6}));
}

TEST_CASE("conjugation transposes the diagram") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    for (const Partition& p : partitions_up_to(8)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().box_count() == p.box_count());
    }
}

TEST_CASE("box addition and removal guard corners") {
    Partition p({2, 1});
    CHECK(p.with_box({1, 3}) == Partition({3, 1}));
    CHECK(p.with_box({3, 1}) == Partition({2, 1, 1}));
    CHECK_THROWS_AS(p.with_box({1, 4}), NotCorner);  // gap in the row
    CHECK_THROWS_AS(p.with_box({3, 2}), NotCorner);  // below a short row
    CHECK_THROWS_AS(p.with_box({1, 1}), NotCorner);  // already present
    CHECK(p.without_box({2, 1}) == Partition({2}));
    CHECK_THROWS_AS(p.without_box({1, 1}), NotCorner);
}

TEST_CASE("linear extensions respect the box order and are distinct") {
    Partition p({2, 1});
    auto exts = p.linear_extensions();
    CHECK(exts.size() == 2);
    p = Partition({2, 2});
    exts = p.linear_extensions();
    CHECK(exts.size() == 2);
    for (const auto& ext : exts) {
        std::map<Box, std::size_t> pos;
        for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
        CHECK(pos.size() == p.box_count());
        for (const Box& b : p.boxes()) {
            if (p.contains({b.row - 1, b.col})) CHECK(pos[{b.row - 1, b.col}] < pos[b]);
            if (p.contains({b.row, b.col - 1})) CHECK(pos[{b.row, b.col - 1}] < pos[b]);
        }
    }
}

TEST_CASE("extension counts match the hook quotient") {
    for (const Partition& p : partitions_up_to(6)) {
        unsigned long factorial = 1, hooks = 1;
        for (std::size_t m = 1; m <= p.box_count(); ++m) factorial *= m;
        for (const Box& b : p.boxes()) hooks *= hook_length(p, b);
        CHECK(p.linear_extensions().size() == factorial / hooks);
    }
    CHECK(Partition({3, 2, 1}).linear_extensions().size() == 16);
}

TEST_CASE("extension enumeration is capped by box count") {
    CHECK_THROWS_AS(Partition({7, 6}).linear_extensions(), CapExceeded);
    CHECK_NOTHROW(Partition({7, 6}).linear_extensions(13));
}
