#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "rsk/corpus.hpp"
#include "rsk/octahedron.hpp"
#include "rsk/toggle_rsk.hpp"

using namespace rsk;

namespace {

const NTableau kSquare = NTableau::from_rows({{1, 0, 2}, {0, 2, 0}, {1, 1, 0}});

// One pyramid level as a dense grid anchored at (lo, lo).
struct Level {
    int k;
    int lo;
    std::vector<std::vector<PValue>> grid;
};

PyramidArray make_pyramid(PyramidKind kind, const Partition& shape,
                          const std::vector<Level>& levels) {
    PyramidArray out(kind, shape);
    for (const Level& level : levels)
        for (std::size_t r = 0; r < level.grid.size(); ++r)
            for (std::size_t c = 0; c < level.grid[r].size(); ++c)
                out.set(level.lo + static_cast<int>(r), level.lo + static_cast<int>(c), level.k,
                        level.grid[r][c]);
    return out;
}

PyramidArray expected_u() {
    return make_pyramid(PyramidKind::U, Partition({3, 3, 3}),
                        {{0, -1, std::vector<std::vector<PValue>>(5, std::vector<PValue>(5, 0))},
                         {1, 0, {{0, 0, 0, 0}, {0, 1, 1, 3}, {0, 1, 3, 3}, {0, 2, 4, 4}}},
                         {2, 1, {{0, 0, 0}, {0, 0, 2}, {0, 1, 2}}},
                         {3, 2, {{0, 0}, {0, 1}}},
                         {4, 3, {{0}}}});
}

PyramidArray expected_ubar() {
    return make_pyramid(PyramidKind::Ubar, Partition({3, 3, 3}),
                        {{0, 0, std::vector<std::vector<PValue>>(4, std::vector<PValue>(4, 0))},
                         {1, 1, {{1, 1, 3}, {1, 3, 3}, {2, 4, 4}}},
                         {2, 2, {{3, 5}, {5, 6}}},
                         {3, 3, {{7}}}});
}

PyramidArray expected_utilde() {
    return make_pyramid(
        PyramidKind::Utilde, Partition({3, 3, 3}),
        {{0, 0, {{0, 0, 0, 0}, {0, -1, -1, -3}, {0, -1, -3, -5}, {0, -2, -5, -7}}},
         {1, 1, {{0, 0, 0}, {0, 0, -2}, {0, -1, -3}}},
         {2, 2, {{0, 0}, {0, -1}}},
         {3, 3, {{0}}}});
}

} // namespace

TEST_CASE("pyramid of the running example") {
    PyramidArray u = build_u(kSquare);
    CHECK(u == expected_u());
    PyramidArray ubar = build_ubar(u);
    CHECK(ubar == expected_ubar());
    CHECK(ubar.at(3, 3, 3) == 7);
    PyramidArray ut = build_utilde(ubar, kSquare);
    CHECK(ut == expected_utilde());
    CHECK(ut.at(3, 3, 0) == -7);
}

TEST_CASE("domain bookkeeping") {
    PyramidArray u = build_u(kSquare);
    CHECK(u.in_domain(-1, -1, 0));
    CHECK(u.in_domain(3, 3, 4));
    CHECK_FALSE(u.in_domain(3, 3, 5));
    CHECK_FALSE(u.in_domain(-2, 0, 0));
    CHECK_FALSE(u.in_domain(4, 0, 0));
    CHECK_THROWS_AS(u.at(4, 4, 0), DomainMismatch);
    PyramidArray ubar = build_ubar(u);
    CHECK(ubar.in_domain(0, 3, 0));
    CHECK_FALSE(ubar.in_domain(-1, 0, 0));
    CHECK_FALSE(ubar.in_domain(3, 3, 4));
}

TEST_CASE("kind and shape guards") {
    PyramidArray u = build_u(kSquare);
    PyramidArray ubar = build_ubar(u);
    CHECK_THROWS_AS(build_ubar(ubar), KindMismatch);
    CHECK_THROWS_AS(build_utilde(u, kSquare), KindMismatch);
    CHECK_THROWS_AS(build_utilde(ubar, NTableau::from_rows({{1}})), ShapeMismatch);
    CHECK_THROWS_AS(extract_rpp(ubar, kSquare.shape()), KindMismatch);
    CHECK_THROWS_AS(check_octahedron(u), KindMismatch);
}

TEST_CASE("zero filling gives all-zero levels") {
    NTableau zero(Partition({2, 2}), {{0, 0}, {0, 0}});
    PyramidArray ut = build_utilde(build_ubar(build_u(zero)), zero);
    for (const auto& [key, value] : ut.entries()) CHECK(value == 0);
}

TEST_CASE("pyramid slices only depend on entries weakly northwest") {
    for (int i = 0; i < 30; ++i) {
        Rng rng(8100 + i);
        NTableau t = random_tableau(rng, 9, 4);
        if (t.shape().empty()) continue;
        auto boxes = t.shape().boxes();
        Box changed = boxes[rng.below(boxes.size())];
        auto rows = t.rows();
        rows[static_cast<std::size_t>(changed.row - 1)][static_cast<std::size_t>(changed.col - 1)] +=
            1 + rng.below(3);
        NTableau bumped(t.shape(), rows);
        PyramidArray a = build_u(t), b = build_u(bumped);
        for (const auto& [key, value] : a.entries()) {
            auto [bi, bj, bk] = key;
            if (bi < changed.row || bj < changed.col) CHECK(b.at(bi, bj, bk) == value);
        }
    }
}

TEST_CASE("recurrence check accepts built arrays") {
    CHECK(check_octahedron(expected_utilde()).empty());
    CHECK(check_octahedron(expected_utilde(), kSquare).empty());
    for (int i = 0; i < 50; ++i) {
        Rng rng(8600 + i);
        NTableau t = random_tableau(rng, 10, 5);
        PyramidArray ut = build_utilde(build_ubar(build_u(t)), t);
        CHECK(check_octahedron(ut).empty());
        CHECK(check_octahedron(ut, t).empty());
    }
}

TEST_CASE("recurrence check localizes a corrupted interior entry") {
    PyramidArray ut = expected_utilde();
    ut.set(3, 3, 1, 0);
    auto violations = check_octahedron(ut);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == OctahedronViolation{3, 3, 1, -3, 0, "recurrence"});
}

TEST_CASE("ceiling entries must vanish") {
    PyramidArray ut = expected_utilde();
    ut.set(2, 2, 2, 1);
    auto violations = check_octahedron(ut);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "ceiling");
}

TEST_CASE("floor entries are only checkable against the source") {
    PyramidArray ut = expected_utilde();
    ut.set(3, 3, 0, 0);
    CHECK(check_octahedron(ut).empty());
    auto violations = check_octahedron(ut, kSquare);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "floor");
    CHECK(violations[0].expected == -7);
}

TEST_CASE("image extraction from the raw pyramid") {
    CHECK(extract_rpp(build_u(kSquare), kSquare.shape()) ==
          NTableau::from_rows({{1, 2, 3}, {1, 2, 3}, {2, 4, 4}}));
    for (int i = 0; i < 50; ++i) {
        Rng rng(9400 + i);
        NTableau t = random_tableau(rng, 10, 5);
        CHECK(extract_rpp(build_u(t), t.shape()) == toggle_rsk(t));
    }
}
