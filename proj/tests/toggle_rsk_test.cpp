#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "rsk/classical_rsk.hpp"
#include "rsk/corpus.hpp"
#include "rsk/toggle_rsk.hpp"

using namespace rsk;

namespace {

const NTableau kSquare = NTableau::from_rows({{1, 0, 2}, {0, 2, 0}, {1, 1, 0}});
const NTableau kSquareImage = NTableau::from_rows({{1, 2, 3}, {1, 2, 3}, {2, 4, 4}});

} // namespace

TEST_CASE("corner insertion on a 2x2 square") {
    // Adding x at (2,2) toggles the single interior cell (1,1):
    // new (1,1) = max(up, left) + min(up, left) - old, new corner = max + x.
    NTableau image = NTableau::from_rows({{1, 1}, {1}});
    NTableau grown = insert_corner(image, {2, 2}, 5);
    CHECK(grown == NTableau::from_rows({{0, 1}, {1, 6}}));
    auto [shrunk, x] = remove_corner(grown, {2, 2});
    CHECK(shrunk == image);
    CHECK(x == 5);
}

TEST_CASE("first-row and first-column insertions accumulate") {
    NTableau image = NTableau::from_rows({{2, 3}});
    CHECK(insert_corner(image, {1, 3}, 4) == NTableau::from_rows({{2, 3, 7}}));
    CHECK(insert_corner(image, {2, 1}, 0) == NTableau::from_rows({{2, 3}, {2}}));
}

TEST_CASE("insertion guards its inputs") {
    NTableau rpp = NTableau::from_rows({{1, 2}, {2}});
    CHECK_THROWS_AS(insert_corner(rpp, {1, 4}, 1), NotCorner);
    CHECK_NOTHROW(insert_corner(rpp, {2, 2}, 1));
    NTableau not_rpp = NTableau::from_rows({{2, 1}, {0}});
    CHECK_THROWS_AS(insert_corner(not_rpp, {2, 2}, 1), NotRpp);
    CHECK_THROWS_AS(remove_corner(rpp, {1, 1}), NotCorner);
    CHECK_THROWS_AS(remove_corner(not_rpp, {2, 1}), NotRpp);
}

TEST_CASE("insertion and removal are mutually inverse") {
    for (int i = 0; i < 80; ++i) {
        Rng rng(5200 + i);
        NTableau t = random_tableau(rng, 8, 4);
        NTableau image = toggle_rsk(t);
        REQUIRE(image.is_rpp());
        for (const Box& b : image.shape().corner_boxes()) {
            auto [shrunk, x] = remove_corner(image, b);
            CHECK(insert_corner(shrunk, b, x) == image);
        }
    }
}

TEST_CASE("running example image") {
    CHECK(toggle_rsk(kSquare) == kSquareImage);
    CHECK(toggle_rsk_inverse(kSquareImage) == kSquare);
}

TEST_CASE("matches the classical correspondence on square matrices") {
    for (int i = 0; i < 100; ++i) {
        Rng rng(6000 + i);
        NTableau a = random_square(rng, 1 + rng.below(4), 3);
        CHECK(toggle_rsk(a) == classical_hat(a));
    }
}

TEST_CASE("inverse round-trips random tableaux") {
    for (int i = 0; i < 100; ++i) {
        Rng rng(6900 + i);
        NTableau t = random_tableau(rng, 9, 5);
        CHECK(toggle_rsk_inverse(toggle_rsk(t)) == t);
    }
}

TEST_CASE("image is independent of the insertion order") {
    NTableau t = NTableau::from_rows({{3, 1}, {0, 2}});
    std::vector<Box> row_major = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    std::vector<Box> col_major = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    CHECK(toggle_rsk(t, row_major) == toggle_rsk(t));
    CHECK(toggle_rsk(t, col_major) == toggle_rsk(t));
    for (int i = 0; i < 60; ++i) {
        Rng rng(7300 + i);
        NTableau u = random_tableau(rng, 8, 4);
        std::vector<Box> order = random_linear_extension(rng, u.shape());
        CHECK(toggle_rsk(u, order) == toggle_rsk(u));
    }
}

TEST_CASE("supplied orders must be linear extensions") {
    NTableau t = NTableau::from_rows({{1, 2}, {3}});
    CHECK_THROWS_AS(toggle_rsk(t, {{1, 1}, {1, 2}}), NotLinearExtension);          // too short
    CHECK_THROWS_AS(toggle_rsk(t, {{1, 1}, {1, 2}, {2, 2}}), NotLinearExtension);  // outside box
    CHECK_THROWS_AS(toggle_rsk(t, {{1, 1}, {1, 1}, {2, 1}}), NotLinearExtension);  // repeat
    CHECK_THROWS_AS(toggle_rsk(t, {{1, 2}, {1, 1}, {2, 1}}), NotLinearExtension);  // left-of precedence
    CHECK_THROWS_AS(toggle_rsk(t, {{2, 1}, {1, 2}, {1, 1}}), NotLinearExtension);  // above precedence
}

TEST_CASE("inverse requires a reverse plane partition") {
    CHECK_THROWS_AS(toggle_rsk_inverse(NTableau::from_rows({{2, 1}})), NotRpp);
}

TEST_CASE("empty and single-box shapes") {
    NTableau empty(Partition{}, {});
    CHECK(toggle_rsk(empty) == empty);
    CHECK(toggle_rsk_inverse(empty) == empty);
    NTableau one = NTableau::from_rows({{7}});
    CHECK(toggle_rsk(one) == one);
    CHECK(toggle_rsk_inverse(one) == one);
}
