#include <doctest.h>

#include "cycover/degeneration.hpp"

using namespace cycover;

TEST_CASE("clemens_schmid_h2") {
    CHECK(clemens_schmid_h2(3, 3) == 1);
    CHECK(clemens_schmid_h2(5, 1) == 5);
    CHECK(clemens_schmid_h2(6, 6) == 1);
    CHECK_THROWS_AS(clemens_schmid_h2(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(clemens_schmid_h2(0, 5), std::domain_error);
}

TEST_CASE("single-point bookkeeping reproduces the specialized chain") {
    auto t = semistable_bookkeeping(1, 1, 1);
    CHECK(t.r_components == 3);
    CHECK(t.h2_W0_prime == 3); // 2*1 + 2 - 1
    CHECK(t.h2_W0 == 3);
    CHECK(t.h2_Wt == 1);
}

TEST_CASE("four-point case") {
    auto t = semistable_bookkeeping(1, 1, 4);
    CHECK(t.h2_W0_prime == 6);
    CHECK(t.r_components == 6);
    CHECK(t.h2_Wt == 1);
}

TEST_CASE("general inputs") {
    CHECK(semistable_bookkeeping(3, 2, 5).h2_Wt == 4);
    CHECK(h11_from_degeneration(1, 1) == 1);
    CHECK(h11_from_degeneration(0, 0) == 0);
    CHECK(h11_from_degeneration(4, 3) == 5);
}

TEST_CASE("m-independence of the generic-fiber rank") {
    for (std::int64_t h2 = 0; h2 <= 5; ++h2)
        for (std::int64_t k = 0; k <= h2; ++k)
            for (std::int64_t m = 1; m <= 10; ++m) {
                auto t = semistable_bookkeeping(h2, k, m);
                CHECK(t.h2_Wt == h11_from_degeneration(h2, k));
                CHECK(t.h2_W0 == t.h2_W0_prime);
            }
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS(semistable_bookkeeping(1, 1, 0)); // smooth Y not modeled
    CHECK_THROWS(semistable_bookkeeping(1, 2, 1)); // k > h2
    CHECK_THROWS(semistable_bookkeeping(1, -1, 1));
    CHECK_THROWS(h11_from_degeneration(1, 2));
}
