#include <doctest.h>

#include <random>

#include "cycover/invariants.hpp"

using namespace cycover;

namespace {

FanoRecord rec(const char* id, Rational mk3, std::int64_t n, std::int64_t ey,
               std::int64_t h2 = 1, std::int64_t k = 1) {
    return FanoRecord({id}, mk3, n, ey, h2, k);
}

// The 18 catalog rows: fano id, -K^3, N, e(Y) and the published
// (H3, c2H, e) of the double cover.
struct Row {
    const char* fano;
    Rational mk3;
    std::int64_t N, eY;
    std::int64_t H3, c2H, e;
};

const std::vector<Row>& table1() {
    static const std::vector<Row> rows = {
        {"4.2", Rational(6), 4, -2, 12, 48, -68},
        {"1.1", Rational(7), 2, -12, 14, 56, -96},
        {"4.4", Rational(7), 2, -14, 14, 56, -100},
        {"1.2", Rational(15, 2), 3, -2, 15, 54, -76},
        {"4.5", Rational(15, 2), 3, -6, 15, 54, -84},
        {"4.6", Rational(8), 4, 0, 16, 52, -72},
        {"1.4", Rational(17, 2), 1, -14, 17, 62, -108},
        {"4.7", Rational(17, 2), 5, 4, 17, 50, -64},
        {"1.5", Rational(9), 2, -2, 18, 60, -84},
        {"1.6", Rational(9), 2, -6, 18, 60, -92},
        {"1.7", Rational(19, 2), 3, 2, 19, 58, -76},
        {"1.9", Rational(21, 2), 1, -6, 21, 66, -100},
        {"1.10", Rational(21, 2), 1, -8, 21, 66, -104},
        {"1.11", Rational(11), 2, -2, 22, 64, -92},
        {"1.12", Rational(25, 2), 1, -2, 25, 70, -100},
        {"1.13", Rational(29, 2), 1, 0, 29, 74, -104},
        {"4.8", Rational(29, 2), 1, 4, 29, 74, -96},
        {"1.14", Rational(15), 2, 4, 30, 72, -96},
    };
    return rows;
}

} // namespace

TEST_CASE("fano record validation") {
    CHECK_THROWS(rec("x", Rational(0), 1, 0));
    CHECK_THROWS(rec("x", Rational(-6), 1, 0));
    CHECK_THROWS(rec("x", Rational(13, 4), 1, 0)); // 2*(-K^3) not integral
    CHECK_THROWS(rec("x", Rational(6), 1, 0, 1, 2)); // k > h2
    CHECK_NOTHROW(rec("x", Rational(15, 2), 3, -2));
}

TEST_CASE("cy_h11") {
    CHECK(cy_h11(rec("x", Rational(6), 4, -2, 1, 1)) == 1);
    CHECK(cy_h11(rec("x", Rational(6), 4, -2, 2, 2)) == 2);
    CHECK(cy_h11(rec("x", Rational(6), 4, -2, 3, 1)) == 5);
    CHECK_THROWS_AS(cy_h11(rec("x", Rational(6), 4, -2, 0, 0)), std::domain_error);
}

TEST_CASE("cy_H3") {
    CHECK(cy_H3(rec("x", Rational(6), 4, -2)) == 12);
    CHECK(cy_H3(rec("x", Rational(15, 2), 3, -2)) == 15);
    CHECK(cy_H3(rec("x", Rational(29, 2), 1, 4)) == 29);
}

TEST_CASE("cy_c2H") {
    CHECK(cy_c2H(rec("x", Rational(6), 4, -2)) == 48);
    CHECK(cy_c2H(rec("x", Rational(7), 2, -12)) == 56);
    CHECK(cy_c2H(rec("x", Rational(17, 2), 5, 4)) == 50);
}

TEST_CASE("cy_euler") {
    CHECK(cy_euler(rec("x", Rational(6), 4, -2)) == -68);
    CHECK(cy_euler(rec("x", Rational(7), 2, -12)) == -96);
    CHECK(cy_euler(rec("x", Rational(17, 2), 5, 4)) == -64);
}

TEST_CASE("cy_h12 cross-checked against e = 2(h11 - h12)") {
    CHECK(cy_h12(rec("x", Rational(6), 4, -2)) == 35);
    CHECK(2 * (1 - 35) == -68);
    CHECK(cy_h12(rec("x", Rational(7), 2, -12)) == 49);
    CHECK(2 * (1 - 49) == -96);
    CHECK(cy_h12(rec("x", Rational(15), 2, 4)) == 49);
    CHECK(2 * (1 - 49) == -96);
}

TEST_CASE("euler_branch_surface and the c2H identity") {
    CHECK(euler_branch_surface(rec("x", Rational(6), 4, -2)) == 60);
    CHECK(-12 + 60 == 48);
    CHECK(euler_branch_surface(rec("x", Rational(7), 2, -12)) == 70);
    CHECK(-14 + 70 == 56);
    // formula zero point 48 - 3*16 + 0
    FanoRecord degenerate({"z"}, Rational(1, 2), 16, 0);
    CHECK(euler_branch_surface(degenerate) == 2); // 48 - 48 + 2
}

TEST_CASE("c2H - 2K^3 = e(S') on random records") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::int64_t> twok3(1, 60); // 2*(-K^3)
    std::uniform_int_distribution<std::int64_t> nn(0, 10);
    std::uniform_int_distribution<std::int64_t> ee(-20, 20);
    for (int i = 0; i < 100; ++i) {
        FanoRecord r({"r"}, Rational(twok3(rng), 2), nn(rng), ee(rng));
        // c2H = 2K^3 + e(S') with K^3 = -minus_K3
        Rational lhs(cy_c2H(r));
        Rational rhs = Rational(-2) * r.minus_K3 + Rational(euler_branch_surface(r));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("compute_all reproduces every catalog row") {
    for (const auto& row : table1()) {
        auto out = compute_all(rec(row.fano, row.mk3, row.N, row.eY));
        CHECK(out.values.h11 == 1);
        CHECK(out.values.H3 == row.H3);
        CHECK(out.values.c2H == row.c2H);
        CHECK(out.values.e == row.e);
        CHECK(out.values.e == 2 * (out.values.h11 - out.values.h12));
        CHECK_FALSE(out.l2_warning);
    }
}

TEST_CASE("compute_all is pure") {
    auto r = rec("1.12", Rational(25, 2), 1, -2);
    auto a = compute_all(r);
    auto b = compute_all(r);
    CHECK(a.values == b.values);
    CHECK(a.values.h12 == 51);
    CHECK(a.values.H3 == 25);
    CHECK(a.values.c2H == 70);
    CHECK(a.values.e == -100);
}

TEST_CASE("exclude_l2") {
    auto amb = exclude_l2(rec("x", Rational(4), 4, 0));
    CHECK(amb.verdict == L2Verdict::Kind::Ambiguous);
    CHECK(amb.h3_over_4_integral);
    CHECK(amb.chi_defect_integral);

    auto f1 = exclude_l2(rec("x", Rational(7), 2, -12));
    CHECK(f1.verdict == L2Verdict::Kind::ForcedL1);
    CHECK_FALSE(f1.h3_over_4_integral);

    auto f2 = exclude_l2(rec("x", Rational(8), 4, 0));
    CHECK(f2.verdict == L2Verdict::Kind::ForcedL1);
    CHECK(f2.h3_over_4_integral);
    CHECK_FALSE(f2.chi_defect_integral);

    for (const auto& row : table1())
        CHECK(exclude_l2(rec(row.fano, row.mk3, row.N, row.eY)).verdict ==
              L2Verdict::Kind::ForcedL1);
}

TEST_CASE("the (4,4) record computes with a warning") {
    auto out = compute_all(rec("x", Rational(4), 4, 0));
    CHECK(out.l2_warning);
    CHECK(out.values.h11 == 1);
    CHECK(out.values.e == 2 * 0 - 16 + 8 - 48);
}
