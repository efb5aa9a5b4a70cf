#include <doctest.h>

#include <array>

#include "cyclotome/cyc_int.hpp"

using namespace cyclotome;

TEST_CASE("canonicalization pins the top coordinate") {
    std::array<std::int64_t, 3> a{5, 3, 2};
    std::array<std::int64_t, 3> b{6, 4, 3};   // a + (1,1,1), same value
    CHECK(CycInt::from_counts(3, a) == CycInt::from_counts(3, b));
    CHECK(CycInt::from_counts(3, a).counts().back() == 0);
}

TEST_CASE("rational integer detection") {
    CHECK(CycInt::integer(5, 7).is_rational_integer());
    CHECK(CycInt::integer(5, 7).to_integer() == 7);
    std::array<std::int64_t, 3> c{0, 1, 0};
    CHECK_FALSE(CycInt::from_counts(3, c).is_rational_integer());

    // 1 + zeta + zeta^2 = 0 for p = 3
    std::array<std::int64_t, 3> ones{1, 1, 1};
    CycInt z = CycInt::from_counts(3, ones);
    CHECK(z == CycInt(3));
    CHECK(z.to_integer() == 0);
}

TEST_CASE("quadratic Gauss sum squares to (-1)^((p-1)/2) p") {
    // p = 3: g^2 = -3; p = 5: g^2 = +5; p = 7: g^2 = -7
    CHECK(quadratic_gauss_sum(3) * quadratic_gauss_sum(3) == CycInt::integer(3, -3));
    CHECK(quadratic_gauss_sum(5) * quadratic_gauss_sum(5) == CycInt::integer(5, 5));
    CHECK(quadratic_gauss_sum(7) * quadratic_gauss_sum(7) == CycInt::integer(7, -7));
}

TEST_CASE("module arithmetic") {
    CycInt g = quadratic_gauss_sum(5);
    CycInt twice = g + g;
    CHECK(twice == g * 2);
    CHECK(twice - g == g);
    CHECK((g - g) == CycInt(5));
}
