#include <doctest.h>

#include <map>
#include <random>

#include "cyclotome/gf.hpp"

using namespace cyclotome;

namespace {

GFElem random_elem(const FieldCtx& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.q() - 1);
    return GFElem{pick(rng)};
}

GFElem random_nonzero(const FieldCtx& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(1, ctx.q() - 1);
    return GFElem{pick(rng)};
}

// evaluate an F_p polynomial at a field element
GFElem eval_poly(const FieldCtx& ctx, const FpPoly& f, GFElem a) {
    GFElem acc = ctx.zero();
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = ctx.add(ctx.mul(acc, a), ctx.from_fp(*it));
    return acc;
}

}  // namespace

TEST_CASE("build_field accepts the worked parameters") {
    FieldParams params{3, 3, 1, make_poly({1, 2, 0, 1}, 3)};
    FieldCtx ctx = build_field(params);
    CHECK(ctx.q() == 27);
    CHECK(ctx.lambda() == 2);
    CHECK(ctx.prim_poly() == make_poly({1, 2, 0, 1}, 3));
}

TEST_CASE("build_field parameter validation") {
    CHECK_THROWS_WITH_AS(build_field({3, 2, 1, {}}), doctest::Contains("BadDegree"), ParamError);
    CHECK_THROWS_WITH_AS(build_field({3, 4, 1, {}}), doctest::Contains("BadDegree"), ParamError);
    CHECK_THROWS_WITH_AS(build_field({3, 3, 3, {}}), doctest::Contains("GcdViolation"),
                         ParamError);
    CHECK_THROWS_WITH_AS(build_field({3, 3, 0, {}}), doctest::Contains("GcdViolation"),
                         ParamError);
    CHECK_THROWS_WITH_AS(build_field({4, 3, 1, {}}), doctest::Contains("NotPrime"), ParamError);
    CHECK_THROWS_WITH_AS(build_field({2, 3, 1, {}}), doctest::Contains("NotPrime"), ParamError);
    CHECK_THROWS_WITH_AS(build_field({9, 3, 1, {}}), doctest::Contains("NotPrime"), ParamError);
    // 251^5 blows the 2^24 table limit
    CHECK_THROWS_AS(build_field({251, 5, 1, {}}), ParamError);

    // reducible polynomial: x^3 + 1 = (x + 1)(x^2 - x + 1)
    CHECK_THROWS_WITH_AS(build_field({3, 3, 1, make_poly({1, 0, 0, 1}, 3)}),
                         doctest::Contains("NotPrimitive"), ParamError);
}

TEST_CASE("irreducible but imprimitive polynomials are rejected") {
    // hunt one down with the public predicates
    bool found = false;
    for (std::int64_t c0 = 1; c0 < 3 && !found; ++c0)
        for (std::int64_t c1 = 0; c1 < 3 && !found; ++c1)
            for (std::int64_t c2 = 0; c2 < 3 && !found; ++c2) {
                FpPoly f = make_poly({c0, c1, c2, 1}, 3);
                if (is_irreducible_poly(f, 3) && !is_primitive_poly(f, 3, 3)) {
                    found = true;
                    CHECK_THROWS_AS(build_field({3, 3, 1, f}), ParamError);
                }
            }
    CHECK(found);
}

TEST_CASE("primitive polynomial search is deterministic") {
    CHECK(find_primitive_poly(3, 3) == make_poly({1, 0, 2, 1}, 3));
    FieldCtx ctx = build_field({3, 3, 1, {}});
    CHECK(ctx.prim_poly() == make_poly({1, 0, 2, 1}, 3));
    CHECK(is_primitive_poly(ctx.prim_poly(), 3, 3));
}

TEST_CASE("trace basics and fiber sizes") {
    FieldCtx ctx = build_field({3, 3, 1, {}});
    CHECK(trace(ctx, ctx.zero()) == 0);
    CHECK(trace(ctx, ctx.one()) == 3 % 3);   // m mod p

    std::map<std::int64_t, int> fibers;
    for (std::uint32_t v = 0; v < ctx.q(); ++v) ++fibers[trace(ctx, GFElem{v})];
    CHECK(fibers == std::map<std::int64_t, int>{{0, 9}, {1, 9}, {2, 9}});
}

TEST_CASE("trace is Frobenius invariant and F_p linear") {
    FieldCtx ctx = build_field({5, 3, 1, {}});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        GFElem x = random_elem(ctx, rng);
        GFElem y = random_elem(ctx, rng);
        CHECK(trace(ctx, ctx.frobenius(x)) == trace(ctx, x));
        CHECK(trace(ctx, ctx.add(x, y)) == (trace(ctx, x) + trace(ctx, y)) % ctx.p());
    }
}

TEST_CASE("legendre symbol") {
    FieldCtx ctx3 = build_field({3, 3, 1, {}});
    CHECK(legendre(ctx3, 1) == 1);
    CHECK(legendre(ctx3, 2) == -1);
    CHECK(legendre(ctx3, 0) == 0);
    FieldCtx ctx5 = build_field({5, 3, 1, {}});
    CHECK(legendre(ctx5, 4) == 1);
    CHECK(legendre(ctx5, 2) == -1);
}

TEST_CASE("lambda power check signs") {
    CHECK(lambda_power_check(build_field({3, 3, 1, {}})) == -1);
    CHECK(lambda_power_check(build_field({3, 5, 2, {}})) == 1);
    CHECK(lambda_power_check(build_field({5, 3, 4, {}})) == 1);
    CHECK(lambda_power_check(build_field({5, 3, 5, {}})) == -1);
}

TEST_CASE("field axioms on random samples") {
    for (auto params : {FieldParams{3, 3, 1, {}}, FieldParams{5, 3, 2, {}}}) {
        FieldCtx ctx = build_field(params);
        std::mt19937_64 rng(17);
        for (int i = 0; i < 300; ++i) {
            GFElem x = random_elem(ctx, rng);
            GFElem y = random_elem(ctx, rng);
            GFElem z = random_elem(ctx, rng);
            CHECK(ctx.add(ctx.add(x, y), z) == ctx.add(x, ctx.add(y, z)));
            CHECK(ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z)));
            CHECK(ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z)));
            CHECK(ctx.add(x, ctx.neg(x)) == ctx.zero());
            if (x.value != 0) CHECK(ctx.mul(x, ctx.inv(x)) == ctx.one());
        }
    }
}

TEST_CASE("log/antilog round trip on all nonzero elements") {
    FieldCtx ctx = build_field({3, 3, 1, {}});
    for (std::uint32_t v = 1; v < ctx.q(); ++v) {
        GFElem x{v};
        CHECK(ctx.pi_pow(ctx.log(x)) == x);
    }
    CHECK_THROWS_AS(ctx.log(ctx.zero()), ParamError);
    CHECK_THROWS_AS(ctx.inv(ctx.zero()), ParamError);
}

TEST_CASE("Frobenius is additive") {
    FieldCtx ctx = build_field({3, 5, 1, {}});
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        GFElem x = random_elem(ctx, rng);
        GFElem y = random_elem(ctx, rng);
        CHECK(ctx.frobenius(ctx.add(x, y)) == ctx.add(ctx.frobenius(x), ctx.frobenius(y)));
    }
}

TEST_CASE("squares split the group in half and lambda is not one of them") {
    for (auto params : {FieldParams{3, 3, 1, {}}, FieldParams{5, 3, 1, {}}}) {
        FieldCtx ctx = build_field(params);
        std::uint32_t squares = 0;
        for (std::uint32_t v = 1; v < ctx.q(); ++v)
            if (ctx.is_square(GFElem{v})) ++squares;
        CHECK(squares == (ctx.q() - 1) / 2);
        CHECK_FALSE(ctx.is_square(ctx.lambda_elem()));
    }
}

TEST_CASE("negative exponents reduce mod the group order") {
    FieldCtx ctx = build_field({3, 3, 1, {}});
    GFElem x = ctx.pi();
    CHECK(ctx.pow(x, -1) == ctx.inv(x));
    CHECK(ctx.pow(x, -5) == ctx.inv(ctx.pow(x, 5)));
    CHECK(ctx.pi_pow(-static_cast<std::int64_t>(ctx.group_order())) == ctx.one());
}

TEST_CASE("coords round trip") {
    FieldCtx ctx = build_field({5, 3, 1, {}});
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        GFElem x = random_elem(ctx, rng);
        auto c = ctx.coords(x);
        CHECK(ctx.from_coords(c) == x);
        for (auto d : c) CHECK((0 <= d && d < ctx.p()));
    }
    CHECK(ctx.coords(ctx.zero()) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("minimal polynomials") {
    FieldCtx ctx = build_field({3, 3, 1, {}});

    // a = 1 lies in F_p: minimal polynomial is x - 1
    CHECK(minimal_poly(ctx, ctx.one()) == make_poly({-1, 1}, 3));
    CHECK_THROWS_AS(minimal_poly(ctx, ctx.zero()), ParamError);

    FpPoly h0 = minimal_poly(ctx, ctx.inv(ctx.pi()));
    CHECK(h0.degree() == 3);
    CHECK(h0.is_monic());

    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
        GFElem a = random_nonzero(ctx, rng);
        FpPoly f = minimal_poly(ctx, a);
        CHECK(eval_poly(ctx, f, a) == ctx.zero());
        CHECK(is_irreducible_poly(f, 3));
        CHECK(3 % f.degree() == 0);
    }
}
