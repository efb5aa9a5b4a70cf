#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyclotome/charsum.hpp"

using namespace cyclotome;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("D(u,0) dichotomy") {
    FieldCtx ctx = build_field({3, 3, 1, {}});
    CHECK(d_direct(ctx, ctx.zero(), ctx.zero()) == 54);   // (p-1)p^m
    CHECK(d_fast(ctx, ctx.zero(), ctx.zero()) == 54);
    for (std::uint32_t u = 1; u < ctx.q(); ++u) {
        CHECK(d_direct(ctx, GFElem{u}, ctx.zero()) == 0);
        CHECK(d_fast(ctx, GFElem{u}, ctx.zero()) == 0);
    }
}

TEST_CASE("D values and tallies at p=3 m=3, v=pi") {
    FieldCtx ctx = build_field({3, 3, 1, {}});
    // values live in {0, +-(p-1)p^{(m+1)/2}} = {0, +-18}
    std::uint64_t n0 = 0, np = 0, nm = 0;
    for (std::uint32_t u = 0; u < ctx.q(); ++u) {
        std::int64_t d = d_direct(ctx, GFElem{u}, ctx.pi());
        if (d == 0)
            ++n0;
        else if (d == 18)
            ++np;
        else if (d == -18)
            ++nm;
        else
            FAIL("unexpected D value ", d);
    }
    CHECK(n0 == 18);
    CHECK(np == 6);
    CHECK(nm == 3);
}

TEST_CASE("rank path equals counting oracle, exhaustive p=3 m=3") {
    FieldCtx ctx = build_field({3, 3, 1, {}});
    for (std::uint32_t u = 0; u < ctx.q(); ++u)
        for (std::uint32_t v = 0; v < ctx.q(); ++v)
            CHECK(d_fast(ctx, GFElem{u}, GFElem{v}) == d_direct(ctx, GFElem{u}, GFElem{v}));
}

TEST_CASE("rank path equals counting oracle, sampled") {
    for (auto params : {FieldParams{3, 5, 2, {}}, FieldParams{5, 3, 1, {}}}) {
        FieldCtx ctx = build_field(params);
        std::mt19937_64 rng(53);
        std::uniform_int_distribution<std::uint32_t> pick(0, ctx.q() - 1);
        for (int i = 0; i < 500; ++i) {
            GFElem u{pick(rng)}, v{pick(rng)};
            CHECK(d_fast(ctx, u, v) == d_direct(ctx, u, v));
        }
    }
}

TEST_CASE("d_table matches the closed-form tallies") {
    FieldCtx ctx3 = build_field({3, 3, 1, {}});
    DTally want3 = expected_d_tally(ctx3);
    CHECK(want3.n_zero == 18);
    CHECK(want3.n_plus == 6);
    CHECK(want3.n_minus == 3);
    for (std::uint32_t v = 1; v < ctx3.q(); ++v) {
        DTable t = d_table(ctx3, GFElem{v});
        CHECK(t.n_zero == want3.n_zero);
        CHECK(t.n_plus == want3.n_plus);
        CHECK(t.n_minus == want3.n_minus);
        CHECK(t.n_zero + t.n_plus + t.n_minus == ctx3.q());
    }
    CHECK_THROWS_AS(d_table(ctx3, ctx3.zero()), ParamError);

    FieldCtx ctx5 = build_field({3, 5, 2, {}});
    DTally want5 = expected_d_tally(ctx5);
    CHECK(want5.n_zero == 162);
    CHECK(want5.n_plus == 45);
    CHECK(want5.n_minus == 36);
    DTable t5 = d_table(ctx5, ctx5.pi());
    CHECK(t5.n_zero == 162);
    CHECK(t5.n_plus == 45);
    CHECK(t5.n_minus == 36);

    FieldCtx ctx53 = build_field({5, 3, 1, {}});
    DTally want53 = expected_d_tally(ctx53);
    CHECK(want53.n_zero == 100);
    CHECK(want53.n_plus == 15);
    CHECK(want53.n_minus == 10);
    DTable t53 = d_table(ctx53, ctx53.pi());
    CHECK(t53.n_zero == 100);
    CHECK(t53.n_plus == 15);
    CHECK(t53.n_minus == 10);
}

TEST_CASE("S and T parity guards") {
    FieldCtx odd = build_field({3, 3, 1, {}});
    FieldCtx even = build_field({3, 3, 2, {}});
    CHECK_THROWS_AS(s_value(odd, odd.zero(), odd.zero(), odd.zero()), ParamError);
    CHECK_THROWS_AS(t_value(even, even.zero(), even.zero(), even.zero()), ParamError);
}

TEST_CASE("S special values") {
    FieldCtx ctx = build_field({3, 3, 2, {}});
    CHECK(s_value(ctx, ctx.zero(), ctx.zero(), ctx.zero()) == 108);   // 2(p-1)p^m
    // c = 0, a = b != 0: one summand of full rank, one of rank 0
    GFElem a = ctx.pi();
    CHECK(s_value(ctx, a, a, ctx.zero()) == 54);                      // (p-1)p^m
    CHECK(t_value(build_field({3, 3, 1, {}}), a, a, ctx.zero()) == 54);
}

TEST_CASE("T(0,0,0) doubles the full sum") {
    FieldCtx ctx = build_field({3, 3, 1, {}});
    CHECK(t_value(ctx, ctx.zero(), ctx.zero(), ctx.zero()) == 108);
}

TEST_CASE("exhaustive S values stay in the seven-value set") {
    FieldCtx ctx = build_field({3, 3, 2, {}});
    auto set = s_value_set(ctx);
    // programmatic expansion at p=3, m=3: {0, 54, 108, +-18, +-36}
    std::array<std::int64_t, 7> want{0, 54, 108, 18, -18, 36, -36};
    std::sort(set.begin(), set.end());
    std::sort(want.begin(), want.end());
    CHECK(set == want);
    for (std::uint32_t a = 0; a < ctx.q(); ++a)
        for (std::uint32_t b = 0; b < ctx.q(); ++b)
            for (std::uint32_t c = 0; c < ctx.q(); c += 5) {
                std::int64_t s = s_value(ctx, GFElem{a}, GFElem{b}, GFElem{c});
                CHECK(std::find(set.begin(), set.end(), s) != set.end());
            }
}

TEST_CASE("s_distribution matches the closed form and the reference frequencies") {
    FieldCtx ctx = build_field({3, 3, 2, {}});
    ValueDist dist = s_distribution(ctx);
    CHECK(dist == expected_s_distribution(ctx));

    CHECK(dist.at(108) == 1);
    CHECK(dist.at(54) == 52);         // 2(p^m - 1)
    CHECK(dist.at(18) == 5616);       // (p^m-1)(p^m-p^{m-1})(p^{m-1}+p^{(m-1)/2})
    CHECK(dist.at(-18) == 2808);
    CHECK(dist.at(36) == 936);
    CHECK(dist.at(-36) == 234);
    CHECK(dist.at(0) == 10036);

    std::uint64_t total = 0;
    for (const auto& [v, f] : dist) total += f;
    CHECK(total == static_cast<std::uint64_t>(ipow(3, 9)));
}

TEST_CASE("T distribution (odd k) equals S distribution (even k)") {
    ValueDist s = s_distribution(build_field({3, 3, 2, {}}));
    ValueDist t = s_distribution(build_field({3, 3, 1, {}}));
    CHECK(s == t);
}

TEST_CASE("convolution equals direct triple tally") {
    FieldCtx ctx = build_field({3, 3, 1, {}});
    ValueDist direct;
    for (std::uint32_t a = 0; a < ctx.q(); ++a)
        for (std::uint32_t b = 0; b < ctx.q(); ++b)
            for (std::uint32_t c = 0; c < ctx.q(); ++c)
                ++direct[t_value(ctx, GFElem{a}, GFElem{b}, GFElem{c})];
    CHECK(direct == s_distribution(ctx));
}

TEST_CASE("moment identities over u") {
    for (auto params : {FieldParams{3, 3, 1, {}}, FieldParams{3, 5, 2, {}},
                        FieldParams{5, 3, 1, {}}}) {
        FieldCtx ctx = build_field(params);
        const std::int64_t pm = ipow(ctx.p(), ctx.m());
        std::mt19937_64 rng(59);
        std::uniform_int_distribution<std::uint32_t> pick(1, ctx.q() - 1);
        for (int i = 0; i < 10; ++i) {
            GFElem v{pick(rng)};
            std::int64_t s1 = 0, s2 = 0;
            for (std::uint32_t u = 0; u < ctx.q(); ++u) {
                std::int64_t d = d_fast(ctx, GFElem{u}, v);
                s1 += d;
                s2 += d * d;
            }
            CHECK(s1 == (ctx.p() - 1) * pm);
            CHECK(s2 == (ctx.p() - 1) * (ctx.p() - 1) * pm * pm);
        }
    }
}

TEST_CASE("value-weighted sum of the distribution") {
    // sum over all triples of S equals 2(p-1)p^{3m}: every c contributes
    // 2 p^m * sum_u D(u,c), which is (p-1)p^m for each c
    FieldCtx ctx = build_field({3, 3, 2, {}});
    ValueDist dist = s_distribution(ctx);
    std::int64_t weighted = 0;
    for (const auto& [v, f] : dist) weighted += v * static_cast<std::int64_t>(f);
    CHECK(weighted == 2 * 2 * ipow(3, 9));

    std::int64_t direct = 0;
    for (std::uint32_t a = 0; a < ctx.q(); ++a)
        for (std::uint32_t b = 0; b < ctx.q(); ++b)
            for (std::uint32_t c = 0; c < ctx.q(); ++c)
                direct += s_value(ctx, GFElem{a}, GFElem{b}, GFElem{c});
    CHECK(direct == weighted);
}

TEST_CASE("distribution guard rejects fields that overflow 64-bit totals") {
    FieldCtx big = build_field({131, 3, 1, {}});
    CHECK(big.q() == 2248091);
    CHECK_THROWS_AS(s_distribution(big), ParamError);
    CHECK_THROWS_AS(expected_s_distribution(big), ParamError);
}
