#include "cyclotome/charsum.hpp"

#include <algorithm>

#include "cyclotome/cyc_int.hpp"
#include "cyclotome/parallel.hpp"
#include "cyclotome/quadform.hpp"

namespace cyclotome {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// d_fast with the counting oracle shadowing it on small fields.
std::int64_t d_engine(const FieldCtx& ctx, GFElem u, GFElem v) {
    std::int64_t fast = d_fast(ctx, u, v);
    if (ctx.q() <= kOracleCrosscheckMaxQ) {
        std::int64_t direct = d_direct(ctx, u, v);
        if (direct != fast)
            throw InternalError(Errc::InternalInconsistency,
                                "rank-based D disagrees with the counting oracle");
    }
    return fast;
}

// tiny value->count map; D takes at most three values per fixed v
struct Tally {
    std::vector<std::pair<std::int64_t, std::uint64_t>> items;

    void bump(std::int64_t value) {
        for (auto& [v, n] : items) {
            if (v == value) {
                ++n;
                return;
            }
        }
        items.emplace_back(value, 1);
    }
};

}  // namespace

std::int64_t d_direct(const FieldCtx& ctx, GFElem u, GFElem v) {
    const int p = static_cast<int>(ctx.p());
    // bucket Q values over x once, then expand over y in F_p^*
    std::vector<std::int64_t> buckets(static_cast<std::size_t>(p), 0);
    for (std::uint32_t x = 0; x < ctx.q(); ++x) {
        GFElem xe{x};
        std::int64_t qv =
            ctx.trace(ctx.add(ctx.mul(u, ctx.square(xe)), ctx.mul(v, ctx.pk1_power(xe))));
        ++buckets[static_cast<std::size_t>(qv)];
    }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
    for (int y = 1; y < p; ++y)
        for (int j = 0; j < p; ++j)
            counts[static_cast<std::size_t>(y * j % p)] += buckets[static_cast<std::size_t>(j)];

    CycInt sum = CycInt::from_counts(p, counts);
    if (!sum.is_rational_integer())
        throw InternalError(Errc::NonIntegerSum, "character sum is not a rational integer");
    return sum.to_integer();
}

std::int64_t d_fast(const FieldCtx& ctx, GFElem u, GFElem v) {
    return y_summed_gauss(ctx, diagonalize(build_form(ctx, u, v)));
}

DTable d_table(const FieldCtx& ctx, GFElem v) {
    if (v.value == 0) throw ParamError(Errc::ZeroV, "d_table needs v != 0");
    const std::int64_t p = ctx.p();
    const std::int64_t peak = (p - 1) * ipow(p, (ctx.m() + 1) / 2);

    DTable t;
    t.v = v;
    t.values.resize(ctx.q());
    for (std::uint32_t u = 0; u < ctx.q(); ++u) {
        std::int64_t d = d_engine(ctx, GFElem{u}, v);
        t.values[u] = d;
        if (d == 0)
            ++t.n_zero;
        else if (d == peak)
            ++t.n_plus;
        else if (d == -peak)
            ++t.n_minus;
        else
            throw InternalError(Errc::InternalInconsistency,
                                "D(u,v) outside {0, +-(p-1)p^{(m+1)/2}} for v != 0");
    }
    return t;
}

DTally expected_d_tally(const FieldCtx& ctx) {
    const std::int64_t p = ctx.p();
    const int m = ctx.m();
    DTally t;
    t.n_zero = static_cast<std::uint64_t>(ipow(p, m) - ipow(p, m - 1));
    t.n_plus = static_cast<std::uint64_t>((ipow(p, m - 1) + ipow(p, (m - 1) / 2)) / 2);
    t.n_minus = static_cast<std::uint64_t>((ipow(p, m - 1) - ipow(p, (m - 1) / 2)) / 2);
    return t;
}

std::int64_t s_value(const FieldCtx& ctx, GFElem a, GFElem b, GFElem c) {
    if (ctx.k() % 2 != 0)
        throw ParamError(Errc::WrongParity, "S(a,b,c) is defined for even k");
    return d_engine(ctx, ctx.add(a, b), c) + d_engine(ctx, ctx.sub(a, b), c);
}

std::int64_t t_value(const FieldCtx& ctx, GFElem a, GFElem b, GFElem c) {
    if (ctx.k() % 2 != 1)
        throw ParamError(Errc::WrongParity, "T(a,b,c) is defined for odd k");
    return d_engine(ctx, ctx.add(a, b), c) + d_engine(ctx, ctx.sub(a, b), ctx.neg(c));
}

std::array<std::int64_t, 7> s_value_set(const FieldCtx& ctx) {
    const std::int64_t p = ctx.p();
    const std::int64_t big = (p - 1) * ipow(p, ctx.m());
    const std::int64_t peak = (p - 1) * ipow(p, (ctx.m() + 1) / 2);
    return {0, big, 2 * big, peak, -peak, 2 * peak, -2 * peak};
}

ValueDist s_distribution(const FieldCtx& ctx, std::size_t threads) {
    const std::uint64_t q = ctx.q();
    if (ipow(ctx.p(), ctx.m()) > (std::int64_t{1} << 21))
        throw ParamError(Errc::TooLarge, "p^{3m} would overflow 64-bit frequencies");

    // one D-value tally per c; q * q rank computations in total
    std::vector<Tally> tallies(q);
    std::size_t n = effective_threads(threads);
    parallel_chunks(0, q, n, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t c = lo; c < hi; ++c) {
            Tally& t = tallies[c];
            for (std::uint64_t u = 0; u < q; ++u)
                t.bump(d_engine(ctx, GFElem{static_cast<std::uint32_t>(u)},
                                GFElem{static_cast<std::uint32_t>(c)}));
        }
    });

    // (a,b) -> (a+b, a-b) is a bijection, so the per-c distribution of
    // D(u1,c) + D(u2,+-c) over (u1,u2) is the product of tallies.
    const bool even_k = ctx.k() % 2 == 0;
    ValueDist dist;
    for (std::uint64_t c = 0; c < q; ++c) {
        const Tally& t1 = tallies[c];
        const Tally& t2 =
            even_k ? tallies[c] : tallies[ctx.neg(GFElem{static_cast<std::uint32_t>(c)}).value];
        for (const auto& [v1, n1] : t1.items)
            for (const auto& [v2, n2] : t2.items) dist[v1 + v2] += n1 * n2;
    }
    return dist;
}

ValueDist expected_s_distribution(const FieldCtx& ctx) {
    const std::int64_t p = ctx.p();
    const int m = ctx.m();
    if (ipow(p, m) > (std::int64_t{1} << 21))
        throw ParamError(Errc::TooLarge, "p^{3m} would overflow 64-bit frequencies");
    const std::uint64_t q = static_cast<std::uint64_t>(ipow(p, m));
    const std::uint64_t t = static_cast<std::uint64_t>(ipow(p, m - 1));
    const std::uint64_t s = static_cast<std::uint64_t>(ipow(p, (m - 1) / 2));
    const std::int64_t big = (p - 1) * static_cast<std::int64_t>(q);
    const std::int64_t peak = (p - 1) * ipow(p, (m + 1) / 2);

    ValueDist dist;
    dist[2 * big] = 1;
    dist[big] = 2 * (q - 1);
    dist[peak] = (q - 1) * (q - t) * (t + s);
    dist[-peak] = (q - 1) * (q - t) * (t - s);
    dist[2 * peak] = (q - 1) * (t + s) * (t + s) / 4;
    dist[-2 * peak] = (q - 1) * (t - s) * (t - s) / 4;
    std::uint64_t rest = q * q * q;
    for (const auto& [v, f] : dist) rest -= f;
    dist[0] = rest;
    return dist;
}

}  // namespace cyclotome
