#include "cyclotome/quadform.hpp"

#include <utility>

namespace cyclotome {

namespace {

std::int64_t modpow(std::int64_t base, std::int64_t e, std::int64_t mod) {
    std::int64_t acc = 1;
    base %= mod;
    while (e > 0) {
        if (e & 1) acc = acc * base % mod;
        base = base * base % mod;
        e >>= 1;
    }
    return acc;
}

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

QuadForm build_form(const FieldCtx& ctx, GFElem u, GFElem v) {
    const int m = ctx.m();
    const std::int64_t p = ctx.p();
    QuadForm q;
    q.m = m;
    q.p = p;
    q.u = u;
    q.v = v;
    q.a.assign(static_cast<std::size_t>(m) * m, 0);

    auto eval = [&](GFElem x) -> std::int64_t {
        return ctx.trace(ctx.add(ctx.mul(u, ctx.square(x)), ctx.mul(v, ctx.pk1_power(x))));
    };

    const std::int64_t inv2 = modpow(2, p - 2, p);
    std::vector<std::int64_t> diag(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        // basis element eps_i = x^i has packed value p^i
        GFElem eps{1};
        for (int t = 0; t < i; ++t) eps.value *= static_cast<std::uint32_t>(p);
        diag[static_cast<std::size_t>(i)] = eval(eps);
        q.a[static_cast<std::size_t>(i) * m + i] = static_cast<std::int32_t>(diag[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < m; ++i) {
        std::uint32_t pi_pow_i = 1;
        for (int t = 0; t < i; ++t) pi_pow_i *= static_cast<std::uint32_t>(p);
        std::uint32_t pj = pi_pow_i;
        for (int j = i + 1; j < m; ++j) {
            pj *= static_cast<std::uint32_t>(p);
            // eps_i + eps_j packs carry-free: distinct digits, both 1 < p
            GFElem sum{pi_pow_i + pj};
            std::int64_t b = (eval(sum) - diag[static_cast<std::size_t>(i)] -
                              diag[static_cast<std::size_t>(j)]) %
                             p;
            if (b < 0) b += p;
            b = b * inv2 % p;
            q.a[static_cast<std::size_t>(i) * m + j] = static_cast<std::int32_t>(b);
            q.a[static_cast<std::size_t>(j) * m + i] = static_cast<std::int32_t>(b);
        }
    }
    return q;
}

DiagResult diagonalize_matrix(std::vector<std::int32_t> a, int m, std::int64_t p) {
    auto at = [&](int i, int j) -> std::int32_t& {
        return a[static_cast<std::size_t>(i) * m + j];
    };
    auto swap_rc = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(at(i, r), at(j, r));
        for (int r = 0; r < m; ++r) std::swap(at(r, i), at(r, j));
    };
    auto add_rc = [&](int dst, int src) {
        for (int r = 0; r < m; ++r) at(dst, r) = static_cast<std::int32_t>((at(dst, r) + at(src, r)) % p);
        for (int r = 0; r < m; ++r) at(r, dst) = static_cast<std::int32_t>((at(r, dst) + at(r, src)) % p);
    };

    for (int i = 0; i < m; ++i) {
        if (at(i, i) == 0) {
            int j = i + 1;
            while (j < m && at(j, j) == 0) ++j;
            if (j < m) {
                swap_rc(i, j);
            } else {
                // all remaining diagonal entries vanish; pull in a nonzero
                // off-diagonal entry, which lands 2*a[i][j] != 0 on the
                // diagonal since char != 2
                j = i + 1;
                while (j < m && at(i, j) == 0) ++j;
                if (j == m) continue;   // row/column already cleared
                add_rc(i, j);
            }
        }
        const std::int64_t d = at(i, i);
        const std::int64_t dinv = modpow(d, p - 2, p);
        for (int j = i + 1; j < m; ++j) {
            std::int64_t f = at(j, i) * dinv % p;
            if (f == 0) continue;
            std::int64_t nf = p - f;
            for (int r = 0; r < m; ++r)
                at(j, r) = static_cast<std::int32_t>((at(j, r) + nf * at(i, r)) % p);
            for (int r = 0; r < m; ++r)
                at(r, j) = static_cast<std::int32_t>((at(r, j) + nf * at(r, i)) % p);
        }
    }

    DiagResult res;
    std::int64_t disc = 1;
    for (int i = 0; i < m; ++i) {
        if (at(i, i) != 0) {
            ++res.rank;
            disc = disc * at(i, i) % p;
        }
    }
    res.disc_class = res.rank == 0 ? 0 : legendre_symbol(disc, p);
    return res;
}

DiagResult diagonalize(const QuadForm& q) { return diagonalize_matrix(q.a, q.m, q.p); }

CycInt gauss_sum_closed_form(const FieldCtx& ctx, DiagResult d) {
    const int p = static_cast<int>(ctx.p());
    const int m = ctx.m();
    const int r = d.rank;
    if (r == 0) return CycInt::integer(p, ipow(p, m));

    if (r % 2 == 0) {
        std::int64_t mag = ipow(p, m - r / 2);
        std::int64_t sign = d.disc_class;
        if (p % 4 == 3 && (r / 2) % 2 == 1) sign = -sign;
        return CycInt::integer(p, sign * mag);
    }
    // odd rank: value is disc * (sqrt(+-p))-multiple; the quadratic Gauss
    // sum g carries the irrational part exactly, with g^2 = (-1)^{(p-1)/2} p
    std::int64_t coeff = d.disc_class * ipow(p, m - (r + 1) / 2);
    if (p % 4 == 3 && ((r - 1) / 2) % 2 == 1) coeff = -coeff;
    return quadratic_gauss_sum(p) * coeff;
}

std::int64_t y_summed_gauss(const FieldCtx& ctx, DiagResult d) {
    const std::int64_t p = ctx.p();
    const int m = ctx.m();
    const int r = d.rank;
    if (r % 2 == 1) return 0;
    if (r == 0) return (p - 1) * ipow(p, m);
    std::int64_t eps = d.disc_class;
    if (p % 4 == 3 && (r / 2) % 2 == 1) eps = -eps;
    return eps * (p - 1) * ipow(p, m - r / 2);
}

}  // namespace cyclotome
