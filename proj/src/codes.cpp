#include "cyclotome/codes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cyclotome/parallel.hpp"

namespace cyclotome {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

CyclicCodeSpec build_code(const FieldCtx& ctx) {
    const std::int64_t p = ctx.p();
    const int m = ctx.m();

    GFElem pi_inv = ctx.inv(ctx.pi());
    GFElem neg_pi_inv = ctx.inv(ctx.neg(ctx.pi()));
    GFElem gamma_inv = ctx.pi_pow(-ctx.half_pk1_exponent());

    CyclicCodeSpec spec;
    spec.ctx = &ctx;
    spec.h0 = minimal_poly(ctx, pi_inv);
    spec.h1 = minimal_poly(ctx, neg_pi_inv);
    spec.h2 = minimal_poly(ctx, gamma_inv);
    spec.n = ctx.group_order();
    spec.dim = 3 * m;

    if (spec.h0.degree() != m || spec.h1.degree() != m || spec.h2.degree() != m ||
        spec.h0 == spec.h1 || spec.h0 == spec.h2 || spec.h1 == spec.h2)
        throw ParamError(Errc::DegenerateCosets,
                         "check polynomials are not three distinct degree-m factors");

    spec.h = poly_mul(poly_mul(spec.h0, spec.h1, p), spec.h2, p);
    if (!poly_mod(poly_xn_minus_one(spec.n, p), spec.h, p).is_zero())
        throw InternalError(Errc::InternalInconsistency, "h does not divide x^n - 1");
    return spec;
}

Codeword codeword(const CyclicCodeSpec& spec, GFElem a, GFElem b, GFElem c) {
    const FieldCtx& ctx = spec.field();
    Codeword w;
    w.a = a;
    w.b = b;
    w.c = c;
    w.symbols.resize(spec.n);

    const GFElem pi = ctx.pi();
    const GFElem neg_pi = ctx.neg(pi);
    const GFElem gamma = ctx.pi_pow(ctx.half_pk1_exponent());
    const std::int64_t p = ctx.p();

    GFElem sa = a, sb = b, sc = c;
    for (std::uint32_t t = 0; t < spec.n; ++t) {
        std::int64_t s = ctx.trace(sa) + ctx.trace(sb) + ctx.trace(sc);
        w.symbols[t] = static_cast<std::uint8_t>(s % p);
        sa = ctx.mul(sa, pi);
        sb = ctx.mul(sb, neg_pi);
        sc = ctx.mul(sc, gamma);
    }
    return w;
}

std::uint32_t weight_of(const CyclicCodeSpec&, const Codeword& w) {
    std::uint32_t count = 0;
    for (std::uint8_t s : w.symbols)
        if (s != 0) ++count;
    return count;
}

bool contains(const CyclicCodeSpec& spec, std::span<const std::uint8_t> symbols) {
    if (symbols.size() != spec.n) return false;
    const std::int64_t p = spec.field().p();
    // parity-check relation: c(x) * h(x) = 0 in F_p[x]/(x^n - 1)
    std::vector<std::int64_t> prod(spec.n, 0);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] == 0) continue;
        for (std::size_t j = 0; j < spec.h.coeffs.size(); ++j) {
            if (spec.h.coeffs[j] == 0) continue;
            std::size_t idx = (i + j) % spec.n;
            prod[idx] = (prod[idx] + symbols[i] * spec.h.coeffs[j]) % p;
        }
    }
    return std::all_of(prod.begin(), prod.end(), [](std::int64_t v) { return v == 0; });
}

std::uint64_t WeightDist::total() const {
    std::uint64_t t = 0;
    for (const auto& [w, f] : entries) t += f;
    return t;
}

WeightDist weight_dist_bruteforce(const CyclicCodeSpec& spec, std::size_t threads) {
    const FieldCtx& ctx = spec.field();
    const std::uint64_t q = ctx.q();
    const unsigned __int128 labels = static_cast<unsigned __int128>(q) * q * q;
    if (labels > (std::uint64_t{1} << 26))
        throw ParamError(Errc::TooLarge, "p^{3m} exceeds the 2^26 enumeration guard");
    const std::uint64_t total = static_cast<std::uint64_t>(labels);

    const GFElem pi = ctx.pi();
    const GFElem neg_pi = ctx.neg(pi);
    const GFElem gamma = ctx.pi_pow(ctx.half_pk1_exponent());
    const std::int64_t p = ctx.p();

    std::size_t nthreads = effective_threads(threads);
    std::vector<std::vector<std::uint64_t>> counts(nthreads);
    parallel_chunks(0, total, nthreads, [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
        auto& mine = counts[w];
        mine.assign(spec.n + 1, 0);
        for (std::uint64_t l = lo; l < hi; ++l) {
            GFElem sa{static_cast<std::uint32_t>(l % q)};
            GFElem sb{static_cast<std::uint32_t>(l / q % q)};
            GFElem sc{static_cast<std::uint32_t>(l / (q * q))};
            std::uint32_t weight = 0;
            for (std::uint32_t t = 0; t < spec.n; ++t) {
                if ((ctx.trace(sa) + ctx.trace(sb) + ctx.trace(sc)) % p != 0) ++weight;
                sa = ctx.mul(sa, pi);
                sb = ctx.mul(sb, neg_pi);
                sc = ctx.mul(sc, gamma);
            }
            ++mine[weight];
        }
    });

    WeightDist dist;
    dist.n = spec.n;
    dist.dim = spec.dim;
    for (std::uint32_t w = 0; w <= spec.n; ++w) {
        std::uint64_t f = 0;
        for (const auto& c : counts)
            if (w < c.size()) f += c[w];
        if (f > 0) dist.entries.emplace_back(w, f);
    }
    return dist;
}

WeightDist weight_dist_charsum(const CyclicCodeSpec& spec, std::size_t threads) {
    const FieldCtx& ctx = spec.field();
    const std::int64_t p = ctx.p();
    const std::int64_t base = ipow(p, ctx.m()) - ipow(p, ctx.m() - 1);

    ValueDist values = s_distribution(ctx, threads);
    std::map<std::uint32_t, std::uint64_t> by_weight;
    for (const auto& [value, freq] : values) {
        if (value % (2 * p) != 0)
            throw InternalError(Errc::NonDivisibleValue,
                                "character-sum value not divisible by 2p");
        std::int64_t w = base - value / (2 * p);
        if (w < 0 || w > static_cast<std::int64_t>(spec.n))
            throw InternalError(Errc::InternalInconsistency, "weight outside [0, n]");
        by_weight[static_cast<std::uint32_t>(w)] += freq;
    }

    WeightDist dist;
    dist.n = spec.n;
    dist.dim = spec.dim;
    dist.entries.assign(by_weight.begin(), by_weight.end());
    return dist;
}

WeightDist weight_dist_closed_form(const CyclicCodeSpec& spec) {
    const FieldCtx& ctx = spec.field();
    const std::int64_t p = ctx.p();
    const int m = ctx.m();
    if (ipow(p, m) > (std::int64_t{1} << 21))
        throw ParamError(Errc::TooLarge, "p^{3m} would overflow 64-bit frequencies");
    const std::uint64_t q = static_cast<std::uint64_t>(ipow(p, m));
    const std::uint64_t t = static_cast<std::uint64_t>(ipow(p, m - 1));
    const std::uint64_t s = static_cast<std::uint64_t>(ipow(p, (m - 1) / 2));
    const std::uint64_t half = static_cast<std::uint64_t>(p - 1) / 2;

    std::map<std::uint32_t, std::uint64_t> by_weight;
    by_weight[0] = 1;
    by_weight[static_cast<std::uint32_t>(half * t)] = 2 * (q - 1);
    by_weight[static_cast<std::uint32_t>(half * (2 * t - s))] = (q - 1) * (q - t) * (t + s);
    by_weight[static_cast<std::uint32_t>(half * (2 * t + s))] = (q - 1) * (q - t) * (t - s);
    by_weight[static_cast<std::uint32_t>(2 * half * (t - s))] = (q - 1) * (t + s) * (t + s) / 4;
    by_weight[static_cast<std::uint32_t>(2 * half * (t + s))] = (q - 1) * (t - s) * (t - s) / 4;
    std::uint64_t rest = q * q * q;
    for (const auto& [w, f] : by_weight) rest -= f;
    by_weight[static_cast<std::uint32_t>(2 * half * t)] = rest;

    WeightDist dist;
    dist.n = spec.n;
    dist.dim = spec.dim;
    dist.entries.assign(by_weight.begin(), by_weight.end());
    return dist;
}

std::string enumerator_string(const WeightDist& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : d.entries) {
        if (!first) os << " + ";
        first = false;
        if (w == 0)
            os << f;
        else
            os << f << "z^" << w;
    }
    return os.str();
}

std::string dist_to_json(const WeightDist& d) {
    nlohmann::json j;
    j["n"] = d.n;
    j["dim"] = d.dim;
    j["enumerator"] = enumerator_string(d);
    j["entries"] = nlohmann::json::array();
    for (const auto& [w, f] : d.entries)
        j["entries"].push_back({{"weight", w}, {"freq", f}});
    return j.dump(2);
}

std::string dist_to_csv(const WeightDist& d) {
    std::ostringstream os;
    os << "weight,frequency\n";
    for (const auto& [w, f] : d.entries) os << w << "," << f << "\n";
    return os.str();
}

}  // namespace cyclotome
