#include "cyclotome/gf.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace cyclotome {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;

std::int64_t modpow_int(std::int64_t base, std::int64_t e, std::int64_t mod) {
    std::int64_t acc = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (e > 0) {
        if (e & 1) acc = static_cast<std::int64_t>(__int128{acc} * base % mod);
        base = static_cast<std::int64_t>(__int128{base} * base % mod);
        e >>= 1;
    }
    return acc;
}

// x^e mod (f, p) by square-and-multiply on dense coefficient vectors.
FpPoly poly_x_powmod(std::int64_t e, const FpPoly& f, std::int64_t p) {
    FpPoly x = make_poly({0, 1}, p);
    FpPoly acc = make_poly({1}, p);
    FpPoly base = poly_mod(x, f, p);
    while (e > 0) {
        if (e & 1) acc = poly_mod(poly_mul(acc, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::int64_t p) {
    while (!b.is_zero()) {
        FpPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return modpow_int(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

bool is_irreducible_poly(const FpPoly& f, std::int64_t p) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    // f irreducible of degree d iff x^{p^d} = x mod f and, for every prime
    // r | d, gcd(x^{p^{d/r}} - x, f) = 1.
    auto frobenius_iter = [&](int times) {
        FpPoly cur = poly_mod(make_poly({0, 1}, p), f, p);
        for (int i = 0; i < times; ++i) {
            FpPoly acc = make_poly({1}, p);
            FpPoly base = cur;
            std::int64_t e = p;
            while (e > 0) {
                if (e & 1) acc = poly_mod(poly_mul(acc, base, p), f, p);
                base = poly_mod(poly_mul(base, base, p), f, p);
                e >>= 1;
            }
            cur = acc;
        }
        return cur;
    };
    FpPoly x = make_poly({0, 1}, p);
    for (std::int64_t r : distinct_prime_factors(d)) {
        FpPoly xp = frobenius_iter(d / static_cast<int>(r));
        FpPoly g = poly_gcd(poly_sub(xp, x, p), f, p);
        if (g.degree() != 0) return false;
    }
    return poly_sub(frobenius_iter(d), x, p).is_zero();
}

bool is_primitive_poly(const FpPoly& f, std::int64_t p, int m) {
    if (f.degree() != m || !f.is_monic()) return false;
    if (f.coeff(0) == 0) return false;
    std::int64_t order = 1;
    for (int i = 0; i < m; ++i) order *= p;
    order -= 1;
    // order of x mod f is exactly p^m - 1
    FpPoly one = make_poly({1}, p);
    if (poly_x_powmod(order, f, p) != one) return false;
    for (std::int64_t r : distinct_prime_factors(order))
        if (poly_x_powmod(order / r, f, p) == one) return false;
    return true;
}

FpPoly find_primitive_poly(std::int64_t p, int m) {
    // Lexicographic over constant-first coefficient vectors (c0 compared
    // first); the first hit makes outputs reproducible across runs.
    std::vector<std::int64_t> c(static_cast<std::size_t>(m), 0);
    for (;;) {
        if (c[0] != 0) {
            std::vector<std::int64_t> coeffs = c;
            coeffs.push_back(1);
            FpPoly f{coeffs};
            if (is_primitive_poly(f, p, m)) return f;
        }
        int i = m - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == p - 1) {
            c[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
    }
    throw InternalError(Errc::InternalInconsistency,
                        "no primitive polynomial found (unreachable for prime p)");
}

FieldCtx build_field(const FieldParams& params) {
    const std::int64_t p = params.p;
    const int m = params.m;
    const int k = params.k;
    if (!is_prime(p) || p < 3)
        throw ParamError(Errc::NotPrime, "p must be an odd prime >= 3, got " + std::to_string(p));
    if (m < 3 || m % 2 == 0)
        throw ParamError(Errc::BadDegree, "m must be odd and >= 3, got " + std::to_string(m));
    if (k < 1 || std::gcd(static_cast<std::int64_t>(m), static_cast<std::int64_t>(k)) != 1)
        throw ParamError(Errc::GcdViolation,
                         "need k >= 1 with gcd(m, k) = 1, got m=" + std::to_string(m) +
                             " k=" + std::to_string(k));

    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kMaxFieldSize)
            throw ParamError(Errc::TableTooLarge,
                             "p^m exceeds the 2^24 eager-table limit");
    }

    FpPoly poly;
    if (params.prim_poly) {
        poly = *params.prim_poly;
        if (!is_primitive_poly(poly, p, m))
            throw ParamError(Errc::NotPrimitive,
                             "supplied prim_poly is not primitive of degree m over F_p");
    } else {
        poly = find_primitive_poly(p, m);
    }

    FieldCtx ctx;
    ctx.params_ = params;
    ctx.params_.prim_poly = poly;
    ctx.poly_ = poly;
    ctx.q_ = static_cast<std::uint32_t>(q);
    const std::uint32_t order = ctx.q_ - 1;

    ctx.pow_p_.resize(static_cast<std::size_t>(m) + 1);
    ctx.pow_p_[0] = 1;
    for (int i = 1; i <= m; ++i)
        ctx.pow_p_[static_cast<std::size_t>(i)] =
            ctx.pow_p_[static_cast<std::size_t>(i - 1)] * static_cast<std::uint32_t>(p);

    ctx.pi_ = GFElem{static_cast<std::uint32_t>(p)};

    // exp/log tables by repeated multiplication with x; every power must be
    // distinct or the polynomial was not primitive after all.
    ctx.exp_.assign(order, 0);
    ctx.log_.assign(ctx.q_, -1);
    {
        std::vector<std::int64_t> digits(static_cast<std::size_t>(m), 0);
        digits[0] = 1;
        auto encode = [&] {
            std::uint32_t v = 0;
            for (int i = 0; i < m; ++i)
                v += static_cast<std::uint32_t>(digits[static_cast<std::size_t>(i)]) *
                     ctx.pow_p_[static_cast<std::size_t>(i)];
            return v;
        };
        for (std::uint32_t e = 0; e < order; ++e) {
            std::uint32_t v = encode();
            if (ctx.log_[v] != -1)
                throw InternalError(Errc::InternalInconsistency,
                                    "antilog table collision; polynomial not primitive");
            ctx.exp_[e] = v;
            ctx.log_[v] = static_cast<std::int32_t>(e);
            // multiply by x mod poly
            std::int64_t carry = digits[static_cast<std::size_t>(m - 1)];
            for (int i = m - 1; i > 0; --i)
                digits[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i - 1)];
            digits[0] = 0;
            if (carry != 0) {
                for (int i = 0; i < m; ++i) {
                    std::int64_t d = digits[static_cast<std::size_t>(i)] -
                                     carry * poly.coeff(static_cast<std::size_t>(i));
                    d %= p;
                    if (d < 0) d += p;
                    digits[static_cast<std::size_t>(i)] = d;
                }
            }
        }
        if (encode() != 1)
            throw InternalError(Errc::InternalInconsistency,
                                "pi^(q-1) != 1 after table build");
    }

    // lambda: smallest nonsquare of F_p; m odd keeps it a nonsquare upstairs.
    for (std::int64_t a = 2; a < p; ++a) {
        if (legendre_symbol(a, p) == -1) {
            ctx.lambda_ = a;
            break;
        }
    }
    {
        GFElem lam = ctx.from_fp(ctx.lambda_);
        if (ctx.log(lam) % 2 == 0)
            throw InternalError(Errc::InternalInconsistency,
                                "lambda is a square in F_{p^m}");
    }

    ctx.e_pk1_ = (modpow_int(p, k, order) + 1) % order;
    {
        // ((p^k + 1)/2) mod (q-1): reduce p^k mod 2(q-1) first so the halving
        // stays exact (p^k is odd, 2(q-1) is even).
        std::int64_t r = modpow_int(p, k, 2 * static_cast<std::int64_t>(order));
        ctx.e_half_ = ((r + 1) / 2) % order;
    }

    // trace table via linearity over the basis traces
    ctx.tr_.assign(ctx.q_, 0);
    {
        std::vector<std::int64_t> tr_basis(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i) {
            GFElem eps{ctx.pow_p_[static_cast<std::size_t>(i)]};
            GFElem acc = eps;
            GFElem cur = eps;
            for (int j = 1; j < m; ++j) {
                cur = ctx.pow(cur, p);
                acc = ctx.add(acc, cur);
            }
            auto d = ctx.coords(acc);
            for (int j = 1; j < m; ++j)
                if (d[static_cast<std::size_t>(j)] != 0)
                    throw InternalError(Errc::InternalInconsistency,
                                        "trace of basis element not in F_p");
            tr_basis[static_cast<std::size_t>(i)] = d[0];
        }
        for (std::uint32_t v = 0; v < ctx.q_; ++v) {
            std::uint32_t rest = v;
            std::int64_t t = 0;
            for (int i = 0; i < m; ++i) {
                t += static_cast<std::int64_t>(rest % static_cast<std::uint32_t>(p)) *
                     tr_basis[static_cast<std::size_t>(i)];
                rest /= static_cast<std::uint32_t>(p);
            }
            ctx.tr_[v] = static_cast<std::uint8_t>(t % p);
        }
    }

    // power maps x -> x^2 and x -> x^{p^k+1}
    ctx.sq_.assign(ctx.q_, 0);
    ctx.pk1_.assign(ctx.q_, 0);
    for (std::uint32_t v = 1; v < ctx.q_; ++v) {
        std::uint64_t lg = static_cast<std::uint64_t>(ctx.log_[v]);
        ctx.sq_[v] = ctx.exp_[(2 * lg) % order];
        ctx.pk1_[v] = ctx.exp_[(static_cast<std::uint64_t>(ctx.e_pk1_) * lg) % order];
    }

    return ctx;
}

GFElem FieldCtx::from_fp(std::int64_t a) const {
    std::int64_t r = a % params_.p;
    if (r < 0) r += params_.p;
    return GFElem{static_cast<std::uint32_t>(r)};
}

GFElem FieldCtx::from_coords(std::span<const std::int64_t> coords) const {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < coords.size() && i < static_cast<std::size_t>(params_.m); ++i) {
        std::int64_t c = coords[i] % params_.p;
        if (c < 0) c += params_.p;
        v += static_cast<std::uint32_t>(c) * pow_p_[i];
    }
    return GFElem{v};
}

std::vector<std::int64_t> FieldCtx::coords(GFElem x) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(params_.m), 0);
    std::uint32_t rest = x.value;
    const auto p = static_cast<std::uint32_t>(params_.p);
    for (int i = 0; i < params_.m; ++i) {
        out[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
    }
    return out;
}

GFElem FieldCtx::add(GFElem a, GFElem b) const {
    const auto p = static_cast<std::uint32_t>(params_.p);
    std::uint32_t x = a.value, y = b.value, r = 0;
    for (int i = 0; i < params_.m; ++i) {
        std::uint32_t s = x % p + y % p;
        if (s >= p) s -= p;
        r += s * pow_p_[static_cast<std::size_t>(i)];
        x /= p;
        y /= p;
    }
    return GFElem{r};
}

GFElem FieldCtx::neg(GFElem a) const {
    const auto p = static_cast<std::uint32_t>(params_.p);
    std::uint32_t x = a.value, r = 0;
    for (int i = 0; i < params_.m; ++i) {
        std::uint32_t d = x % p;
        if (d != 0) d = p - d;
        r += d * pow_p_[static_cast<std::size_t>(i)];
        x /= p;
    }
    return GFElem{r};
}

GFElem FieldCtx::sub(GFElem a, GFElem b) const { return add(a, neg(b)); }

GFElem FieldCtx::mul(GFElem a, GFElem b) const {
    if (a.value == 0 || b.value == 0) return GFElem{0};
    std::uint32_t e = static_cast<std::uint32_t>(log_[a.value]) +
                      static_cast<std::uint32_t>(log_[b.value]);
    const std::uint32_t order = q_ - 1;
    if (e >= order) e -= order;
    return GFElem{exp_[e]};
}

GFElem FieldCtx::inv(GFElem a) const {
    if (a.value == 0) throw ParamError(Errc::ZeroElement, "inverse of zero");
    const std::uint32_t order = q_ - 1;
    std::uint32_t e = (order - static_cast<std::uint32_t>(log_[a.value])) % order;
    return GFElem{exp_[e]};
}

GFElem FieldCtx::pow(GFElem a, std::int64_t e) const {
    const std::int64_t order = q_ - 1;
    if (a.value == 0) {
        if (e > 0) return GFElem{0};
        if (e == 0) return one();
        throw ParamError(Errc::ZeroElement, "negative power of zero");
    }
    std::int64_t em = e % order;
    if (em < 0) em += order;
    std::uint64_t idx = static_cast<std::uint64_t>(log_[a.value]) * static_cast<std::uint64_t>(em) %
                        static_cast<std::uint64_t>(order);
    return GFElem{exp_[idx]};
}

GFElem FieldCtx::pi_pow(std::int64_t e) const {
    const std::int64_t order = q_ - 1;
    std::int64_t em = e % order;
    if (em < 0) em += order;
    return GFElem{exp_[static_cast<std::size_t>(em)]};
}

std::int64_t FieldCtx::log(GFElem a) const {
    if (a.value == 0) throw ParamError(Errc::ZeroElement, "log of zero");
    return log_[a.value];
}

bool FieldCtx::is_square(GFElem a) const {
    if (a.value == 0) return false;
    return log_[a.value] % 2 == 0;
}

std::string FieldCtx::to_string(GFElem a) const {
    auto c = coords(a);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << "]";
    return os.str();
}

std::int64_t trace(const FieldCtx& ctx, GFElem x) { return ctx.trace(x); }

int legendre(const FieldCtx& ctx, std::int64_t a) { return legendre_symbol(a, ctx.p()); }

int lambda_power_check(const FieldCtx& ctx) {
    GFElem lam = ctx.lambda_elem();
    GFElem r = ctx.pow(lam, ctx.half_pk1_exponent());
    if (r == lam) return 1;
    if (r == ctx.neg(lam)) return -1;
    throw InternalError(Errc::InternalInconsistency,
                        "lambda^{(1+p^k)/2} is neither lambda nor -lambda");
}

FpPoly minimal_poly(const FieldCtx& ctx, GFElem a) {
    if (a.value == 0) throw ParamError(Errc::ZeroElement, "minimal polynomial of zero");
    const std::int64_t p = ctx.p();

    std::vector<GFElem> conjugates;
    GFElem c = a;
    do {
        conjugates.push_back(c);
        c = ctx.frobenius(c);
    } while (c != a);

    // product of (x - c_i) with coefficients in F_{p^m}
    std::vector<GFElem> poly{ctx.one()};
    for (GFElem r : conjugates) {
        std::vector<GFElem> next(poly.size() + 1, ctx.zero());
        GFElem mr = ctx.neg(r);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], poly[i]);
            next[i] = ctx.add(next[i], ctx.mul(mr, poly[i]));
        }
        poly = std::move(next);
    }

    std::vector<std::int64_t> coeffs(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto d = ctx.coords(poly[i]);
        for (int j = 1; j < ctx.m(); ++j)
            if (d[static_cast<std::size_t>(j)] != 0)
                throw InternalError(Errc::InternalInconsistency,
                                    "minimal polynomial coefficient not in F_p");
        coeffs[i] = d[0];
    }
    FpPoly f = make_poly(std::move(coeffs), p);
    if (ctx.m() % f.degree() != 0)
        throw InternalError(Errc::InternalInconsistency,
                            "minimal polynomial degree does not divide m");
    return f;
}

}  // namespace cyclotome
