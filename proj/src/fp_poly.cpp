#include "cyclotome/fp_poly.hpp"

#include <cassert>
#include <sstream>

namespace cyclotome {

namespace {

std::int64_t fp_reduce(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

void strip(std::vector<std::int64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

FpPoly make_poly(std::vector<std::int64_t> coeffs, std::int64_t p) {
    for (auto& c : coeffs) c = fp_reduce(c, p);
    strip(coeffs);
    return FpPoly{std::move(coeffs)};
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    std::vector<std::int64_t> r(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp_reduce(a.coeff(i) + b.coeff(i), p);
    strip(r);
    return FpPoly{std::move(r)};
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    std::vector<std::int64_t> r(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp_reduce(a.coeff(i) - b.coeff(i), p);
    strip(r);
    return FpPoly{std::move(r)};
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    if (a.is_zero() || b.is_zero()) return FpPoly{};
    std::vector<std::int64_t> r(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r[i + j] = (r[i + j] + a.coeffs[i] * b.coeffs[j]) % p;
    }
    strip(r);
    return FpPoly{std::move(r)};
}

std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    assert(!b.is_zero());
    if (a.degree() < b.degree()) return {FpPoly{}, a};
    std::vector<std::int64_t> rem = a.coeffs;
    std::vector<std::int64_t> quot(a.coeffs.size() - b.coeffs.size() + 1, 0);
    // leading coefficient inverse via Fermat
    std::int64_t lead_inv = 1;
    {
        std::int64_t base = b.coeffs.back() % p, e = p - 2, acc = 1;
        while (e > 0) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = acc;
    }
    for (int i = static_cast<int>(rem.size()) - 1; i >= b.degree(); --i) {
        std::int64_t f = rem[i] * lead_inv % p;
        if (f == 0) continue;
        quot[i - b.degree()] = f;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            auto idx = i - b.degree() + j;
            rem[idx] = fp_reduce(rem[idx] - f * b.coeffs[j], p);
        }
    }
    strip(rem);
    strip(quot);
    return {FpPoly{std::move(quot)}, FpPoly{std::move(rem)}};
}

FpPoly poly_mod(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    return poly_divmod(a, b, p).second;
}

FpPoly poly_xn_minus_one(std::uint32_t n, std::int64_t p) {
    std::vector<std::int64_t> c(n + 1, 0);
    c[0] = p - 1;
    c[n] = 1;
    return FpPoly{std::move(c)};
}

FpPoly poly_reciprocal(const FpPoly& f, std::int64_t p) {
    std::vector<std::int64_t> r(f.coeffs.rbegin(), f.coeffs.rend());
    strip(r);
    (void)p;
    return FpPoly{std::move(r)};
}

std::string to_string(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        std::int64_t c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::string poly_to_json(const FpPoly& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i) os << ",";
        os << f.coeffs[i];
    }
    os << "]";
    return os.str();
}

}  // namespace cyclotome
