#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclotome {

/// Polynomial over F_p. Coefficients are residues in [0, p-1], constant
/// term first, no trailing zeros; the zero polynomial has an empty
/// coefficient vector (degree -1).
struct FpPoly {
    std::vector<std::int64_t> coeffs;

    FpPoly() = default;
    explicit FpPoly(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    std::int64_t coeff(std::size_t i) const {
        return i < coeffs.size() ? coeffs[i] : 0;
    }

    friend bool operator==(const FpPoly&, const FpPoly&) = default;
};

/// Reduce coefficients mod p and strip trailing zeros.
FpPoly make_poly(std::vector<std::int64_t> coeffs, std::int64_t p);

FpPoly poly_add(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly poly_sub(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly poly_mul(const FpPoly& a, const FpPoly& b, std::int64_t p);

/// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly poly_mod(const FpPoly& a, const FpPoly& b, std::int64_t p);

/// x^n - 1 over F_p.
FpPoly poly_xn_minus_one(std::uint32_t n, std::int64_t p);

/// Reciprocal polynomial x^deg(f) * f(1/x), trailing zero coefficients of
/// the reversal stripped. Not normalized to monic.
FpPoly poly_reciprocal(const FpPoly& f, std::int64_t p);

/// Human-readable form, descending powers: "x^3 + 2x + 1".
std::string to_string(const FpPoly& f);

/// JSON wire form: array of integer coefficients, constant term first.
std::string poly_to_json(const FpPoly& f);

}  // namespace cyclotome
