#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclotome/errors.hpp"
#include "cyclotome/fp_poly.hpp"

namespace cyclotome {

/// Element of F_{p^m} in polynomial-basis coordinates, packed base p:
/// value = sum_i coords[i] * p^i over the basis {1, x, ..., x^{m-1}}.
/// The zero element is value 0; coordinates never leave [0, p-1].
struct GFElem {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(const GFElem&, const GFElem&) = default;
};

struct FieldParams {
    std::int64_t p = 0;                  // odd prime >= 3
    int m = 0;                           // odd extension degree >= 3
    int k = 1;                           // exponent parameter, gcd(m, k) = 1
    std::optional<FpPoly> prim_poly;     // monic degree-m; searched when absent
};

/// Immutable description of F_p and F_{p^m}: primitive element, log/antilog
/// tables, trace table, power maps x -> x^2 and x -> x^{p^k+1}, and the
/// canonical nonsquare lambda of F_p. Safe to share across threads; every
/// operation is a pure function of (ctx, inputs).
class FieldCtx {
  public:
    const FieldParams& params() const { return params_; }
    std::int64_t p() const { return params_.p; }
    int m() const { return params_.m; }
    int k() const { return params_.k; }
    std::uint32_t q() const { return q_; }                 // p^m
    std::uint32_t group_order() const { return q_ - 1; }   // |F^*|
    const FpPoly& prim_poly() const { return poly_; }

    GFElem zero() const { return GFElem{0}; }
    GFElem one() const { return GFElem{1}; }
    GFElem pi() const { return pi_; }
    /// Smallest nonsquare of F_p, as an integer representative.
    std::int64_t lambda() const { return lambda_; }
    GFElem lambda_elem() const { return from_fp(lambda_); }

    GFElem from_fp(std::int64_t a) const;
    GFElem from_coords(std::span<const std::int64_t> coords) const;
    std::vector<std::int64_t> coords(GFElem x) const;

    GFElem add(GFElem a, GFElem b) const;
    GFElem sub(GFElem a, GFElem b) const;
    GFElem neg(GFElem a) const;
    GFElem mul(GFElem a, GFElem b) const;
    GFElem inv(GFElem a) const;                    // ZeroElement on 0
    /// a^e with e any integer; negative exponents reduced mod p^m - 1.
    GFElem pow(GFElem a, std::int64_t e) const;
    GFElem pi_pow(std::int64_t e) const;           // pi^e, e any integer
    std::int64_t log(GFElem a) const;              // ZeroElement on 0
    GFElem frobenius(GFElem a) const { return pow(a, params_.p); }

    GFElem square(GFElem a) const { return GFElem{sq_[a.value]}; }
    GFElem pk1_power(GFElem a) const { return GFElem{pk1_[a.value]}; }
    /// Tr(x) = x + x^p + ... + x^{p^{m-1}}, as a residue in [0, p-1].
    std::int64_t trace(GFElem a) const { return tr_[a.value]; }

    /// (p^k + 1) mod (p^m - 1) and ((p^k + 1)/2) mod (p^m - 1).
    std::int64_t pk1_exponent() const { return e_pk1_; }
    std::int64_t half_pk1_exponent() const { return e_half_; }

    bool is_square(GFElem a) const;    // in F_{p^m}; false for 0
    std::string to_string(GFElem a) const;

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) = default;
    FieldCtx& operator=(FieldCtx&&) = default;

  private:
    friend FieldCtx build_field(const FieldParams& params);
    FieldCtx() = default;

    FieldParams params_;
    FpPoly poly_;
    std::uint32_t q_ = 0;
    GFElem pi_;
    std::int64_t lambda_ = 0;
    std::int64_t e_pk1_ = 0;
    std::int64_t e_half_ = 0;
    std::vector<std::uint32_t> pow_p_;   // p^0 .. p^m
    std::vector<std::int32_t> log_;      // index -> exponent; -1 at 0
    std::vector<std::uint32_t> exp_;     // exponent -> index, length q-1
    std::vector<std::uint8_t> tr_;       // index -> trace residue
    std::vector<std::uint32_t> sq_;      // index -> index of x^2
    std::vector<std::uint32_t> pk1_;     // index -> index of x^{p^k+1}
};

/// Validate parameters, pick or verify the primitive polynomial, and build
/// all lookup tables. Tables are eager; fields beyond p^m = 2^24 are
/// rejected with TableTooLarge.
FieldCtx build_field(const FieldParams& params);

std::int64_t trace(const FieldCtx& ctx, GFElem x);

/// Legendre symbol of a mod p: 0, +1 (nonzero square), -1 (nonsquare).
int legendre(const FieldCtx& ctx, std::int64_t a);
int legendre_symbol(std::int64_t a, std::int64_t p);

/// Computes lambda^{(1+p^k)/2} in F_{p^m}; +1 if it equals lambda, -1 if
/// it equals -lambda. Anything else throws InternalInconsistency.
int lambda_power_check(const FieldCtx& ctx);

/// Monic minimal polynomial of a over F_p (product over the Frobenius
/// orbit of a); degree divides m. ZeroElement on a = 0.
FpPoly minimal_poly(const FieldCtx& ctx, GFElem a);

// Primality and polynomial predicates behind build_field, exposed for
// reuse and testing.
bool is_prime(std::int64_t n);
std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);
bool is_irreducible_poly(const FpPoly& f, std::int64_t p);
/// True iff f is monic of degree m and the class of x in F_p[x]/(f) has
/// multiplicative order exactly p^m - 1.
bool is_primitive_poly(const FpPoly& f, std::int64_t p, int m);
/// First primitive polynomial in lexicographic order of constant-first
/// coefficient vectors (c0 compared first).
FpPoly find_primitive_poly(std::int64_t p, int m);

}  // namespace cyclotome
