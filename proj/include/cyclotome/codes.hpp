#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclotome/charsum.hpp"
#include "cyclotome/gf.hpp"

namespace cyclotome {

/// The cyclic code of length p^m - 1 and dimension 3m whose parity-check
/// polynomial h is the product of the minimal polynomials h0, h1, h2 of
/// pi^{-1}, (-pi)^{-1} and pi^{-(p^k+1)/2}. The context must outlive the
/// spec.
struct CyclicCodeSpec {
    const FieldCtx* ctx = nullptr;
    FpPoly h0, h1, h2;
    FpPoly h;            // h0 * h1 * h2, degree 3m, divides x^n - 1
    std::uint32_t n = 0;
    int dim = 0;

    const FieldCtx& field() const { return *ctx; }
};

/// Builds the code spec; DegenerateCosets if any minimal polynomial has
/// degree < m or two coincide.
CyclicCodeSpec build_code(const FieldCtx& ctx);

struct Codeword {
    std::vector<std::uint8_t> symbols;   // n residues mod p
    GFElem a, b, c;
};

/// c_{(a,b,c)} with symbols[t] = Tr(a pi^t + b (-pi)^t + c pi^{(p^k+1)t/2}).
Codeword codeword(const CyclicCodeSpec& spec, GFElem a, GFElem b, GFElem c);

/// Hamming weight by direct count.
std::uint32_t weight_of(const CyclicCodeSpec& spec, const Codeword& w);

/// Membership via the parity-check relation c(x) * h(x) = 0 mod x^n - 1.
bool contains(const CyclicCodeSpec& spec, std::span<const std::uint8_t> symbols);

/// Weight distribution: ascending (weight, frequency) pairs with
/// frequencies totalling p^{3m}.
struct WeightDist {
    std::uint32_t n = 0;
    int dim = 0;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> entries;

    std::uint64_t total() const;
    friend bool operator==(const WeightDist&, const WeightDist&) = default;
};

/// Ground-truth oracle: enumerate all p^{3m} labels and count weights
/// directly. Guarded by p^{3m} <= 2^26 (TooLarge beyond).
WeightDist weight_dist_bruteforce(const CyclicCodeSpec& spec, std::size_t threads = 0);

/// Weight distribution through the character-sum value distribution:
/// weight = p^m - p^{m-1} - V/(2p) per value V. The division is exact for
/// every value the sums can take; a remainder throws NonDivisibleValue.
WeightDist weight_dist_charsum(const CyclicCodeSpec& spec, std::size_t threads = 0);

/// Closed-form distribution evaluated symbolically.
WeightDist weight_dist_closed_form(const CyclicCodeSpec& spec);

/// "1 + 52z^9 + 936z^12 + ..." (ascending powers).
std::string enumerator_string(const WeightDist& d);

/// {"n":..., "dim":..., "entries":[{"weight":..., "freq":...}, ...],
///  "enumerator":"..."} rendered with sorted keys, 2-space indent.
std::string dist_to_json(const WeightDist& d);

/// Header "weight,frequency", one row per entry, ascending.
std::string dist_to_csv(const WeightDist& d);

}  // namespace cyclotome
