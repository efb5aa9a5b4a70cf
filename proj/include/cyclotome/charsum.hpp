#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "cyclotome/gf.hpp"

namespace cyclotome {

/// Below this field size every rank-based D evaluation is cross-checked
/// against the direct counting oracle.
inline constexpr std::uint32_t kOracleCrosscheckMaxQ = 243;

/// D(u,v) = sum_{y in F_p^*} sum_{x in F_{p^m}} zeta_p^{y Tr(u x^2 + v x^{p^k+1})}
/// by direct counting in Z[zeta_p]. The sum is always a rational integer;
/// anything else throws NonIntegerSum.
std::int64_t d_direct(const FieldCtx& ctx, GFElem u, GFElem v);

/// Same value through the quadratic-form rank path: diagonalize Q_{u,v}
/// and apply the y-summed Gauss sum. Contractually equal to d_direct.
std::int64_t d_fast(const FieldCtx& ctx, GFElem u, GFElem v);

/// D(u,v) for all u at fixed v != 0, with tallies of the three possible
/// values 0 and +-(p-1)p^{(m+1)/2}.
struct DTable {
    GFElem v;
    std::vector<std::int64_t> values;   // indexed by u.value
    std::uint64_t n_zero = 0;
    std::uint64_t n_plus = 0;
    std::uint64_t n_minus = 0;
};

DTable d_table(const FieldCtx& ctx, GFElem v);   // ZeroV on v = 0

struct DTally {
    std::uint64_t n_zero = 0;
    std::uint64_t n_plus = 0;
    std::uint64_t n_minus = 0;
};

/// Closed-form tallies for any fixed v != 0:
/// (p^m - p^{m-1}, (p^{m-1}+p^{(m-1)/2})/2, (p^{m-1}-p^{(m-1)/2})/2).
DTally expected_d_tally(const FieldCtx& ctx);

/// S(a,b,c) = D(a+b,c) + D(a-b,c). Defined for even k only (WrongParity
/// otherwise).
std::int64_t s_value(const FieldCtx& ctx, GFElem a, GFElem b, GFElem c);

/// T(a,b,c) = D(a+b,c) + D(a-b,-c). Defined for odd k only.
std::int64_t t_value(const FieldCtx& ctx, GFElem a, GFElem b, GFElem c);

/// The seven values S (or T) can take:
/// {0, (p-1)p^m, 2(p-1)p^m, +-(p-1)p^{(m+1)/2}, +-2(p-1)p^{(m+1)/2}}.
std::array<std::int64_t, 7> s_value_set(const FieldCtx& ctx);

/// value -> number of (a,b,c) triples attaining it; frequencies total p^{3m}.
using ValueDist = std::map<std::int64_t, std::uint64_t>;

/// Exact value distribution of S (even k) or T (odd k) over all p^{3m}
/// triples, without triple enumeration: (a,b) -> (a+b, a-b) is a bijection
/// of F_{p^m}^2 for odd p, so per-c frequencies are convolutions of the
/// D-value tallies at c (and -c for odd k).
ValueDist s_distribution(const FieldCtx& ctx, std::size_t threads = 0);

/// Closed-form distribution the computation must reproduce.
ValueDist expected_s_distribution(const FieldCtx& ctx);

}  // namespace cyclotome
