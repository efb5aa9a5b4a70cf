#pragma once

#include <cstdint>
#include <vector>

#include "cyclotome/cyc_int.hpp"
#include "cyclotome/gf.hpp"

namespace cyclotome {

/// The quadratic form Q_{u,v}(x) = Tr(u x^2 + v x^{p^k+1}) as a symmetric
/// m x m matrix A over F_p, so that X A X^T = Q_{u,v}(x) for X = coords(x).
struct QuadForm {
    int m = 0;
    std::int64_t p = 0;
    GFElem u, v;
    std::vector<std::int32_t> a;   // row-major, symmetric

    std::int32_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * m + j]; }
};

/// Rank and discriminant class of a diagonalized form. disc_class is the
/// Legendre symbol of the product of nonzero diagonal entries, the only
/// congruence invariant; it is 0 exactly when the rank is 0.
struct DiagResult {
    int rank = 0;
    int disc_class = 0;

    friend bool operator==(const DiagResult&, const DiagResult&) = default;
};

QuadForm build_form(const FieldCtx& ctx, GFElem u, GFElem v);

/// Symmetric congruence reduction (row+column operations, valid in odd
/// characteristic); returns the rank and discriminant class.
DiagResult diagonalize(const QuadForm& q);

/// Same reduction applied to a raw symmetric matrix; used by tests for
/// congruence-invariance checks.
DiagResult diagonalize_matrix(std::vector<std::int32_t> a, int m, std::int64_t p);

/// sum_{x in F_{p^m}} zeta_p^{F(x)} for a form of the given rank and
/// discriminant class, as an exact cyclotomic integer. Odd ranks involve
/// sqrt(+-p) and are expressed through the quadratic Gauss sum; even ranks
/// are rational integers.
CycInt gauss_sum_closed_form(const FieldCtx& ctx, DiagResult d);

/// sum_{y in F_p^*} sum_x zeta_p^{yF(x)}: 0 for odd rank, otherwise
/// eps * (p-1) * p^{m-r/2} with eps determined by the discriminant class
/// and p mod 4. Rank 0 gives (p-1)p^m.
std::int64_t y_summed_gauss(const FieldCtx& ctx, DiagResult d);

}  // namespace cyclotome
