#include "cyclotome/cyc_int.hpp"

#include <cassert>
#include <stdexcept>

namespace cyclotome {

CycInt::CycInt(int p) : counts_(static_cast<std::size_t>(p), 0) {
    assert(p >= 2);
}

CycInt CycInt::integer(int p, std::int64_t n) {
    CycInt z(p);
    z.counts_[0] = n;
    return z;
}

CycInt CycInt::from_counts(int p, std::span<const std::int64_t> counts) {
    assert(counts.size() == static_cast<std::size_t>(p));
    CycInt z(p);
    for (std::size_t i = 0; i < counts.size(); ++i) z.counts_[i] = counts[i];
    z.canonicalize();
    return z;
}

void CycInt::canonicalize() {
    // 1 + zeta + ... + zeta^{p-1} = 0, so shifting all counts by a constant
    // leaves the value unchanged; pin counts[p-1] to 0.
    std::int64_t top = counts_.back();
    if (top == 0) return;
    for (auto& c : counts_) c -= top;
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
    assert(p() == rhs.p());
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += rhs.counts_[i];
    canonicalize();
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
    assert(p() == rhs.p());
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] -= rhs.counts_[i];
    canonicalize();
    return *this;
}

CycInt& CycInt::operator*=(std::int64_t s) {
    for (auto& c : counts_) c *= s;
    return *this;
}

CycInt CycInt::operator*(const CycInt& rhs) const {
    assert(p() == rhs.p());
    const auto pp = counts_.size();
    CycInt out(static_cast<int>(pp));
    for (std::size_t i = 0; i < pp; ++i) {
        if (counts_[i] == 0) continue;
        for (std::size_t j = 0; j < pp; ++j) {
            if (rhs.counts_[j] == 0) continue;
            std::size_t e = i + j;
            if (e >= pp) e -= pp;
            out.counts_[e] += counts_[i] * rhs.counts_[j];
        }
    }
    out.canonicalize();
    return out;
}

bool CycInt::is_rational_integer() const {
    for (std::size_t i = 1; i < counts_.size(); ++i)
        if (counts_[i] != 0) return false;
    return true;
}

std::int64_t CycInt::to_integer() const {
    if (!is_rational_integer())
        throw std::logic_error("CycInt::to_integer on a non-rational value");
    return counts_[0];
}

CycInt quadratic_gauss_sum(int p) {
    CycInt g(p);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
    for (std::int64_t t = 0; t < p; ++t) ++counts[static_cast<std::size_t>(t * t % p)];
    return CycInt::from_counts(p, counts);
}

}  // namespace cyclotome
