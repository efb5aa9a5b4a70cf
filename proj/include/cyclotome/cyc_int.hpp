#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cyclotome {

/// Exact element of Z[zeta_p], zeta_p a primitive p-th root of unity,
/// stored as integer counts (n_0, ..., n_{p-1}) of each power of zeta.
/// Canonical form has n_{p-1} = 0 (subtract n_{p-1} from every coordinate,
/// using 1 + zeta + ... + zeta^{p-1} = 0); all operations return canonical
/// values, so equality is coordinate-wise.
class CycInt {
  public:
    explicit CycInt(int p);
    static CycInt integer(int p, std::int64_t n);
    static CycInt from_counts(int p, std::span<const std::int64_t> counts);

    int p() const { return static_cast<int>(counts_.size()); }
    const std::vector<std::int64_t>& counts() const { return counts_; }

    CycInt& operator+=(const CycInt& rhs);
    CycInt& operator-=(const CycInt& rhs);
    CycInt& operator*=(std::int64_t s);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, std::int64_t s) { return a *= s; }
    CycInt operator*(const CycInt& rhs) const;   // ring product

    friend bool operator==(const CycInt&, const CycInt&) = default;

    bool is_rational_integer() const;
    /// The value as a plain integer; only valid when is_rational_integer().
    std::int64_t to_integer() const;

  private:
    void canonicalize();
    std::vector<std::int64_t> counts_;
};

/// Quadratic Gauss sum g = sum_{t mod p} zeta_p^{t^2}. Satisfies
/// g^2 = (-1)^{(p-1)/2} p, which is how square roots of +-p stay exact.
CycInt quadratic_gauss_sum(int p);

}  // namespace cyclotome
