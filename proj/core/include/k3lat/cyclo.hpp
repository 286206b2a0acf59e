#pragma once

#include "k3lat/numeric.hpp"

#include <optional>
#include <vector>

namespace k3lat {

// Element of Z[omega_p], p an odd prime, on the power basis 1, w, ..., w^{p-2}
// (reduction uses w^{p-1} = -(1 + w + ... + w^{p-2})).
class CycInt {
public:
    CycInt() = default;
    CycInt(int p, std::vector<Int> coeffs);
    static CycInt zero(int p) { return CycInt(p, std::vector<Int>(p - 1, Int(0))); }
    static CycInt from_int(int p, const Int& n);
    static CycInt omega_pow(int p, int k);  // w^k, any integer k

    int p() const { return p_; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    bool operator==(const CycInt& o) const = default;

    CycInt galois(int i) const;  // w -> w^i, 1 <= i <= p-1
    CycInt conj() const { return galois(p_ - 1); }

    // trace to Z: Tr(w^k) = -1 for k != 0 mod p
    Int trace() const;
    // norm to Z: product of all Galois conjugates
    Int norm() const;

    std::string str() const;

private:
    void check_same(const CycInt& o) const;
    int p_ = 0;
    std::vector<Int> c_;
};

// z/w if it lies in Z[omega_p]; nullopt signals a failed congruence.
std::optional<CycInt> divide_exact(const CycInt& z, const CycInt& w);

inline bool divides(const CycInt& w, const CycInt& z) {
    return divide_exact(z, w).has_value();
}

// The bilinear-form scalar of the trace construction: -(1/p) Tr(h).
Rat trace_form(const CycInt& h);

}  // namespace k3lat
