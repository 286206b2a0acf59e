#include "k3lat/cyclo.hpp"

#include <optional>
#include <sstream>

namespace k3lat {

CycInt::CycInt(int p, std::vector<Int> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 3) throw Error("CycInt: p must be an odd prime >= 3");
    if (c_.size() != static_cast<std::size_t>(p - 1))
        throw Error("CycInt: expected p-1 coefficients");
}

CycInt CycInt::from_int(int p, const Int& n) {
    std::vector<Int> c(p - 1, Int(0));
    c[0] = n;
    return CycInt(p, std::move(c));
}

CycInt CycInt::omega_pow(int p, int k) {
    k %= p;
    if (k < 0) k += p;
    std::vector<Int> c(p - 1, Int(0));
    if (k < p - 1) {
        c[k] = 1;
    } else {
        for (auto& x : c) x = -1;  // w^{p-1}
    }
    return CycInt(p, std::move(c));
}

bool CycInt::is_zero() const {
    for (const Int& x : c_)
        if (x != 0) return false;
    return true;
}

void CycInt::check_same(const CycInt& o) const {
    if (p_ != o.p_) throw Error("CycInt: mixed primes");
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_same(o);
    std::vector<Int> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return CycInt(p_, std::move(c));
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_same(o);
    std::vector<Int> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return CycInt(p_, std::move(c));
}

CycInt CycInt::operator-() const {
    std::vector<Int> c(c_);
    for (auto& x : c) x = -x;
    return CycInt(p_, std::move(c));
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_same(o);
    const int n = p_ - 1;
    std::vector<Int> prod(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    // reduce top-down with w^{p-1} = -(1 + w + ... + w^{p-2})
    for (int k = 2 * n - 2; k >= n; --k) {
        if (prod[k] == 0) continue;
        Int v = prod[k];
        prod[k] = 0;
        // w^k = w^{k-(p-1)} * w^{p-1} = -w^{k-p+1} * (1 + ... + w^{p-2})
        for (int j = 0; j < n; ++j) prod[k - p_ + 1 + j] -= v;
    }
    prod.resize(n);
    return CycInt(p_, std::move(prod));
}

CycInt CycInt::galois(int i) const {
    if (i < 1 || i > p_ - 1) throw Error("CycInt: bad Galois index");
    CycInt acc = CycInt::zero(p_);
    for (int j = 0; j < p_ - 1; ++j) {
        if (c_[j] == 0) continue;
        CycInt term = omega_pow(p_, (i * j) % p_);
        for (auto& x : term.c_) x *= c_[j];
        acc = acc + term;
    }
    return acc;
}

Int CycInt::trace() const {
    // Tr(sum c_j w^j) = c_0 (p-1) - sum_{j>=1} c_j
    Int t = c_[0] * (p_ - 1);
    for (int j = 1; j < p_ - 1; ++j) t -= c_[j];
    return t;
}

Int CycInt::norm() const {
    CycInt prod = *this;
    for (int i = 2; i <= p_ - 1; ++i) prod = prod * galois(i);
    // the result is rational, i.e. all non-constant coefficients vanish
    for (int j = 1; j < p_ - 1; ++j)
        if (prod.c_[j] != 0) throw Error("CycInt: norm not rational (internal)");
    return prod.c_[0];
}

std::string CycInt::str() const {
    std::ostringstream os;
    os << "[";
    for (int j = 0; j < p_ - 1; ++j) {
        if (j) os << ",";
        os << c_[j].get_str();
    }
    os << "]";
    return os.str();
}

std::optional<CycInt> divide_exact(const CycInt& z, const CycInt& w) {
    if (w.is_zero()) throw Error("divide_exact: division by zero");
    if (z.p() != w.p()) throw Error("divide_exact: mixed primes");
    // z/w = z * prod_{i>=2} galois_i(w) / Norm(w)
    CycInt num = z;
    for (int i = 2; i <= z.p() - 1; ++i) num = num * w.galois(i);
    Int nw = w.norm();
    std::vector<Int> q(z.p() - 1);
    for (int j = 0; j < z.p() - 1; ++j) {
        if (mod_floor(num.coeffs()[j], abs(nw)) != 0) return std::nullopt;
        q[j] = num.coeffs()[j] / nw;
    }
    return CycInt(z.p(), std::move(q));
}

Rat trace_form(const CycInt& h) { return make_rat(-h.trace(), h.p()); }

}  // namespace k3lat
