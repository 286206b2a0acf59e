#pragma once

#include "k3lat/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace k3lat {

// Dense univariate polynomial over the rationals, coefficients stored in
// ascending degree with no trailing zeros.  The zero polynomial has an empty
// coefficient vector and degree -1.
class PolyQ {
  public:
    PolyQ() = default;
    explicit PolyQ(const Rat& c0);
    explicit PolyQ(std::vector<Rat> coeffs);

    static PolyQ t();                       // the variable
    static PolyQ monomial(std::size_t deg, const Rat& c = Rat(1));

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& leading() const;
    Rat coeff(std::size_t i) const;         // 0 beyond the degree
    const std::vector<Rat>& coeffs() const { return c_; }

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rat& s) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyQ& o) const { return c_ != o.c_; }

    PolyQ derivative() const;
    Rat eval(const Rat& x) const;
    PolyQ monic() const;
    std::string str() const;                // e.g. "t^2 - 1/3"

  private:
    void trim();
    std::vector<Rat> c_;
};

PolyQ pow(const PolyQ& base, std::size_t e);

// Euclidean division: f = q * g + r with deg r < deg g.  Throws on g = 0.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& f, const PolyQ& g);

// Monic gcd; gcd(0, 0) = 0.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

// Yun's square-free decomposition f = c * prod f_i^{m_i} with the f_i monic,
// square-free and pairwise coprime.  Returns the (f_i, m_i) pairs with
// deg f_i > 0, in increasing multiplicity.
std::vector<std::pair<PolyQ, std::size_t>> squarefree_factor(const PolyQ& f);

// Order of vanishing of f at a root of the irreducible-or-squarefree place
// polynomial g: the largest k with g^k | f.  Throws if f = 0.
std::size_t vanishing_order(const PolyQ& f, const PolyQ& g);

// Reduced fraction of polynomials with monic denominator.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(PolyQ num, PolyQ den = PolyQ(Rat(1)));

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void reduce();
    PolyQ num_, den_;
};

RatFunc pow(const RatFunc& base, std::size_t e);

}  // namespace k3lat
