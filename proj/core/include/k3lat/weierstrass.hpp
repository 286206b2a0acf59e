#pragma once

#include "k3lat/poly.hpp"

#include <cstddef>
#include <map>
#include <optional>

namespace k3lat {

// Long Weierstrass equation y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// over the rational function field Q(t).
struct WeierstrassCurve {
    RatFunc a1, a2, a3, a4, a6;
    bool is_short() const { return a1.is_zero() && a2.is_zero() && a3.is_zero(); }
};

struct CurvePoint {
    bool infinity = true;
    RatFunc x, y;
    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(RatFunc px, RatFunc py) {
        return CurvePoint{false, std::move(px), std::move(py)};
    }
    bool operator==(const CurvePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

struct CurveInvariants {
    RatFunc b2, b4, b6, b8, c4, delta;
};

CurveInvariants curve_invariants(const WeierstrassCurve& c);
RatFunc discriminant(const WeierstrassCurve& c);

bool on_curve(const WeierstrassCurve& c, const CurvePoint& p);

// One place of the base P^1: a monic square-free polynomial (every root is a
// fiber of the stated type), or the point at infinity.
struct FiberPlace {
    bool at_infinity = false;
    PolyQ place;                // monic, square-free; unused at infinity
    std::size_t num_fibers = 1; // deg(place), or 1 at infinity
    std::size_t delta_ord = 0;
    std::size_t c4_ord = 0;     // 0 for every I_n fiber
    std::size_t n = 0;          // fiber type I_n
};

struct FiberReport {
    RatFunc delta;
    std::vector<FiberPlace> places;
    std::map<std::size_t, std::size_t> multiset;  // n -> number of I_n fibers
    std::size_t total_multiplicity() const;       // sums to 24 for K3 models
};

// Classifies the singular fibers of a K3 Weierstrass model.  Only multiplicative
// fibers are in scope: a discriminant root where c4 also vanishes throws.
FiberReport fiber_analysis(const WeierstrassCurve& c);

CurvePoint group_neg(const WeierstrassCurve& c, const CurvePoint& p);
CurvePoint group_add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q);

// Smallest n <= cap with n*P = O; empty if no such n exists below the cap.
std::optional<std::size_t> point_order(const WeierstrassCurve& c, const CurvePoint& p,
                                       std::size_t cap);

// The three torsion families.  Each returns the curve together with its
// torsion section, already checked to lie on the curve.
std::pair<WeierstrassCurve, CurvePoint> family3(const PolyQ& l, const PolyQ& m);
std::pair<WeierstrassCurve, CurvePoint> family5(const PolyQ& a, const PolyQ& b);
std::pair<WeierstrassCurve, CurvePoint> family7();

}  // namespace k3lat
