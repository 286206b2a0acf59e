#include "k3lat/weierstrass.hpp"

namespace k3lat {

CurveInvariants curve_invariants(const WeierstrassCurve& c) {
    CurveInvariants v;
    v.b2 = c.a1 * c.a1 + RatFunc(Rat(4)) * c.a2;
    v.b4 = RatFunc(Rat(2)) * c.a4 + c.a1 * c.a3;
    v.b6 = c.a3 * c.a3 + RatFunc(Rat(4)) * c.a6;
    v.b8 = c.a1 * c.a1 * c.a6 + RatFunc(Rat(4)) * c.a2 * c.a6 - c.a1 * c.a3 * c.a4 +
           c.a2 * c.a3 * c.a3 - c.a4 * c.a4;
    v.c4 = v.b2 * v.b2 - RatFunc(Rat(24)) * v.b4;
    v.delta = -v.b2 * v.b2 * v.b8 - RatFunc(Rat(8)) * v.b4 * v.b4 * v.b4 -
              RatFunc(Rat(27)) * v.b6 * v.b6 + RatFunc(Rat(9)) * v.b2 * v.b4 * v.b6;
    return v;
}

RatFunc discriminant(const WeierstrassCurve& c) {
    if (c.is_short()) {
        // for y^2 = x^3 + Ax + B we report the classical 4A^3 + 27B^2, which
        // differs from the b-invariant discriminant by the constant -16
        return RatFunc(Rat(4)) * pow(c.a4, 3) + RatFunc(Rat(27)) * pow(c.a6, 2);
    }
    return curve_invariants(c).delta;
}

bool on_curve(const WeierstrassCurve& c, const CurvePoint& p) {
    if (p.infinity) return true;
    RatFunc lhs = p.y * p.y + c.a1 * p.x * p.y + c.a3 * p.y;
    RatFunc rhs = pow(p.x, 3) + c.a2 * p.x * p.x + c.a4 * p.x + c.a6;
    return lhs == rhs;
}

std::size_t FiberReport::total_multiplicity() const {
    std::size_t total = 0;
    for (const FiberPlace& pl : places) total += pl.num_fibers * pl.delta_ord;
    return total;
}

FiberReport fiber_analysis(const WeierstrassCurve& c) {
    CurveInvariants inv = curve_invariants(c);
    RatFunc disc = discriminant(c);
    if (disc.is_zero()) throw Error("DegenerateFamily: identically zero discriminant");
    if (!disc.is_polynomial() || !inv.c4.is_polynomial())
        throw Error("fiber analysis requires polynomial discriminant and c4");
    PolyQ delta = disc.num() * (Rat(1) / disc.den().coeff(0));
    PolyQ c4 = inv.c4.num() * (Rat(1) / inv.c4.den().coeff(0));
    if (delta.degree() > 24)
        throw Error("fiber analysis: discriminant degree exceeds the K3 bound");

    FiberReport rep;
    rep.delta = disc;
    for (const auto& [f, mult] : squarefree_factor(delta)) {
        if (poly_gcd(f, c4).degree() > 0)
            throw Error("NonMinimalOrNonIn: c4 vanishes at a discriminant root");
        FiberPlace pl;
        pl.place = f;
        pl.num_fibers = static_cast<std::size_t>(f.degree());
        pl.delta_ord = mult;
        pl.c4_ord = 0;
        pl.n = mult;
        rep.multiset[mult] += pl.num_fibers;
        rep.places.push_back(std::move(pl));
    }
    // place at infinity under the degree-24 homogenization
    std::size_t inf_ord = 24 - static_cast<std::size_t>(delta.degree());
    if (inf_ord > 0) {
        std::size_t c4_inf = c4.is_zero() ? 8 : 8 - static_cast<std::size_t>(c4.degree());
        if (c4_inf > 0)
            throw Error("NonMinimalOrNonIn: c4 vanishes at the fiber over infinity");
        FiberPlace pl;
        pl.at_infinity = true;
        pl.delta_ord = inf_ord;
        pl.n = inf_ord;
        rep.multiset[inf_ord] += 1;
        rep.places.push_back(std::move(pl));
    }
    return rep;
}

CurvePoint group_neg(const WeierstrassCurve& c, const CurvePoint& p) {
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, -p.y - c.a1 * p.x - c.a3);
}

CurvePoint group_add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q) {
    if (!on_curve(c, p) || !on_curve(c, q)) throw Error("PointNotOnCurve");
    if (p.infinity) return q;
    if (q.infinity) return p;
    RatFunc lambda;
    if (p.x == q.x) {
        if (q.y == -p.y - c.a1 * p.x - c.a3) return CurvePoint::at_infinity();
        RatFunc den = RatFunc(Rat(2)) * p.y + c.a1 * p.x + c.a3;
        lambda = (RatFunc(Rat(3)) * p.x * p.x + RatFunc(Rat(2)) * c.a2 * p.x + c.a4 -
                  c.a1 * p.y) /
                 den;
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    RatFunc nu = p.y - lambda * p.x;
    RatFunc x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x;
    RatFunc y3 = -(lambda + c.a1) * x3 - nu - c.a3;
    return CurvePoint::affine(x3, y3);
}

std::optional<std::size_t> point_order(const WeierstrassCurve& c, const CurvePoint& p,
                                       std::size_t cap) {
    if (!on_curve(c, p)) throw Error("PointNotOnCurve");
    CurvePoint acc = p;
    for (std::size_t n = 1; n <= cap; ++n) {
        if (acc.infinity) return n;
        acc = group_add(c, acc, p);
    }
    return std::nullopt;
}

std::pair<WeierstrassCurve, CurvePoint> family3(const PolyQ& l, const PolyQ& m) {
    if (l.degree() > 2 || m.degree() > 6) throw Error("family3: degree bounds are 2 and 6");
    RatFunc lf{l}, mf{m};
    WeierstrassCurve c;
    c.a4 = RatFunc(Rat(2)) * lf * mf + pow(lf, 4) * RatFunc(make_rat(1, 3));
    c.a6 = mf * mf - pow(lf, 6) * RatFunc(make_rat(1, 27));
    if (discriminant(c).is_zero()) throw Error("DegenerateFamily");
    CurvePoint p = CurvePoint::affine(lf * lf * RatFunc(make_rat(1, 3)),
                                      pow(lf, 3) * RatFunc(make_rat(1, 3)) + mf);
    if (!on_curve(c, p)) throw Error("family3: section fails the curve equation (internal)");
    return {c, p};
}

std::pair<WeierstrassCurve, CurvePoint> family5(const PolyQ& a, const PolyQ& b) {
    if (a.degree() > 2 || b.degree() > 2) throw Error("family5: degree bounds are 2 and 2");
    RatFunc af{a}, bf{b};
    RatFunc a2 = af * af, b2 = bf * bf;
    WeierstrassCurve c;
    c.a4 = (-b2 * b2 + b2 * a2 - a2 * a2 - RatFunc(Rat(3)) * af * bf * b2 +
            RatFunc(Rat(3)) * af * a2 * bf) *
           RatFunc(make_rat(1, 3));
    c.a6 = (b2 + a2) *
           (RatFunc(Rat(19)) * b2 * b2 - RatFunc(Rat(34)) * b2 * a2 +
            RatFunc(Rat(19)) * a2 * a2 + RatFunc(Rat(18)) * af * bf * b2 -
            RatFunc(Rat(18)) * af * a2 * bf) *
           RatFunc(make_rat(1, 108));
    if (discriminant(c).is_zero()) throw Error("DegenerateFamily");
    CurvePoint p = CurvePoint::affine(
        (RatFunc(Rat(2)) * b2 - a2) * RatFunc(make_rat(1, 3)),
        (af + bf) * (af - bf) * (af - bf) * RatFunc(make_rat(1, 2)));
    if (!on_curve(c, p)) throw Error("family5: section fails the curve equation (internal)");
    return {c, p};
}

std::pair<WeierstrassCurve, CurvePoint> family7() {
    PolyQ t = PolyQ::t();
    PolyQ t2 = t * t, t3 = t2 * t;
    WeierstrassCurve c;
    c.a1 = RatFunc(PolyQ(Rat(1)) + t - t2);
    c.a2 = RatFunc(t2 - t3);
    c.a3 = RatFunc(t2 - t3);
    CurvePoint p = CurvePoint::affine(RatFunc(Rat(0)), RatFunc(Rat(0)));
    if (!on_curve(c, p)) throw Error("family7: section fails the curve equation (internal)");
    return {c, p};
}

}  // namespace k3lat
