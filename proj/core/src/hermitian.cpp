#include "k3lat/hermitian.hpp"

namespace k3lat {

namespace {

CycInt cyc(int p, std::vector<Int> coeffs) { return CycInt(p, std::move(coeffs)); }

CycInt omega(int p) { return CycInt::omega_pow(p, 1); }

CycInt one_minus_omega(int p) {
    return CycInt::from_int(p, 1) - omega(p);
}

std::vector<CycInt> scaled_vec(const CycInt& s, const std::vector<CycInt>& v) {
    std::vector<CycInt> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(s * x);
    return r;
}

std::vector<CycInt> unit_vec(int p, std::size_t n, std::size_t i, const CycInt& val) {
    std::vector<CycInt> r(n, CycInt::zero(p));
    r[i] = val;
    return r;
}

}  // namespace

CycInt herm_pairing(const HermitianLattice& h, const std::vector<CycInt>& a,
                    const std::vector<CycInt>& b) {
    if (a.size() != h.n || b.size() != h.n)
        throw Error("herm_pairing: bad vector length");
    CycInt acc = CycInt::zero(h.p);
    for (std::size_t i = 0; i < h.n; ++i)
        acc = acc + h.scale[i] * a[i] * b[i].conj();
    return acc;
}

MatQ trace_gram(const HermitianLattice& h,
                const std::vector<std::vector<CycInt>>& vecs) {
    MatQ g(vecs.size(), vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs.size(); ++j)
            g(i, j) = trace_form(herm_pairing(h, vecs[i], vecs[j]));
    return g;
}

std::vector<Int> flatten(const std::vector<CycInt>& v) {
    std::vector<Int> out;
    for (const auto& x : v)
        for (const Int& c : x.coeffs()) out.push_back(c);
    return out;
}

std::vector<CycInt> unflatten(int p, std::size_t n, const std::vector<Int>& c) {
    if (c.size() != n * (p - 1)) throw Error("unflatten: bad coordinate length");
    std::vector<CycInt> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Int> coeffs(c.begin() + k * (p - 1), c.begin() + (k + 1) * (p - 1));
        v.emplace_back(p, std::move(coeffs));
    }
    return v;
}

TraceLattice trace_lattice(const HermitianLattice& h) {
    if (h.gens.empty()) throw Error("trace_lattice: no generators");
    const int p = h.p;
    const std::size_t dim = h.n * (p - 1);
    std::vector<std::vector<Int>> rows;
    for (const auto& g : h.gens)
        for (int j = 0; j < p - 1; ++j)
            rows.push_back(flatten(scaled_vec(CycInt::omega_pow(p, j), g)));
    MatZ genmat(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) genmat(i, j) = rows[i][j];
    HnfResult hn = hnf(genmat);

    TraceLattice out;
    out.basis = MatZ(hn.rank, dim);
    for (std::size_t i = 0; i < hn.rank; ++i) {
        for (std::size_t j = 0; j < dim; ++j) out.basis(i, j) = hn.h(i, j);
        out.basis_vectors.push_back(unflatten(p, h.n, out.basis.row(i)));
    }
    MatQ gq = trace_gram(h, out.basis_vectors);
    MatZ g(hn.rank, hn.rank);
    for (std::size_t i = 0; i < hn.rank; ++i)
        for (std::size_t j = 0; j < hn.rank; ++j) {
            if (!is_integer(gq(i, j)))
                throw Error("trace_lattice: form is not Z-valued on the span");
            g(i, j) = gq(i, j).get_num();
        }
    out.lattice = Lattice(std::move(g), "L" + std::to_string(p) + "_Z");
    return out;
}

CycInt lp_scale_tau() {
    CycInt f = CycInt::from_int(5, 1) - (CycInt::omega_pow(5, 2) + CycInt::omega_pow(5, 3));
    return f * f.conj();
}

CycInt lp_scale_f1_sq() {
    CycInt f1 = CycInt::from_int(7, 3) +
                (CycInt::omega_pow(7, 1) + CycInt::omega_pow(7, 6)) * CycInt::from_int(7, 2) +
                (CycInt::omega_pow(7, 2) + CycInt::omega_pow(7, 5));
    return f1 * f1.conj();
}

CycInt lp_scale_f2_sq() {
    CycInt f2 = CycInt::from_int(7, 2) + CycInt::omega_pow(7, 1) + CycInt::omega_pow(7, 6);
    return f2 * f2.conj();
}

HermitianLattice build_Lp(int p) {
    HermitianLattice h;
    h.p = p;
    if (p == 3) {
        h.n = 6;
        h.scale.assign(6, CycInt::from_int(3, 1));
        CycInt w = omega(3);
        CycInt t = one_minus_omega(3);
        CycInt t2 = t * t;
        std::vector<CycInt> ones(6, CycInt::from_int(3, 1));
        auto& L = h.gens;
        L.push_back(scaled_vec(-w, ones));                                   // l1
        L.push_back(scaled_vec(CycInt::from_int(3, 1) + w, ones));           // l2
        L.push_back(unit_vec(3, 6, 4, t2 * t));                              // l3
        L.push_back(unit_vec(3, 6, 0, t2));                                  // l4
        std::vector<CycInt> l5(6, CycInt::zero(3));
        l5[0] = t; l5[1] = -t;
        L.push_back(l5);                                                     // l5
        L.push_back(unit_vec(3, 6, 1, t2));                                  // l6
        std::vector<CycInt> l7(6, CycInt::zero(3));
        l7[1] = t; l7[2] = -t;
        L.push_back(l7);                                                     // l7
        L.push_back(unit_vec(3, 6, 2, t2));                                  // l8
        std::vector<CycInt> l9(6, CycInt::zero(3));
        l9[2] = t; l9[3] = -t;
        L.push_back(l9);                                                     // l9
        L.push_back(unit_vec(3, 6, 3, t2));                                  // l10
        std::vector<CycInt> l11(6, CycInt::zero(3));
        l11[3] = t; l11[4] = -t;
        L.push_back(l11);                                                    // l11
        L.push_back(unit_vec(3, 6, 4, t2));                                  // l12
    } else if (p == 5) {
        h.n = 4;
        CycInt one = CycInt::from_int(5, 1);
        CycInt tau = lp_scale_tau();
        h.scale = {one, one, tau, tau};
        CycInt w = omega(5);
        CycInt t = one_minus_omega(5);
        CycInt t2 = t * t;
        CycInt c = cyc(5, {0, 2, -1, 2});  // w(2w^2 - w + 2)
        std::vector<CycInt> l1{one, one, c, c};
        auto& L = h.gens;
        L.push_back(l1);
        L.push_back(scaled_vec(w, l1));
        L.push_back(scaled_vec(w * w, l1));
        L.push_back(scaled_vec(w * w * w, l1));
        L.push_back(unit_vec(5, 4, 2, t2 * cyc(5, {2, 4, 1, 3})));           // l5
        std::vector<CycInt> l6 = unit_vec(5, 4, 0, t2);
        L.push_back(l6);
        L.push_back(scaled_vec(w, l6));
        L.push_back(scaled_vec(w * w, l6));
        std::vector<CycInt> l9(4, CycInt::zero(5));
        l9[0] = t; l9[1] = -t;
        L.push_back(l9);                                                     // l9
        std::vector<CycInt> l10 = unit_vec(5, 4, 1, t2);
        L.push_back(l10);
        L.push_back(scaled_vec(w, l10));
        L.push_back(scaled_vec(w * w, l10));
        std::vector<CycInt> l13(4, CycInt::zero(5));
        l13[1] = t;
        l13[2] = -(t * (one + w * w * w));                                   // -(1-w)(1+w^3)
        L.push_back(l13);                                                    // l13
        std::vector<CycInt> l14 = unit_vec(5, 4, 2, t2);
        L.push_back(l14);
        // the third fiber is entered with step 2, so successive component
        // differences pick up powers of w along i -> (a-1) * 2^{-1} mod 5
        L.push_back(scaled_vec(CycInt::omega_pow(5, 3), l14));               // l15
        L.push_back(scaled_vec(w, l14));                                     // l16
    } else if (p == 7) {
        h.n = 3;
        CycInt one = CycInt::from_int(7, 1);
        h.scale = {one, lp_scale_f1_sq(), lp_scale_f2_sq()};
        CycInt w = omega(7);
        CycInt t = one_minus_omega(7);
        CycInt t2 = t * t;
        CycInt c = cyc(7, {1, 3, 0, 0, 3, 1});    // 1+3w+3w^4+w^5
        CycInt k = cyc(7, {-5, 1, -5, 0, -3, -3});
        std::vector<CycInt> l1{one, c, k};
        auto& L = h.gens;
        L.push_back(l1);
        for (int i = 1; i <= 5; ++i)
            L.push_back(scaled_vec(CycInt::omega_pow(7, i), l1));            // l2..l6
        L.push_back(unit_vec(7, 3, 1, t2 * cyc(7, {2, 4, 6, 1, 3, 5})));     // l7
        std::vector<CycInt> l8 = unit_vec(7, 3, 0, t2);
        L.push_back(l8);
        for (int i = 1; i <= 4; ++i)
            L.push_back(scaled_vec(CycInt::omega_pow(7, i), l8));            // l9..l12
        // l13 is the chain link from the last component of the first fiber to
        // the second fiber: subtract the full first-fiber telescope from the
        // fiber-to-fiber difference
        std::vector<CycInt> l13(3, CycInt::zero(7));
        l13[0] = t - t2 * cyc(7, {1, 1, 1, 1, 1, 0});
        l13[1] = -(t * (one + CycInt::omega_pow(7, 4)));
        L.push_back(l13);                                                    // l13
        // second fiber entered with step 2: powers follow (a-1) * 2^{-1} mod 7
        std::vector<CycInt> l14 = unit_vec(7, 3, 1, t2);
        L.push_back(l14);
        for (int i : {4, 1, 5, 2})
            L.push_back(scaled_vec(CycInt::omega_pow(7, i), l14));           // l15..l18
    } else {
        throw Error("build_Lp: bad prime");
    }
    return h;
}

bool membership_Lp(int p, const std::vector<CycInt>& x) {
    CycInt t = one_minus_omega(p);
    CycInt t2 = t * t;
    if (p == 3) {
        if (x.size() != 6) throw Error("membership_Lp: bad length");
        for (std::size_t i = 1; i < 6; ++i)
            if (!divides(t, x[i] - x[0])) return false;
        CycInt s = CycInt::zero(3);
        for (const auto& xi : x) s = s + xi;
        return divides(t2, s);
    }
    if (p == 5) {
        if (x.size() != 4) throw Error("membership_Lp: bad length");
        CycInt two = CycInt::from_int(5, 2);
        if (!divides(t, x[0] - x[1])) return false;
        if (!divides(t, x[0] - two * x[2])) return false;
        if (!divides(t, x[0] - two * x[3])) return false;
        CycInt coef = CycInt::from_int(5, 3) - omega(5);  // 3 - w
        CycInt s = coef * (x[0] + x[1]) + x[2] + x[3];
        return divides(t2, s);
    }
    if (p == 7) {
        if (x.size() != 3) throw Error("membership_Lp: bad length");
        CycInt six = CycInt::from_int(7, 6);
        if (!divides(t, x[0] - x[1])) return false;
        if (!divides(t, x[0] - six * x[2])) return false;
        CycInt coef = CycInt::from_int(7, 1) + CycInt::from_int(7, 5) * omega(7);
        CycInt s = coef * x[0] + CycInt::from_int(7, 3) * x[1] + CycInt::from_int(7, 2) * x[2];
        return divides(t2, s);
    }
    throw Error("membership_Lp: bad prime");
}

}  // namespace k3lat
