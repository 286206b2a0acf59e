#include "k3lat/discform.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace k3lat {

namespace {

Rat q_mod2(const Rat& q) { return mod_rat(q, Rat(2)); }
Rat b_mod1(const Rat& q) { return mod_rat(q, Rat(1)); }

bool is_odd_prime(const Int& p) {
    return p > 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

// square class of a (nonzero) residue mod odd prime p by Euler's criterion
DiscClass square_class(const Int& a, const Int& p) {
    Int e = (p - 1) / 2;
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r == 1 ? DiscClass::Square : DiscClass::NonSquare;
}

}  // namespace

Int FiniteQuadraticForm::group_order() const {
    Int n = 1;
    for (const Int& d : orders) n *= d;
    return n;
}

FiniteQuadraticForm discriminant_group(const Lattice& l) {
    if (l.det() == 0) throw Error("discriminant_group: degenerate Gram matrix");
    if (!l.is_even()) throw Error("discriminant_group: odd lattice, q mod 2Z undefined");
    SnfResult s = snf(l.gram);
    const std::size_t n = l.rank;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (s.d(i, i) > 1) keep.push_back(i);

    FiniteQuadraticForm f;
    f.gens = MatQ(keep.size(), n);
    for (std::size_t a = 0; a < keep.size(); ++a) {
        std::size_t i = keep[a];
        f.orders.push_back(s.d(i, i));
        for (std::size_t row = 0; row < n; ++row)
            f.gens(a, row) = make_rat(s.v(row, i), s.d(i, i));
    }
    f.bil = MatQ(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
        std::vector<Rat> ga = f.gens.row(a);
        f.qvals.push_back(q_mod2(inner_q(l.gram, ga, ga)));
        for (std::size_t b = 0; b < keep.size(); ++b) {
            std::vector<Rat> gb = f.gens.row(b);
            f.bil(a, b) = b_mod1(inner_q(l.gram, ga, gb));
        }
    }
    return f;
}

FiniteQuadraticForm diagonal_form(const Int& p, const std::vector<Rat>& qs) {
    FiniteQuadraticForm f;
    f.bil = MatQ(qs.size(), qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
        f.orders.push_back(p);
        f.qvals.push_back(q_mod2(qs[i]));
        f.bil(i, i) = b_mod1(qs[i] / 2);
    }
    return f;
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a,
                               const FiniteQuadraticForm& b) {
    FiniteQuadraticForm f;
    f.orders = a.orders;
    f.orders.insert(f.orders.end(), b.orders.begin(), b.orders.end());
    f.qvals = a.qvals;
    f.qvals.insert(f.qvals.end(), b.qvals.begin(), b.qvals.end());
    const std::size_t na = a.ngen(), nb = b.ngen();
    f.bil = MatQ(na + nb, na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) f.bil(i, j) = a.bil(i, j);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) f.bil(na + i, na + j) = b.bil(i, j);
    return f;
}

FiniteQuadraticForm negated(const FiniteQuadraticForm& f) {
    FiniteQuadraticForm g = f;
    for (auto& q : g.qvals) q = q_mod2(-q);
    for (std::size_t i = 0; i < g.bil.rows(); ++i)
        for (std::size_t j = 0; j < g.bil.cols(); ++j)
            g.bil(i, j) = b_mod1(-g.bil(i, j));
    g.gens = MatQ();
    return g;
}

FormNormal finite_form_normal(const FiniteQuadraticForm& f) {
    if (f.is_trivial())
        throw Error("finite_form_normal: trivial form has no odd-prime normal form");
    const Int p = f.orders.front();
    if (!is_odd_prime(p))
        throw Error("finite_form_normal: not homogeneous odd prime");
    for (const Int& d : f.orders)
        if (d != p) throw Error("finite_form_normal: not homogeneous odd prime");

    const std::size_t n = f.ngen();
    // bilinear matrix over F_p: b(g_i,g_j) = a_ij / p
    MatZ a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = f.bil(i, j) * Rat(p);
            a(i, j) = mod_floor(to_int(v), p);
        }
    // symmetric diagonalization over F_p (p odd)
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) % p == 0) {
            // prefer a later nonzero diagonal entry; otherwise the whole
            // trailing diagonal vanishes and adding any row with a nonzero
            // off-diagonal pairing creates the pivot 2 a(k,j)
            std::size_t j = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, i) % p != 0) { j = i; break; }
            if (j < n) {
                for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(j, c));
                for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
            } else {
                for (std::size_t i = k + 1; i < n; ++i)
                    if (a(k, i) % p != 0) { j = i; break; }
                if (j == n) {
                    // row k is zero on the trailing block: degenerate form
                    throw Error("finite_form_normal: degenerate form");
                }
                for (std::size_t c = 0; c < n; ++c)
                    a(k, c) = mod_floor(a(k, c) + a(j, c), p);
                for (std::size_t r = 0; r < n; ++r)
                    a(r, k) = mod_floor(a(r, k) + a(r, j), p);
            }
        }
        Int inv;
        Int akk = a(k, k);
        if (mpz_invert(inv.get_mpz_t(), akk.get_mpz_t(), p.get_mpz_t()) == 0)
            throw Error("finite_form_normal: internal pivot error");
        for (std::size_t i = k + 1; i < n; ++i) {
            Int fct = mod_floor(a(i, k) * inv, p);
            if (fct == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
                a(i, c) = mod_floor(a(i, c) - fct * a(k, c), p);
            for (std::size_t r = 0; r < n; ++r)
                a(r, i) = mod_floor(a(r, i) - fct * a(r, k), p);
        }
    }
    Int prod = 1;
    for (std::size_t k = 0; k < n; ++k) prod = mod_floor(prod * a(k, k), p);
    if (prod == 0) throw Error("finite_form_normal: degenerate form");
    return {p, n, square_class(prod, p)};
}

namespace {

bool homogeneous_odd_prime(const FiniteQuadraticForm& f) {
    if (f.is_trivial()) return false;
    const Int p = f.orders.front();
    if (!is_odd_prime(p)) return false;
    return std::all_of(f.orders.begin(), f.orders.end(),
                       [&](const Int& d) { return d == p; });
}

using Elem = std::vector<Int>;  // coefficients modulo the generator orders

Int elem_order(const FiniteQuadraticForm& f, const Elem& c) {
    Int k = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int g = gcd(c[i], f.orders[i]);
        Int part = f.orders[i] / g;
        k = lcm(k, part);
    }
    return k;
}

Rat elem_q(const FiniteQuadraticForm& f, const Elem& c) {
    Rat acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        acc += Rat(c[i] * c[i]) * f.qvals[i];
        for (std::size_t j = i + 1; j < c.size(); ++j)
            acc += Rat(2 * c[i] * c[j]) * f.bil(i, j);
    }
    return mod_rat(acc, Rat(2));
}

Rat elem_b(const FiniteQuadraticForm& f, const Elem& x, const Elem& y) {
    Rat acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            acc += Rat(x[i] * y[j]) * f.bil(i, j);
    return mod_rat(acc, Rat(1));
}

std::vector<Elem> all_elements(const FiniteQuadraticForm& f) {
    std::vector<Elem> out;
    Elem cur(f.ngen(), Int(0));
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == f.ngen()) {
            out.push_back(cur);
            return;
        }
        for (Int c = 0; c < f.orders[i]; ++c) {
            cur[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// exhaustive isomorphism search between two finite quadratic forms
bool isomorphic_exhaustive(const FiniteQuadraticForm& f1,
                           const FiniteQuadraticForm& f2) {
    if (f1.group_order() != f2.group_order()) return false;
    auto sorted_orders = [](const FiniteQuadraticForm& f) {
        auto o = f.orders;
        std::sort(o.begin(), o.end());
        return o;
    };
    if (sorted_orders(f1) != sorted_orders(f2)) return false;

    std::vector<Elem> elems2 = all_elements(f2);
    const std::size_t n1 = f1.ngen();
    std::vector<Elem> images(n1);

    // a form-preserving homomorphism between nondegenerate forms of equal
    // order is automatically bijective, so matching generators suffices
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == n1) return true;
        Int want_order = f1.orders[i];
        for (const Elem& cand : elems2) {
            Int o = elem_order(f2, cand);
            // need order(image) | order(gen) for a well-defined homomorphism,
            // and the pairing data to match
            Int rem = want_order % o;
            if (rem != 0) continue;
            if (elem_q(f2, cand) != f1.qvals[i]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (elem_b(f2, images[j], cand) != mod_rat(f1.bil(j, i), Rat(1)))
                    ok = false;
            if (!ok) continue;
            images[i] = cand;
            if (assign(i + 1)) return true;
        }
        return false;
    };
    if (!assign(0)) return false;

    // verify surjectivity: the images must generate all of f2
    std::map<Elem, bool> seen;
    std::vector<Elem> frontier{Elem(f2.ngen(), Int(0))};
    seen[frontier[0]] = true;
    while (!frontier.empty()) {
        Elem e = frontier.back();
        frontier.pop_back();
        for (const Elem& g : images) {
            Elem s(e.size());
            for (std::size_t k = 0; k < e.size(); ++k)
                s[k] = mod_floor(e[k] + g[k], f2.orders[k]);
            if (!seen[s]) {
                seen[s] = true;
                frontier.push_back(s);
            }
        }
    }
    Int count = 0;
    for (auto& [k, v] : seen)
        if (v) ++count;
    return count == f2.group_order();
}

}  // namespace

bool is_opposite(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                 const Int& max_order) {
    if (f1.is_trivial() || f2.is_trivial())
        return f1.is_trivial() && f2.is_trivial();
    FiniteQuadraticForm nf2 = negated(f2);
    if (homogeneous_odd_prime(f1) && homogeneous_odd_prime(f2)) {
        try {
            return finite_form_normal(f1) == finite_form_normal(nf2);
        } catch (const Error&) {
            // degenerate input falls through to the exhaustive search
        }
    }
    if (f1.group_order() > max_order || f2.group_order() > max_order)
        throw Error("is_opposite: group too large for exhaustive search");
    return isomorphic_exhaustive(f1, nf2);
}

std::size_t min_generators(const FiniteQuadraticForm& f) { return f.ngen(); }

}  // namespace k3lat
