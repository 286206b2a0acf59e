#include "k3lat/shortvec.hpp"

#include "k3lat/normal_form.hpp"

#include <algorithm>
#include <cmath>

namespace k3lat {

namespace {

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int round_rat(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

// Gram-only LLL (delta = 3/4).  Without the reduction the Fincke-Pohst tree
// fans out badly on skewed bases like the rank-12/16/18 definite lattices of
// the catalog.  Returns the reduced Gram and the unimodular transform t with
// t * g * t^T = reduced.
void gso_from_gram(const MatQ& g, std::vector<Rat>& bstar, MatQ& mu) {
    const std::size_t n = g.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat acc = g(i, j);
            for (std::size_t l = 0; l < j; ++l) acc -= mu(i, l) * mu(j, l) * bstar[l];
            if (bstar[j] == 0) throw Error("indefinite or degenerate lattice");
            mu(i, j) = acc / bstar[j];
        }
        Rat b = g(i, i);
        for (std::size_t l = 0; l < i; ++l) b -= mu(i, l) * mu(i, l) * bstar[l];
        if (b <= 0) throw Error("indefinite or degenerate lattice");
        bstar[i] = b;
    }
}

}  // namespace

LllResult lll_gram(const MatZ& gram) {
    const std::size_t n = gram.rows();
    LllResult res{gram, MatZ::identity(n)};
    MatZ& g = res.gram;
    MatZ& t = res.t;
    auto row_op = [&](std::size_t dst, std::size_t src, const Int& c) {
        // basis change b_dst -= c * b_src
        for (std::size_t j = 0; j < n; ++j) {
            t(dst, j) -= c * t(src, j);
            g(dst, j) -= c * g(src, j);
        }
        for (std::size_t i = 0; i < n; ++i) g(i, dst) -= c * g(i, src);
    };
    auto swap_basis = [&](std::size_t a, std::size_t b) {
        t.swap_rows(a, b);
        g.swap_rows(a, b);
        g.swap_cols(a, b);
    };

    std::vector<Rat> bstar(n);
    MatQ mu(n, n);
    gso_from_gram(to_rational(g), bstar, mu);
    const Rat delta(3, 4);
    std::size_t k = 1;
    while (k < n) {
        bool changed = false;
        for (std::size_t j = k; j-- > 0;) {
            Int q = round_rat(mu(k, j));
            if (q != 0) {
                row_op(k, j, q);
                changed = true;
            }
        }
        if (changed) gso_from_gram(to_rational(g), bstar, mu);
        if (bstar[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) {
            ++k;
        } else {
            swap_basis(k, k - 1);
            gso_from_gram(to_rational(g), bstar, mu);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return res;
}

namespace {

// Q(x) = sum_i d[i] * (x_i + sum_{j>i} u(i,j) x_j)^2 for a positive definite
// Gram matrix; throws otherwise.
struct Cholesky {
    std::size_t n;
    std::vector<Rat> d;
    MatQ u;
};

Cholesky cholesky(const MatZ& gram) {
    const std::size_t n = gram.rows();
    MatQ q = to_rational(gram);
    Cholesky ch{n, std::vector<Rat>(n), MatQ(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (q(i, i) <= 0) throw Error("indefinite or degenerate lattice");
        ch.d[i] = q(i, i);
        for (std::size_t j = i + 1; j < n; ++j) ch.u(i, j) = q(i, j) / q(i, i);
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l)
                q(k, l) -= ch.u(i, k) * ch.u(i, l) * ch.d[i];
    }
    return ch;
}

// integer range { x : (x + off)^2 * piv <= budget }
void pivot_range(const Rat& off, const Rat& piv, const Rat& budget, Int& lo, Int& hi) {
    if (budget < 0) {
        lo = 1;
        hi = 0;
        return;
    }
    Rat r = budget / piv;  // (x + off)^2 <= r, i.e. -off-sqrt(r) <= x <= -off+sqrt(r)
    Int s;                 // integer near sqrt(r)
    mpz_sqrt(s.get_mpz_t(), floor_rat(r).get_mpz_t());
    // x <= -off+sqrt(r) iff x+off <= 0 or (x+off)^2 <= r: monotone from above,
    // so walking down from an over-estimate cannot skip past the interval
    auto below_hi = [&](const Int& x) {
        Rat d = Rat(x) + off;
        return d <= 0 || d * d <= r;
    };
    auto above_lo = [&](const Int& x) {
        Rat d = Rat(x) + off;
        return d >= 0 || d * d <= r;
    };
    hi = floor_rat(-off) + s + 2;
    while (!below_hi(hi)) --hi;
    lo = ceil_rat(-off) - s - 2;
    while (!above_lo(lo)) ++lo;
}

struct EnumState {
    const Cholesky* ch;
    bool negated;
    bool keep;
    EnumReport* rep;
    std::vector<Int> x;
};

void enumerate_level(EnumState& st, std::size_t level, const Rat& budget) {
    const Cholesky& ch = *st.ch;
    std::size_t i = level - 1;  // level counts down from n to 1
    Rat off(0);
    for (std::size_t j = i + 1; j < ch.n; ++j) off += ch.u(i, j) * Rat(st.x[j]);
    Int lo, hi;
    pivot_range(off, ch.d[i], budget, lo, hi);
    for (Int v = lo; v <= hi; ++v) {
        st.x[i] = v;
        Rat term = ch.d[i] * (Rat(v) + off) * (Rat(v) + off);
        if (i == 0) {
            // budget carries bound minus the terms of the deeper levels
            Rat total = st.rep->bound - (budget - term);
            if (!is_integer(total)) throw Error("short_vectors: non-integral norm (internal)");
            Int norm = total.get_num();
            if (norm == 0) {
                bool zero = true;
                for (const Int& c : st.x)
                    if (c != 0) { zero = false; break; }
                if (zero) continue;
            }
            Int rep_norm = st.negated ? Int(-norm) : norm;
            st.rep->counts[rep_norm] += 1;
            if (st.keep) st.rep->vectors.push_back(st.x);
        } else {
            enumerate_level(st, i, budget - term);
        }
    }
    st.x[i] = 0;
}

}  // namespace

EnumReport short_vectors(const Lattice& l, const Int& bound, bool keep_vectors) {
    if (bound <= 0) throw Error("short_vectors: bound must be positive");
    bool negated = false;
    MatZ g = l.gram;
    if (g(0, 0) < 0) {
        negated = true;
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
    }
    LllResult red = lll_gram(g);
    Cholesky ch = cholesky(red.gram);

    EnumReport rep;
    rep.lattice = l.label;
    rep.bound = bound;
    EnumState st{&ch, negated, keep_vectors, &rep, std::vector<Int>(l.rank, Int(0))};
    enumerate_level(st, l.rank, Rat(bound));

    if (keep_vectors) {
        // translate back to the caller's basis and fix a reproducible order
        for (auto& x : rep.vectors) {
            std::vector<Int> orig(l.rank, Int(0));
            for (std::size_t i = 0; i < l.rank; ++i) {
                if (x[i] == 0) continue;
                for (std::size_t j = 0; j < l.rank; ++j) orig[j] += x[i] * red.t(i, j);
            }
            x = std::move(orig);
        }
        std::sort(rep.vectors.begin(), rep.vectors.end());
    }

    rep.min = 0;
    for (const auto& [norm, cnt] : rep.counts) {
        (void)cnt;
        if (rep.min == 0 || abs(norm) < abs(rep.min)) rep.min = norm;
    }
    return rep;
}

Int min_norm(const Lattice& l) {
    Int start = abs(l.gram(0, 0));
    for (std::size_t i = 1; i < l.rank; ++i)
        if (abs(l.gram(i, i)) < start) start = abs(l.gram(i, i));
    EnumReport rep = short_vectors(l, start);
    if (rep.min == 0) throw Error("min_norm: no vectors found (internal)");
    return rep.min;
}

bool spans_at_norm(const Lattice& l, const Int& norm) {
    EnumReport rep = short_vectors(l, abs(norm), true);
    std::vector<std::vector<Int>> at;
    Int want_abs = abs(norm);
    for (std::size_t i = 0; i < rep.vectors.size(); ++i) {
        Int n = inner(l.gram, rep.vectors[i], rep.vectors[i]);
        if (abs(n) == want_abs && n * norm > 0) at.push_back(rep.vectors[i]);
    }
    if (at.size() < l.rank) return false;
    MatZ m(at.size(), l.rank);
    for (std::size_t i = 0; i < at.size(); ++i)
        for (std::size_t j = 0; j < l.rank; ++j) m(i, j) = at[i][j];
    HnfResult hn = hnf(m);
    if (hn.rank != l.rank) return false;
    Int prod = 1;
    for (std::size_t i = 0; i < l.rank; ++i) prod *= hn.h(i, i);
    return prod == 1;
}

double density(const Lattice& l) {
    Int mu = abs(min_norm(l));
    const double n = static_cast<double>(l.rank);
    double r = std::sqrt(mu.get_d()) / 2.0;
    double vn = std::pow(r, n) * std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
    return vn / std::sqrt(std::abs(l.det().get_d()));
}

}  // namespace k3lat
