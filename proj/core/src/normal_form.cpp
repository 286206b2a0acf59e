#include "k3lat/normal_form.hpp"

#include <cstdlib>

namespace k3lat {

namespace {

// floor-division quotient
Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void add_row_multiple(MatZ& m, std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void add_col_multiple(MatZ& m, std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

void negate_row(MatZ& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

HnfResult hnf(const MatZ& m) {
    const std::size_t r = m.rows(), c = m.cols();
    HnfResult res{m, MatZ::identity(r), 0};
    MatZ& h = res.h;
    MatZ& u = res.u;

    std::size_t prow = 0;
    for (std::size_t col = 0; col < c && prow < r; ++col) {
        // eliminate below prow in this column by repeated smallest-pivot reduction
        while (true) {
            std::size_t best = r;
            for (std::size_t i = prow; i < r; ++i) {
                if (h(i, col) == 0) continue;
                if (best == r || cmp(abs(h(i, col)), abs(h(best, col))) < 0) best = i;
            }
            if (best == r) break;  // column is zero below prow
            h.swap_rows(prow, best);
            u.swap_rows(prow, best);
            bool done = true;
            for (std::size_t i = prow + 1; i < r; ++i) {
                if (h(i, col) == 0) continue;
                Int q = fdiv_q(h(i, col), h(prow, col));
                add_row_multiple(h, i, prow, -q);
                add_row_multiple(u, i, prow, -q);
                if (h(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(prow, col) == 0) continue;
        if (h(prow, col) < 0) {
            negate_row(h, prow);
            negate_row(u, prow);
        }
        for (std::size_t i = 0; i < prow; ++i) {
            Int q = fdiv_q(h(i, col), h(prow, col));
            add_row_multiple(h, i, prow, -q);
            add_row_multiple(u, i, prow, -q);
        }
        ++prow;
    }
    res.rank = prow;
    return res;
}

namespace {

bool is_diagonal(const MatZ& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    return true;
}

}  // namespace

// Alternating row/column Hermite reductions (Kannan-Bachem style).  A single
// row-and-column elimination pass suffers from doubly exponential entry
// growth; HNF iterates stay bounded by the determinant instead.
SnfResult snf(const MatZ& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SnfResult res{m, MatZ::identity(r), MatZ::identity(c)};
    MatZ& d = res.d;
    MatZ& u = res.u;
    MatZ& v = res.v;

    const std::size_t n = std::min(r, c);
    for (int pass = 0;; ++pass) {
        if (pass > 1000) throw Error("snf: no convergence (internal)");
        HnfResult hr = hnf(d);
        d = hr.h;
        u = hr.u * u;
        HnfResult hc = hnf(d.transpose());
        d = hc.h.transpose();
        v = v * hc.u.transpose();
        if (is_diagonal(d)) break;
    }

    // move any zero diagonal entries past the nonzero ones
    for (std::size_t t = 0, w = 0; t < n; ++t)
        if (d(t, t) != 0) {
            if (t != w) {
                d.swap_rows(t, w);
                u.swap_rows(t, w);
                d.swap_cols(t, w);
                v.swap_cols(t, w);
            }
            ++w;
        }

    // restore the divisibility chain with local 2x2 gcd transforms:
    // diag(a, b) -> diag(gcd(a,b), +-ab/gcd(a,b))
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (std::size_t t = 0; t + 1 < n; ++t) {
            if (d(t, t) == 0) break;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(j, j) == 0) break;
                if (d(j, j) % d(t, t) == 0) continue;
                dirty = true;
                add_col_multiple(d, t, j, 1);  // puts b below the pivot
                add_col_multiple(v, t, j, 1);
                while (d(j, t) != 0) {         // Euclid between rows t and j
                    Int q = fdiv_q(d(t, t), d(j, t));
                    add_row_multiple(d, t, j, -q);
                    add_row_multiple(u, t, j, -q);
                    d.swap_rows(t, j);
                    u.swap_rows(t, j);
                }
                Int q = d(t, j) / d(t, t);     // gcd divides everything here
                add_col_multiple(d, j, t, -q);
                add_col_multiple(v, j, t, -q);
            }
        }
    }
    for (std::size_t t = 0; t < n; ++t)
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    return res;
}

Int det_exact(const MatZ& m) {
    if (!m.is_square()) throw Error("det_exact: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    MatZ a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det_exact_q(const MatQ& m) {
    if (!m.is_square()) throw Error("det_exact_q: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    MatQ a = m;
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (a(i, k) != 0) { piv = i; break; }
        if (piv == n) return 0;
        if (piv != k) {
            a.swap_rows(k, piv);
            det = -det;
        }
        det *= a(k, k);
        Rat inv = 1 / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat f = a(i, k) * inv;
            if (f == 0) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

SolveResult solve_linear(const MatQ& a, const std::vector<Rat>& b) {
    const std::size_t r = a.rows(), c = a.cols();
    if (b.size() != r) throw Error("solve_linear: rhs size mismatch");
    MatQ aug(r, c + 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = a(i, j);
        aug(i, c) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < c && prow < r; ++col) {
        std::size_t piv = r;
        for (std::size_t i = prow; i < r; ++i)
            if (aug(i, col) != 0) { piv = i; break; }
        if (piv == r) continue;
        aug.swap_rows(prow, piv);
        Rat inv = 1 / aug(prow, col);
        for (std::size_t j = col; j <= c; ++j) aug(prow, j) *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == prow || aug(i, col) == 0) continue;
            Rat f = aug(i, col);
            for (std::size_t j = col; j <= c; ++j) aug(i, j) -= f * aug(prow, j);
        }
        pivot_col.push_back(col);
        ++prow;
    }
    for (std::size_t i = prow; i < r; ++i)
        if (aug(i, c) != 0) return {SolveStatus::Inconsistent, {}, 0};

    SolveResult res;
    res.x.assign(c, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        res.x[pivot_col[i]] = aug(i, c);
    res.nullity = c - pivot_col.size();
    res.status = res.nullity == 0 ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return res;
}

MatZ integer_kernel(const MatZ& m) {
    SnfResult s = snf(m);
    const std::size_t c = m.cols();
    const std::size_t n = std::min(m.rows(), c);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < c; ++j)
        if (j >= n || s.d(j, j) == 0) free_cols.push_back(j);
    MatZ k(free_cols.size(), c);
    for (std::size_t i = 0; i < free_cols.size(); ++i)
        for (std::size_t row = 0; row < c; ++row)
            k(i, row) = s.v(row, free_cols[i]);
    return k;
}

MatQ inverse(const MatQ& m) {
    if (!m.is_square()) throw Error("inverse: matrix not square");
    const std::size_t n = m.rows();
    MatQ a = m;
    MatQ inv = MatQ::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (a(i, k) != 0) { piv = i; break; }
        if (piv == n) throw Error("inverse: singular matrix");
        a.swap_rows(k, piv);
        inv.swap_rows(k, piv);
        Rat f = 1 / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= f;
            inv(k, j) *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat g = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= g * a(k, j);
                inv(i, j) -= g * inv(k, j);
            }
        }
    }
    return inv;
}

}  // namespace k3lat
