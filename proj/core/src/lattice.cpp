#include "k3lat/lattice.hpp"

namespace k3lat {

Lattice::Lattice(MatZ g, std::string lab) : rank(g.rows()), gram(std::move(g)), label(std::move(lab)) {
    if (!gram.is_symmetric()) throw Error("lattice Gram matrix must be symmetric");
}

bool Lattice::is_even() const {
    for (std::size_t i = 0; i < rank; ++i)
        if (gram(i, i) % 2 != 0) return false;
    return true;
}

Lattice direct_sum(const std::vector<Lattice>& ls) {
    std::size_t n = 0;
    for (const auto& l : ls) n += l.rank;
    MatZ g(n, n);
    std::size_t off = 0;
    std::string label;
    for (const auto& l : ls) {
        for (std::size_t i = 0; i < l.rank; ++i)
            for (std::size_t j = 0; j < l.rank; ++j)
                g(off + i, off + j) = l.gram(i, j);
        off += l.rank;
        if (!l.label.empty()) {
            if (!label.empty()) label += "+";
            label += l.label;
        }
    }
    return Lattice(std::move(g), label);
}

Lattice rescale(const Lattice& l, const Int& n) {
    if (n == 0) throw Error("rescale: zero scale");
    Lattice r(l.gram.scaled(n), l.label.empty() ? "" : l.label + "(" + n.get_str() + ")");
    return r;
}

std::vector<Rat> char_poly(const MatZ& g) {
    // Faddeev-LeVerrier over Q
    const std::size_t n = g.rows();
    MatQ a = to_rational(g);
    MatQ m(n, n);  // zero
    std::vector<Rat> coeff(n + 1);
    coeff[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A * M_{k-1} + c_{k-1} I
        MatQ am = (k == 1) ? MatQ::identity(n) : a * m;
        if (k > 1)
            for (std::size_t i = 0; i < n; ++i) am(i, i) += coeff[k - 1];
        m = am;
        MatQ prod = a * m;
        Rat trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
        coeff[k] = -trace / Rat(k);
    }
    return coeff;  // det(xI - A) = sum coeff[i] x^{n-i}
}

Signature signature(const Lattice& l) {
    if (l.det() == 0) throw Error("signature: degenerate Gram matrix");
    std::vector<Rat> c = char_poly(l.gram);
    // all eigenvalues real and nonzero; Descartes' rule is exact here
    std::size_t plus = 0;
    int last = 0;
    for (const Rat& v : c) {
        if (v == 0) continue;
        int s = sgn(v);
        if (last != 0 && s != last) ++plus;
        last = s;
    }
    return {plus, l.rank - plus};
}

MatZ gram_of_vectors(const Lattice& l, const std::vector<std::vector<Int>>& vs) {
    MatZ g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            g(i, j) = inner(l.gram, vs[i], vs[j]);
    return g;
}

MatQ gram_of_vectors_q(const Lattice& l, const std::vector<std::vector<Rat>>& vs) {
    MatQ g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            g(i, j) = inner_q(l.gram, vs[i], vs[j]);
    return g;
}

Int sublattice_index(const Lattice& l, const Lattice& sub) {
    if (l.rank != sub.rank) throw Error("sublattice_index: rank mismatch");
    Int dl = l.det(), ds = sub.det();
    if (dl == 0 || ds % dl != 0) throw Error("sublattice_index: not finite index");
    Int ratio = ds / dl;
    if (ratio < 0) throw Error("sublattice_index: not finite index");
    return isqrt_exact(ratio);
}

SublatticeBasis orthogonal_complement(const Lattice& l,
                                      const std::vector<std::vector<Int>>& span) {
    if (span.empty()) {
        return {l, MatZ::identity(l.rank)};
    }
    // rows of a: s^T G ; kernel gives {x : s.x = 0 for all s}
    MatZ a(span.size(), l.rank);
    for (std::size_t i = 0; i < span.size(); ++i) {
        if (span[i].size() != l.rank) throw Error("orthogonal_complement: bad vector length");
        for (std::size_t j = 0; j < l.rank; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < l.rank; ++k) acc += span[i][k] * l.gram(k, j);
            a(i, j) = acc;
        }
    }
    MatZ kern = integer_kernel(a);
    // canonical HNF basis of the kernel
    HnfResult h = hnf(kern);
    MatZ basis(h.rank, l.rank);
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < l.rank; ++j) basis(i, j) = h.h(i, j);
    std::vector<std::vector<Int>> rows;
    rows.reserve(h.rank);
    for (std::size_t i = 0; i < h.rank; ++i) rows.push_back(basis.row(i));
    Lattice sub(gram_of_vectors(l, rows), l.label.empty() ? "" : l.label + "_perp");
    return {std::move(sub), std::move(basis)};
}

}  // namespace k3lat
