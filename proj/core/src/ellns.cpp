#include "k3lat/ellns.hpp"

#include "k3lat/catalog.hpp"
#include "k3lat/discform.hpp"

namespace k3lat {

namespace {

void check_cfg(const FibrationConfig& cfg) {
    if (cfg.p != 3 && cfg.p != 5 && cfg.p != 7)
        throw Error("FibrationConfig: p must be 3, 5 or 7");
    if (cfg.h <= 0 || cfg.k.size() != static_cast<std::size_t>(cfg.h))
        throw Error("FibrationConfig: need one component-hit number per fiber");
    for (int kj : cfg.k)
        if (kj < 1 || kj >= cfg.p) throw Error("FibrationConfig: k_j out of range");
}

}  // namespace

FibrationConfig standard_config(int p) {
    switch (p) {
        case 3: return {3, 6, {1, 1, 1, 1, 1, 1}, 6};
        case 5: return {5, 4, {1, 1, 2, 2}, 4};
        case 7: return {7, 3, {1, 2, 3}, 3};
        default: throw Error("standard_config: p must be 3, 5 or 7");
    }
}

bool check_component_numbers(const FibrationConfig& cfg) {
    check_cfg(cfg);
    Rat sum(0);
    for (int kj : cfg.k) sum += Rat(kj) * (Rat(1) - make_rat(kj, cfg.p));
    return sum == 4;
}

bool check_euler(const FibrationConfig& cfg) {
    check_cfg(cfg);
    return cfg.p * cfg.h + cfg.i1count == 24;
}

std::size_t ambient_dim(const FibrationConfig& cfg) {
    return 2 + static_cast<std::size_t>(cfg.h) * (cfg.p - 1);
}

std::size_t ambient_comp_index(const FibrationConfig& cfg, int fiber, int comp) {
    if (fiber < 1 || fiber > cfg.h || comp < 1 || comp >= cfg.p)
        throw Error("ambient_comp_index: out of range");
    return 2 + static_cast<std::size_t>(fiber - 1) * (cfg.p - 1) + (comp - 1);
}

MatZ ambient_gram(const FibrationConfig& cfg) {
    check_cfg(cfg);
    const std::size_t n = ambient_dim(cfg);
    MatZ g(n, n);
    g(0, 0) = -2;  // s
    g(0, 1) = 1;
    g(1, 0) = 1;   // F, F^2 = 0
    for (int j = 1; j <= cfg.h; ++j)
        for (int i = 1; i < cfg.p; ++i) {
            std::size_t a = ambient_comp_index(cfg, j, i);
            g(a, a) = -2;
            if (i + 1 < cfg.p) {
                std::size_t b = ambient_comp_index(cfg, j, i + 1);
                g(a, b) = 1;
                g(b, a) = 1;
            }
        }
    return g;
}

std::vector<Rat> solve_torsion_section(const FibrationConfig& cfg, int m) {
    check_cfg(cfg);
    if (m < 1 || m >= cfg.p) throw Error("solve_torsion_section: bad index");
    MatZ g = ambient_gram(cfg);
    const std::size_t n = g.rows();
    std::vector<Rat> b(n, Rat(0));
    b[1] = 1;  // t * F = 1; t * s = 0
    for (int j = 1; j <= cfg.h; ++j) {
        int hit = (m * cfg.k[j - 1]) % cfg.p;
        if (hit != 0) b[ambient_comp_index(cfg, j, hit)] = 1;
    }
    SolveResult res = solve_linear(to_rational(g), b);
    if (res.status != SolveStatus::Unique)
        throw Error("InconsistentSystem: torsion section not unique");
    if (inner(to_rational(g), res.x, res.x) != -2)
        throw Error("InconsistentSystem: section self-intersection != -2");
    return res.x;
}

NSModel build_ns(const FibrationConfig& cfg) {
    check_cfg(cfg);
    NSModel mdl;
    mdl.cfg = cfg;
    mdl.ambient = ambient_gram(cfg);
    const std::size_t n = ambient_dim(cfg);

    mdl.ambient_labels = {"s", "F"};
    mdl.ambient_labels.resize(n);
    for (int j = 1; j <= cfg.h; ++j)
        for (int i = 1; i < cfg.p; ++i)
            mdl.ambient_labels[ambient_comp_index(cfg, j, i)] =
                "C" + std::to_string(i) + "_" + std::to_string(j);

    for (int m = 1; m < cfg.p; ++m)
        mdl.sections.push_back(solve_torsion_section(cfg, m));
    // pairwise disjointness and t^2 = -2 are theorems here, so recheck them
    MatQ gq = to_rational(mdl.ambient);
    for (std::size_t i = 0; i < mdl.sections.size(); ++i)
        for (std::size_t j = i + 1; j < mdl.sections.size(); ++j)
            if (inner(gq, mdl.sections[i], mdl.sections[j]) != 0)
                throw Error("InconsistentSystem: sections are not disjoint");

    // basis order: s, t_1..t_{p-1}, F, then fibers 1..h-1 complete
    mdl.ns_basis = MatQ(n, n);
    std::size_t r = 0;
    auto unit_row = [&](std::size_t idx) {
        for (std::size_t c = 0; c < n; ++c) mdl.ns_basis(r, c) = 0;
        mdl.ns_basis(r, idx) = 1;
        ++r;
    };
    unit_row(0);
    mdl.ns_labels.push_back("s");
    for (int m = 1; m < cfg.p; ++m) {
        for (std::size_t c = 0; c < n; ++c) mdl.ns_basis(r, c) = mdl.sections[m - 1][c];
        ++r;
        mdl.ns_labels.push_back("t" + std::to_string(m));
    }
    unit_row(1);
    mdl.ns_labels.push_back("F");
    for (int j = 1; j < cfg.h; ++j)
        for (int i = 1; i < cfg.p; ++i) {
            std::size_t idx = ambient_comp_index(cfg, j, i);
            unit_row(idx);
            mdl.ns_labels.push_back(mdl.ambient_labels[idx]);
        }
    if (r != n) throw Error("build_ns: basis count mismatch (internal)");

    MatQ gram_q = mdl.ns_basis * gq * mdl.ns_basis.transpose();
    mdl.lattice = Lattice(to_integral(gram_q), "M_NS" + std::to_string(cfg.p));
    return mdl;
}

Lattice ns_lattice(int p) { return build_ns(standard_config(p)).lattice; }

SigmaAction sigma_matrix(const NSModel& model) {
    const FibrationConfig& cfg = model.cfg;
    const std::size_t n = ambient_dim(cfg);
    MatQ amb(n, n);  // columns: images of the ambient basis
    for (std::size_t i = 0; i < n; ++i) amb(i, 0) = model.sections[0][i];  // s -> t_1
    amb(1, 1) = 1;                                                        // F fixed
    for (int j = 1; j <= cfg.h; ++j)
        for (int i = 1; i < cfg.p; ++i) {
            std::size_t col = ambient_comp_index(cfg, j, i);
            int img = (i + cfg.k[j - 1]) % cfg.p;
            if (img == 0) {
                // C_0 = F - sum of the visible components
                amb(1, col) = 1;
                for (int i2 = 1; i2 < cfg.p; ++i2)
                    amb(ambient_comp_index(cfg, j, i2), col) = -1;
            } else {
                amb(ambient_comp_index(cfg, j, img), col) = 1;
            }
        }
    MatQ basis_cols = model.ns_basis.transpose();
    MatQ s_q = inverse(basis_cols) * amb * basis_cols;
    MatZ s;
    try {
        s = to_integral(s_q);
    } catch (const Error&) {
        throw Error("NonIntegralAction: translation does not preserve the lattice");
    }
    MatZ g = model.lattice.gram;
    if (!(s.transpose() * g * s == g))
        throw Error("sigma_matrix: not an isometry (internal)");
    return SigmaAction{std::move(s), cfg.p};
}

SublatticeBasis invariant_sublattice(const NSModel& model, const SigmaAction& s) {
    MatZ diff = s.mat - MatZ::identity(s.mat.rows());
    MatZ ker = integer_kernel(diff);  // rows: fixed vectors in NS coords
    HnfResult hn = hnf(ker);
    MatZ basis(hn.rank, ker.cols());
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < hn.rank; ++i) {
        for (std::size_t j = 0; j < ker.cols(); ++j) basis(i, j) = hn.h(i, j);
        rows.push_back(basis.row(i));
    }
    SublatticeBasis out;
    out.basis = std::move(basis);
    out.lattice = Lattice(gram_of_vectors(model.lattice, rows),
                          "NS" + std::to_string(model.cfg.p) + "_inv");
    return out;
}

namespace {

// the b-bases of the anti-invariant lattices, written against the NS basis
// order s, t_1.., F, C_i^{(j)}
std::vector<std::vector<Int>> b_vectors(const NSModel& model) {
    const int p = model.cfg.p;
    const std::size_t n = model.lattice.rank;
    auto idx = [&](const std::string& lab) -> std::size_t {
        for (std::size_t i = 0; i < model.ns_labels.size(); ++i)
            if (model.ns_labels[i] == lab) return i;
        throw Error("b_vectors: unknown label " + lab);
    };
    auto C = [&](int i, int j) { return "C" + std::to_string(i) + "_" + std::to_string(j); };
    std::vector<std::vector<Int>> bs;
    auto add = [&](std::initializer_list<std::pair<std::string, Int>> terms) {
        std::vector<Int> v(n, Int(0));
        for (const auto& [lab, coef] : terms) v[idx(lab)] += coef;
        bs.push_back(std::move(v));
    };
    if (p == 3) {
        add({{"t2", 1}, {"t1", -1}});
        add({{"s", 1}, {"t2", -1}});
        add({{C(2, 5), -3}, {"F", 1}});
        for (int i = 1; i <= 5; ++i) {
            add({{C(1, i), 1}, {C(2, i), -1}});
            if (i < 5) add({{C(1, i), 1}, {C(1, i + 1), -1}});
        }
        return bs;
    }
    // p = 5 and p = 7 share the section-difference pattern
    add({{"s", 1}, {"t1", -1}});
    for (int m = 1; m < p - 1; ++m)
        add({{"t" + std::to_string(m), 1}, {"t" + std::to_string(m + 1), -1}});
    add({{C(p - 1, model.cfg.h - 1), -p}, {"F", 1}});
    if (p == 5) {
        for (int i = 1; i <= 3; ++i) add({{C(i, 1), 1}, {C(i + 1, 1), -1}});
        add({{C(1, 1), 1}, {C(1, 2), -1}});
        for (int i = 1; i <= 3; ++i) add({{C(i, 2), 1}, {C(i + 1, 2), -1}});
        add({{C(1, 2), 1}, {C(1, 3), -1}});
        for (int i = 1; i <= 3; ++i) add({{C(i, 3), 1}, {C(i + 1, 3), -1}});
    } else {
        for (int i = 1; i <= 5; ++i) add({{C(i, 1), 1}, {C(i + 1, 1), -1}});
        add({{C(6, 1), 1}, {C(1, 2), -1}});  // continues the fiber-1 chain
        for (int i = 1; i <= 5; ++i) add({{C(i, 2), 1}, {C(i + 1, 2), -1}});
    }
    return bs;
}

}  // namespace

OmegaResult omega_lattice(const NSModel& model, const SigmaAction& s) {
    SublatticeBasis inv = invariant_sublattice(model, s);
    std::vector<std::vector<Int>> span;
    for (std::size_t i = 0; i < inv.basis.rows(); ++i) span.push_back(inv.basis.row(i));
    SublatticeBasis comp = orthogonal_complement(model.lattice, span);

    std::vector<std::vector<Int>> bs = b_vectors(model);
    if (bs.size() != comp.basis.rows())
        throw Error("BasisMismatch: rank of the complement is off");
    MatZ bmat(bs.size(), model.lattice.rank);
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = 0; j < model.lattice.rank; ++j) bmat(i, j) = bs[i][j];
    if (!(hnf(bmat).h == hnf(comp.basis).h))
        throw Error("BasisMismatch: b-vectors do not span the complement");

    MatZ m = gram_of_vectors(model.lattice, bs);
    MatZ expect = lattice_Omega(model.cfg.p).gram;
    if (!(m == expect))
        throw Error("BasisMismatch: Gram of the b-basis is off");
    OmegaResult out;
    out.lattice = Lattice(std::move(m), "Omega" + std::to_string(model.cfg.p));
    out.basis = std::move(bmat);
    return out;
}

bool disc_group_action(const NSModel& model, const SigmaAction& s,
                       const OmegaResult& omega) {
    FiniteQuadraticForm disc = discriminant_group(omega.lattice);
    MatQ b_cols = to_rational(omega.basis).transpose();  // NS coords of b-rows, as columns
    MatZ diff = s.mat - MatZ::identity(s.mat.rows());
    for (std::size_t g = 0; g < disc.ngen(); ++g) {
        // generator as a rational NS vector
        std::vector<Rat> w = mat_vec(b_cols, disc.gens.row(g));
        std::vector<Rat> d = mat_vec(to_rational(diff), w);  // sigma(w) - w
        SolveResult res = solve_linear(b_cols, d);
        if (res.status == SolveStatus::Inconsistent) return false;
        for (const Rat& c : res.x)
            if (!is_integer(c)) return false;
    }
    return true;
}

int shioda_tate_rank(const FibrationConfig& cfg) {
    check_cfg(cfg);
    return 2 + cfg.h * (cfg.p - 1);
}

Int ns_det_formula(const FibrationConfig& cfg) {
    check_cfg(cfg);
    Int num = 1;
    for (int j = 0; j < cfg.h; ++j) num *= cfg.p;
    Int den = Int(cfg.p) * cfg.p;
    if (num % den != 0) throw Error("NotInteger: m^h / n^2 is not integral");
    return num / den;
}

LefschetzResult lefschetz_solve(int p, int fixedpoints) {
    if (p < 2) throw Error("lefschetz_solve: bad prime");
    // a - b = mu - 2 and a + (p-1) b = 22  =>  p b = 24 - mu
    if ((24 - fixedpoints) % p != 0)
        throw Error("NoIntegerSolution: 24 - mu not divisible by p");
    LefschetzResult r;
    r.b = (24 - fixedpoints) / p;
    r.a = fixedpoints - 2 + r.b;
    r.rho_min = 22 - r.a + 1;
    r.m_max = 20 - r.rho_min;
    return r;
}

}  // namespace k3lat
