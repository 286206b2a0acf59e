#include "k3lat/catalog.hpp"

#include "k3lat/ellns.hpp"

#include <array>
#include <optional>

namespace k3lat {

namespace {

Lattice from_ints(std::size_t n, const int* data, std::string label) {
    MatZ g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = data[i * n + j];
    return Lattice(std::move(g), std::move(label));
}

// clang-format off
const int kOmega3[12 * 12] = {
    -4,  2, -3, -2,  0, -2,  0, -2,  0, -2,  0, -2,
     2, -4,  3,  1,  0,  1,  0,  1,  0,  1,  0,  1,
    -3,  3,-18,  0,  0,  0,  0,  0,  0,  0,  3, -9,
    -2,  1,  0, -6, -3,  0,  0,  0,  0,  0,  0,  0,
     0,  0,  0, -3, -4,  3,  2,  0,  0,  0,  0,  0,
    -2,  1,  0,  0,  3, -6, -3,  0,  0,  0,  0,  0,
     0,  0,  0,  0,  2, -3, -4,  3,  2,  0,  0,  0,
    -2,  1,  0,  0,  0,  0,  3, -6, -3,  0,  0,  0,
     0,  0,  0,  0,  0,  0,  2, -3, -4,  3,  2,  0,
    -2,  1,  0,  0,  0,  0,  0,  0,  3, -6, -3,  0,
     0,  0,  3,  0,  0,  0,  0,  0,  2, -3, -4,  3,
    -2,  1, -9,  0,  0,  0,  0,  0,  0,  0,  3, -6,
};

const int kOmega5[16 * 16] = {
    -4,  2,  0,  0,  0, -1,  0,  0,  0, -1,  0,  0, -1,  1, -1,  0,
     2, -4,  2,  0,  5,  2, -1,  0,  0,  2, -1,  0,  1, -1,  1,  1,
     0,  2, -4,  2, -5, -1,  2, -1,  0, -1,  2, -1,  1, -1,  0, -1,
     0,  0,  2, -4,  0,  0, -1,  2,  0,  0, -1,  2, -1,  1,  1, -1,
     0,  5, -5,  0,-50,  0,  0,  0,  0,  0,  0,  0,  0,  0,  5,-15,
    -1,  2, -1,  0,  0, -6,  4, -1, -3,  0,  0,  0,  0,  0,  0,  0,
     0, -1,  2, -1,  0,  4, -6,  4,  1,  0,  0,  0,  0,  0,  0,  0,
     0,  0, -1,  2,  0, -1,  4, -6,  0,  0,  0,  0,  0,  0,  0,  0,
     0,  0,  0,  0,  0, -3,  1,  0, -4,  3, -1,  0,  2,  0,  0,  0,
    -1,  2, -1,  0,  0,  0,  0,  0,  3, -6,  4, -1, -3,  0,  0,  0,
     0, -1,  2, -1,  0,  0,  0,  0, -1,  4, -6,  4,  1,  0,  0,  0,
     0,  0, -1,  2,  0,  0,  0,  0,  0, -1,  4, -6,  0,  0,  0,  0,
    -1,  1,  1, -1,  0,  0,  0,  0,  2, -3,  1,  0, -4,  3, -1,  0,
     1, -1, -1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  3, -6,  4, -1,
    -1,  1,  0,  1,  5,  0,  0,  0,  0,  0,  0,  0, -1,  4, -6,  4,
     0,  1, -1, -1,-15,  0,  0,  0,  0,  0,  0,  0,  0, -1,  4, -6,
};

const int kOmega7[18 * 18] = {
    -4,  2,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  1, -1,  0,  0,  0,
     2, -4,  2,  0,  0,  0,  0,  2, -1,  0,  0,  0,  0, -1,  1,  1, -1,  0,
     0,  2, -4,  2,  0,  0,  7, -1,  2, -1,  0,  0,  0,  0,  0, -1,  1,  1,
     0,  0,  2, -4,  2,  0, -7,  0, -1,  2, -1,  0,  1, -1,  0,  0,  0, -1,
     0,  0,  0,  2, -4,  2,  0,  0,  0, -1,  2, -1, -1,  1,  1, -1,  0,  0,
     0,  0,  0,  0,  2, -4,  0,  0,  0,  0, -1,  2, -1,  0, -1,  1,  1, -1,
     0,  0,  7, -7,  0,  0,-98,  0,  0,  0,  0,  0,  0,  0,  0,  0,  7,-21,
    -1,  2, -1,  0,  0,  0,  0, -6,  4, -1,  0,  0,  0,  0,  0,  0,  0,  0,
     0, -1,  2, -1,  0,  0,  0,  4, -6,  4, -1,  0,  0,  0,  0,  0,  0,  0,
     0,  0, -1,  2, -1,  0,  0, -1,  4, -6,  4, -1,  0,  0,  0,  0,  0,  0,
     0,  0,  0, -1,  2, -1,  0,  0, -1,  4, -6,  4, -1,  0,  0,  0,  0,  0,
     0,  0,  0,  0, -1,  2,  0,  0,  0, -1,  4, -6,  3,  0,  0,  0,  0,  0,
     0,  0,  0,  1, -1, -1,  0,  0,  0,  0, -1,  3, -4,  3, -1,  0,  0,  0,
     1, -1,  0, -1,  1,  0,  0,  0,  0,  0,  0,  0,  3, -6,  4, -1,  0,  0,
    -1,  1,  0,  0,  1, -1,  0,  0,  0,  0,  0,  0, -1,  4, -6,  4, -1,  0,
     0,  1, -1,  0, -1,  1,  0,  0,  0,  0,  0,  0,  0, -1,  4, -6,  4, -1,
     0, -1,  1,  0,  0,  1,  7,  0,  0,  0,  0,  0,  0,  0, -1,  4, -6,  4,
     0,  0,  1, -1,  0, -1,-21,  0,  0,  0,  0,  0,  0,  0,  0, -1,  4, -6,
};
// clang-format on

}  // namespace

Lattice lattice_U() {
    return Lattice(MatZ{{0, 1}, {1, 0}}, "U");
}

Lattice lattice_U_scaled(const Int& n) {
    if (n == 0) throw Error("U(n): n must be nonzero");
    MatZ g{{0, n}, {n, 0}};
    return Lattice(std::move(g), "U(" + n.get_str() + ")");
}

Lattice lattice_A(int n) {
    if (n < 1) throw Error("A(n): n must be positive");
    MatZ g(n, n);
    for (int i = 0; i < n; ++i) {
        g(i, i) = -2;
        if (i + 1 < n) {
            g(i, i + 1) = 1;
            g(i + 1, i) = 1;
        }
    }
    return Lattice(std::move(g), "A(" + std::to_string(n) + ")");
}

Lattice lattice_E8_neg() {
    // Dynkin graph: chain 1-3-4-5-6-7-8 with 2 attached to 4 (Bourbaki
    // numbering), sign-flipped to the negative definite convention.
    MatZ g(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = -2;
    const std::array<std::pair<int, int>, 7> edges{{{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}};
    for (auto [a, b] : edges) {
        g(a, b) = 1;
        g(b, a) = 1;
    }
    return Lattice(std::move(g), "E8(-1)");
}

Lattice lattice_K3() {
    Lattice l = direct_sum({lattice_U(), lattice_U(), lattice_U(),
                            lattice_E8_neg(), lattice_E8_neg()});
    l.label = "Lambda_K3";
    return l;
}

Lattice lattice_rank1(const Int& two_d) {
    MatZ g(1, 1);
    g(0, 0) = two_d;
    return Lattice(std::move(g), "<" + two_d.get_str() + ">");
}

Lattice lattice_Upsilon() {
    return Lattice(MatZ{{4, 1}, {1, 2}}, "Upsilon");
}

Lattice lattice_Omega(int p) {
    switch (p) {
        case 3: return from_ints(12, kOmega3, "Omega3");
        case 5: return from_ints(16, kOmega5, "Omega5");
        case 7: return from_ints(18, kOmega7, "Omega7");
        default: throw Error("Omega_p: p must be 3, 5 or 7");
    }
}

Lattice standard_lattice(const std::string& name) {
    if (name == "U") return lattice_U();
    if (name == "E8(-1)") return lattice_E8_neg();
    if (name == "Lambda_K3") return lattice_K3();
    if (name == "Upsilon") return lattice_Upsilon();
    if (name == "Omega3") return lattice_Omega(3);
    if (name == "Omega5") return lattice_Omega(5);
    if (name == "Omega7") return lattice_Omega(7);
    if (name == "M_NS3") return ns_lattice(3);
    if (name == "M_NS5") return ns_lattice(5);
    if (name == "M_NS7") return ns_lattice(7);
    auto param_of = [&](const std::string& prefix) -> std::optional<Int> {
        if (name.size() > prefix.size() + 2 && name.compare(0, prefix.size() + 1, prefix + "(") == 0 &&
            name.back() == ')') {
            std::string body = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
            try {
                return Int(body);
            } catch (const std::invalid_argument&) {
                throw Error("bad parameter in lattice name: " + name);
            }
        }
        return std::nullopt;
    };
    if (auto n = param_of("U")) return lattice_U_scaled(*n);
    if (auto n = param_of("A")) {
        if (*n < 1 || *n > 64) throw Error("bad parameter in lattice name: " + name);
        return lattice_A(static_cast<int>(n->get_si()));
    }
    if (auto n = param_of("rank1")) return lattice_rank1(*n);
    throw Error("unknown lattice name: " + name);
}

}  // namespace k3lat
