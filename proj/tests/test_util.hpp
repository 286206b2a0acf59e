#pragma once

#include "k3lat/mat.hpp"

#include <random>

namespace k3lat::testutil {

// Random unimodular matrix as a short product of elementary row operations,
// with small coefficients so entry growth stays tame.
inline MatZ random_unimodular(std::size_t n, std::mt19937& rng, int ops = 20) {
    MatZ u = MatZ::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-1, 1);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int s = 0; s < ops; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        switch (kind(rng)) {
            case 0: {
                int c = coeff(rng);
                for (std::size_t k = 0; k < n; ++k) u(i, k) += Int(c) * u(j, k);
                break;
            }
            case 1:
                u.swap_rows(i, j);
                break;
            default:
                for (std::size_t k = 0; k < n; ++k) u(i, k) = -u(i, k);
                break;
        }
    }
    return u;
}

}  // namespace k3lat::testutil
