#include "k3lat/mat.hpp"

namespace k3lat {

MatQ to_rational(const MatZ& m) {
    MatQ r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

MatZ to_integral(const MatQ& m) {
    MatZ r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_int(m(i, j));
    return r;
}

Rat inner_q(const MatZ& gram, const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (x.size() != gram.rows() || y.size() != gram.cols())
        throw Error("inner product dimension mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            acc += x[i] * Rat(gram(i, j)) * y[j];
        }
    }
    return acc;
}

std::vector<Rat> mat_vec(const MatQ& m, const std::vector<Rat>& v) {
    if (v.size() != m.cols()) throw Error("mat_vec dimension mismatch");
    std::vector<Rat> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

}  // namespace k3lat
