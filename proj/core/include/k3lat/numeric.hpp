#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace k3lat {

// All arithmetic in this library is exact.  Int/Rat are GMP big integers and
// reduced rationals (mpq_class keeps a positive canonical denominator).
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// mpq_class(num, den) does not reduce the fraction; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw Error("value is not an integer: " + q.get_str());
    return q.get_num();
}

// Residue in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// q reduced into [0, m) modulo m (m a positive rational).
inline Rat mod_rat(const Rat& q, const Rat& m) {
    Rat t = q / m;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return q - m * Rat(fl);
}

inline Int isqrt_exact(const Int& n) {
    if (n < 0) throw Error("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r != n) throw Error("not a perfect square: " + n.get_str());
    return r;
}

}  // namespace k3lat
