#include "k3lat/poly.hpp"

#include <sstream>

namespace k3lat {

PolyQ::PolyQ(const Rat& c0) {
    if (c0 != 0) c_.push_back(c0);
}

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::t() { return monomial(1); }

PolyQ PolyQ::monomial(std::size_t deg, const Rat& c) {
    PolyQ p;
    if (c != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = c;
    }
    return p;
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& PolyQ::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat PolyQ::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

PolyQ PolyQ::operator-() const {
    PolyQ r(*this);
    for (Rat& x : r.c_) x = -x;
    return r;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    PolyQ r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (c_.empty() || o.c_.empty()) return PolyQ();
    PolyQ r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

PolyQ PolyQ::operator*(const Rat& s) const {
    if (s == 0) return PolyQ();
    PolyQ r(*this);
    for (Rat& x : r.c_) x *= s;
    return r;
}

PolyQ PolyQ::derivative() const {
    PolyQ r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rat(static_cast<long>(i)));
    r.trim();
    return r;
}

Rat PolyQ::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

PolyQ PolyQ::monic() const {
    if (c_.empty()) return PolyQ();
    return *this * (Rat(1) / leading());
}

std::string PolyQ::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        Rat c = c_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

PolyQ pow(const PolyQ& base, std::size_t e) {
    PolyQ r(Rat(1));
    for (std::size_t i = 0; i < e; ++i) r = r * base;
    return r;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& f, const PolyQ& g) {
    if (g.is_zero()) throw Error("polynomial division by zero");
    PolyQ r = f;
    std::vector<Rat> q;
    if (f.degree() >= g.degree()) q.assign(f.degree() - g.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
        Rat c = r.leading() / g.leading();
        q[shift] = c;
        r = r - PolyQ::monomial(shift, c) * g;
    }
    return {PolyQ(std::move(q)), r};
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ x = a, y = b;
    while (!y.is_zero()) {
        PolyQ r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

std::vector<std::pair<PolyQ, std::size_t>> squarefree_factor(const PolyQ& f) {
    std::vector<std::pair<PolyQ, std::size_t>> out;
    if (f.degree() < 1) return out;
    PolyQ fm = f.monic();
    PolyQ g = poly_gcd(fm, fm.derivative());
    PolyQ b = divmod(fm, g).first;
    PolyQ c = divmod(fm.derivative(), g).first;
    PolyQ d = c - b.derivative();
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        PolyQ ai = poly_gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = c - b.derivative();
    }
    return out;
}

std::size_t vanishing_order(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero()) throw Error("vanishing order of zero polynomial");
    if (g.degree() < 1) throw Error("vanishing order at constant place");
    std::size_t ord = 0;
    PolyQ r = f;
    for (;;) {
        auto [q, rem] = divmod(r, g);
        if (!rem.is_zero()) break;
        ++ord;
        r = q;
    }
    return ord;
}

RatFunc::RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = PolyQ(Rat(1));
        return;
    }
    PolyQ g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    Rat lc = den_.leading();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error("rational function division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc pow(const RatFunc& base, std::size_t e) {
    RatFunc r(Rat(1));
    for (std::size_t i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace k3lat
