#include "heckelab/qpoly.hpp"

#include "heckelab/modp.hpp"

namespace heckelab {

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat& c) {
    QPoly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

QPoly QPoly::monomial(const Rat& c, std::size_t power) {
    QPoly p;
    if (c.is_zero()) return p;
    p.c_.resize(power + 1);
    p.c_[power] = c;
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t QPoly::valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return k;
}

QPoly QPoly::shifted_down(std::size_t k) const {
    if (k == 0) return *this;
    QPoly r;
    if (k >= c_.size()) return r;
    r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
    return r;
}

QPoly QPoly::shifted_up(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    QPoly r;
    r.c_.resize(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].value() * b.c_[j].value();
    }
    r.c_.reserve(acc.size());
    for (auto& x : acc) r.c_.emplace_back(std::move(x));
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a) {
    QPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.is_zero()) throw FieldError("polynomial division by zero");
    QPoly rem = *this;
    QPoly quo;
    if (rem.degree() < d.degree()) return {quo, rem};
    quo.c_.resize(static_cast<std::size_t>(rem.degree() - d.degree() + 1));
    Rat inv_lead = d.lead().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
        Rat f = rem.lead() * inv_lead;
        quo.c_[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[i + shift] -= f * d.c_[i];
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

QPoly QPoly::exact_div(const QPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw FieldError("inexact polynomial division");
    return q;
}

QPoly QPoly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return *this * lead().inverse();
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::uint64_t QPoly::eval_mod(std::uint64_t x, std::uint64_t prime) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = modarith::add(modarith::mul(acc, x, prime), modarith::reduce(*it, prime), prime);
    return acc;
}

QPoly gcd(QPoly a, QPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.is_constant()) return QPoly::constant(Rat(1));
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

}  // namespace heckelab
