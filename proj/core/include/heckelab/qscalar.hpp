#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckelab/qpoly.hpp"
#include "heckelab/rat.hpp"

namespace heckelab {

// Laurent polynomial sum_k c_k q^k with rational coefficients, stored as
// q^low * poly(q) where poly has a nonzero constant term (or is zero).
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(const Rat& c, long exponent);
    // q^shift * p; p may have a nonzero valuation, it is absorbed into the shift.
    LaurentQ(long shift, const QPoly& p);
    static LaurentQ from_terms(const std::map<long, Rat>& terms);

    bool is_zero() const noexcept { return poly_.is_zero(); }
    long low() const noexcept { return low_; }
    long high() const noexcept { return low_ + poly_.degree(); }
    const QPoly& poly() const noexcept { return poly_; }
    Rat coefficient(long k) const;
    // Nonzero terms, ascending exponent.
    std::vector<std::pair<long, Rat>> terms() const;

    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o) { return *this += -o; }
    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    friend LaurentQ operator-(const LaurentQ& a);
    friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
        return a.poly_ == b.poly_ && (a.is_zero() || a.low_ == b.low_);
    }

private:
    long low_ = 0;
    QPoly poly_;
};

// Element of the rational function field Q(q) in canonical form:
// numerator is a Laurent polynomial, denominator is a polynomial with
// constant term 1, and the two are coprime. Equal values have identical
// representations.
class QScalar {
public:
    QScalar() = default;
    QScalar(long v) : num_(Rat(v), 0) {}  // NOLINT(google-explicit-constructor)
    QScalar(const Rat& v) : num_(v, 0) {}  // NOLINT(google-explicit-constructor)
    QScalar(LaurentQ num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
    // General fraction; normalizes. Throws FieldError on a zero denominator.
    QScalar(const LaurentQ& num, const LaurentQ& den);

    static QScalar q() { return QScalar(LaurentQ(Rat(1), 1)); }
    static QScalar q_pow(long k) { return QScalar(LaurentQ(Rat(1), k)); }

    const LaurentQ& num() const noexcept { return num_; }
    const QPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const noexcept { return den_.is_one(); }
    // True for a rational constant (no q dependence).
    bool is_constant() const;
    // Sum of numerator and denominator spans; used as a pivot cost.
    std::size_t complexity() const;

    QScalar inverse() const;
    QScalar pow(long e) const;

    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o) { return *this += -o; }
    QScalar& operator*=(const QScalar& o);
    QScalar& operator/=(const QScalar& o) { return *this *= o.inverse(); }
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
    friend QScalar operator-(const QScalar& a);
    friend bool operator==(const QScalar& a, const QScalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    // Canonical text in the scalar grammar, e.g. "q^-1 + q^-3" or
    // "(q^2 - 1)/(q^2 + 1)". parse(str()) == *this.
    std::string str() const;
    static QScalar parse(std::string_view text);
    friend std::ostream& operator<<(std::ostream& os, const QScalar& x) { return os << x.str(); }

    std::size_t hash() const;

private:
    void normalize();
    LaurentQ num_;
    QPoly den_ = QPoly::constant(Rat(1));
};

inline bool is_zero(const QScalar& x) { return x.is_zero(); }

// p_q = (q^p - q^-p)/(q - q^-1) = q^(p-1) + q^(p-3) + ... + q^(1-p).
QScalar q_number(long p);
// 1_q 2_q ... p_q, with 0_q! = 1.
QScalar q_factorial(long p);
// p_q! / (i_q! (p-i)_q!). Throws ArgumentError unless 0 <= i <= p.
QScalar q_binomial(long p, long i);

// Formats a Laurent polynomial as a sum in descending exponent order.
std::string format_laurent(const LaurentQ& x);

}  // namespace heckelab

template <>
struct std::hash<heckelab::QScalar> {
    std::size_t operator()(const heckelab::QScalar& x) const { return x.hash(); }
};
