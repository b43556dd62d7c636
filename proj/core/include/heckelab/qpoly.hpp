#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "heckelab/rat.hpp"

namespace heckelab {

// Dense univariate polynomial in q over the rationals, coefficient of q^k at
// index k. Never stores a trailing zero; the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly constant(const Rat& c);
    static QPoly monomial(const Rat& c, std::size_t power);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const Rat& lead() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const noexcept { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(); }

    // Number of low-order zero coefficients (the q-adic valuation).
    std::size_t valuation() const;
    QPoly shifted_down(std::size_t k) const;  // divides by q^k, k <= valuation()
    QPoly shifted_up(std::size_t k) const;    // multiplies by q^k

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const Rat& s);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rat& s) { return a *= s; }
    friend QPoly operator-(const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    // Euclidean division; throws FieldError when dividing by zero.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
    // Exact division, asserting a zero remainder.
    QPoly exact_div(const QPoly& d) const;
    QPoly monic() const;

    Rat eval(const Rat& x) const;
    // Horner evaluation modulo `prime` at residue x. Throws SpecializationError
    // if a coefficient denominator is divisible by the prime.
    std::uint64_t eval_mod(std::uint64_t x, std::uint64_t prime) const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

}  // namespace heckelab
