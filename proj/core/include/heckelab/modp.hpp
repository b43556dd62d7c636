#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "heckelab/errors.hpp"
#include "heckelab/rat.hpp"

namespace heckelab {

namespace modarith {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t r = a + b;
    return (r >= m || r < a) ? r - m : r;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Modular inverse for prime m; throws FieldError on zero.
std::uint64_t inv(std::uint64_t a, std::uint64_t m);
// Image of a rational; throws SpecializationError if the denominator vanishes.
std::uint64_t reduce(const Rat& r, std::uint64_t m);
bool is_probable_prime(std::uint64_t n);

}  // namespace modarith

// Residue modulo a prime. The modulus travels with the value so that values
// from different moduli can never be mixed silently. A default-constructed
// ModP is the zero of any modulus (modulus 0 = "unbound").
class ModP {
public:
    ModP() = default;
    ModP(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), m_(modulus) {}

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return m_; }
    bool is_zero() const noexcept { return v_ == 0; }

    ModP inverse() const { return ModP(modarith::inv(v_, m_), m_); }

    ModP& operator+=(const ModP& o) { bind(o); v_ = modarith::add(v_, o.v_, m_); return *this; }
    ModP& operator-=(const ModP& o) { bind(o); v_ = modarith::sub(v_, o.v_, m_); return *this; }
    ModP& operator*=(const ModP& o) { bind(o); v_ = m_ ? modarith::mul(v_, o.v_, m_) : 0; return *this; }
    ModP& operator/=(const ModP& o) {
        bind(o);
        if (o.v_ == 0) throw FieldError("division by zero modulo prime");
        v_ = modarith::mul(v_, modarith::inv(o.v_, m_), m_);
        return *this;
    }
    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    friend ModP operator-(const ModP& a) {
        ModP r;
        r.m_ = a.m_;
        r.v_ = a.v_ == 0 ? 0 : a.m_ - a.v_;
        return r;
    }
    friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ModP& a, const ModP& b) { return a.v_ != b.v_; }

    std::string str() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.v_; }

private:
    void bind(const ModP& o) {
        if (m_ == 0) {
            m_ = o.m_;
        } else if (o.m_ != 0 && o.m_ != m_) {
            throw FieldError("mixing residues of different moduli");
        }
    }

    std::uint64_t v_ = 0;
    std::uint64_t m_ = 0;
};

inline bool is_zero(const ModP& x) { return x.is_zero(); }

}  // namespace heckelab
