#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "heckelab/modp.hpp"
#include "heckelab/qscalar.hpp"
#include "heckelab/rat.hpp"

namespace heckelab {

// Where the scalars of a computation live.
//   symbolic         : Q(q), q transcendental
//   evaluated(q0)    : Q with q = q0
//   modular(p, q0)   : Z/p with q = q0
struct FieldSpec {
    enum class Mode { symbolic, evaluated, modular };

    Mode mode = Mode::symbolic;
    Rat q_value;                 // evaluated mode
    std::uint64_t prime = 0;     // modular mode
    std::uint64_t q_residue = 0; // modular mode

    static constexpr std::uint64_t default_prime = (std::uint64_t{1} << 61) - 1;

    static FieldSpec symbolic() { return {}; }
    // q0 = 1 is the classical point; it is rejected unless allow_classical.
    static FieldSpec evaluated(const Rat& q0, bool allow_classical = false);
    static FieldSpec modular(std::uint64_t prime, std::uint64_t q0, bool allow_classical = false);

    // Checks the size condition prime > 2 N^4 for modular mode.
    void check_dimension(int n) const;
    std::string describe() const;
};

Rat specialize(const QScalar& x, const Rat& q0);
ModP specialize(const QScalar& x, std::uint64_t prime, std::uint64_t q0);
std::variant<QScalar, Rat, ModP> specialize(const QScalar& x, const FieldSpec& spec);

// Multiplicative order of q modulo prime, or 0 if it exceeds `limit`.
std::uint64_t small_order(std::uint64_t q, std::uint64_t prime, std::uint64_t limit);

// Field contexts. Each provides the scalar type, the distinguished element q,
// conversion of symbolic data into the field, and formatting. Algorithms are
// templated on the context.

class SymbolicField {
public:
    using Scalar = QScalar;
    Scalar q() const { return QScalar::q(); }
    Scalar one() const { return QScalar(1); }
    Scalar from_int(long v) const { return QScalar(v); }
    Scalar convert(const QScalar& x) const { return x; }
    std::string format(const Scalar& x) const { return x.str(); }
    std::optional<long> to_integer(const Scalar& x) const;
    FieldSpec spec() const { return FieldSpec::symbolic(); }
    bool exact() const { return true; }
};

class RationalField {
public:
    using Scalar = Rat;
    explicit RationalField(Rat q0) : q_(std::move(q0)) {}
    Scalar q() const { return q_; }
    Scalar one() const { return Rat(1); }
    Scalar from_int(long v) const { return Rat(v); }
    Scalar convert(const QScalar& x) const { return specialize(x, q_); }
    std::string format(const Scalar& x) const { return x.str(); }
    std::optional<long> to_integer(const Scalar& x) const;
    FieldSpec spec() const { return FieldSpec::evaluated(q_, true); }
    bool exact() const { return true; }

private:
    Rat q_;
};

class ModularField {
public:
    using Scalar = ModP;
    ModularField(std::uint64_t prime, std::uint64_t q0) : prime_(prime), q_(q0 % prime) {}
    Scalar q() const { return ModP(q_, prime_); }
    Scalar one() const { return ModP(1, prime_); }
    Scalar from_int(long v) const;
    Scalar convert(const QScalar& x) const { return specialize(x, prime_, q_); }
    std::string format(const Scalar& x) const { return x.str(); }
    // Residues within 2^20 of 0 are read as small integers.
    std::optional<long> to_integer(const Scalar& x) const;
    FieldSpec spec() const { return FieldSpec::modular(prime_, q_, true); }
    bool exact() const { return false; }
    std::uint64_t prime() const { return prime_; }

private:
    std::uint64_t prime_;
    std::uint64_t q_;
};

// Pivot cost used by elimination; lower is preferred.
inline std::size_t pivot_cost(const QScalar&) { return 0; }  // first nonzero wins
inline std::size_t pivot_cost(const Rat& x) { return x.bit_size(); }
inline std::size_t pivot_cost(const ModP&) { return 0; }

// q-combinatorics evaluated in an arbitrary field context.
template <class Field>
typename Field::Scalar q_number_in(const Field& f, long p) {
    using S = typename Field::Scalar;
    if (p < 1) throw ArgumentError("q_number requires p >= 1");
    const S q = f.q();
    const S qinv = f.one() / q;
    S acc{};
    S term = f.one();
    for (long k = 0; k < p - 1; ++k) term = term * q;  // q^(p-1)
    const S qinv2 = qinv * qinv;
    for (long k = 0; k < p; ++k) {
        acc = acc + term;
        term = term * qinv2;
    }
    return acc;
}

template <class Field>
typename Field::Scalar q_pow_in(const Field& f, long e) {
    using S = typename Field::Scalar;
    S base = e < 0 ? f.one() / f.q() : f.q();
    S r = f.one();
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r = r * base;
    return r;
}

template <class Field>
typename Field::Scalar q_factorial_in(const Field& f, long p) {
    auto r = f.one();
    for (long k = 2; k <= p; ++k) r = r * q_number_in(f, k);
    return r;
}

template <class Field>
typename Field::Scalar q_binomial_in(const Field& f, long p, long i) {
    if (i < 0 || i > p) throw ArgumentError("q_binomial requires 0 <= i <= p");
    return q_factorial_in(f, p) / (q_factorial_in(f, i) * q_factorial_in(f, p - i));
}

}  // namespace heckelab
