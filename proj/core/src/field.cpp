#include "heckelab/field.hpp"

#include <cstdlib>

namespace heckelab {

FieldSpec FieldSpec::evaluated(const Rat& q0, bool allow_classical) {
    if (q0.is_zero() || q0 == Rat(-1) || (q0.is_one() && !allow_classical))
        throw ArgumentError("evaluated field requires q not in {0, 1, -1}, got " + q0.str());
    FieldSpec s;
    s.mode = Mode::evaluated;
    s.q_value = q0;
    return s;
}

FieldSpec FieldSpec::modular(std::uint64_t prime, std::uint64_t q0, bool allow_classical) {
    if (prime < 5 || !modarith::is_probable_prime(prime))
        throw ArgumentError("modular field requires an odd prime, got " + std::to_string(prime));
    if (prime >= (std::uint64_t{1} << 63)) throw ArgumentError("modulus must be below 2^63");
    q0 %= prime;
    if (q0 == 0 || q0 == prime - 1 || (q0 == 1 && !allow_classical))
        throw ArgumentError("modular field requires q not congruent to 0, 1, -1");
    FieldSpec s;
    s.mode = Mode::modular;
    s.prime = prime;
    s.q_residue = q0;
    return s;
}

void FieldSpec::check_dimension(int n) const {
    if (mode != Mode::modular) return;
    const unsigned __int128 bound = 2 * static_cast<unsigned __int128>(n) * n * n * n;
    if (static_cast<unsigned __int128>(prime) <= bound)
        throw ArgumentError("modular prime must exceed 2*N^4");
}

std::string FieldSpec::describe() const {
    switch (mode) {
        case Mode::symbolic:
            return "Q(q)";
        case Mode::evaluated:
            return "Q, q=" + q_value.str();
        case Mode::modular:
            return "Z/" + std::to_string(prime) + ", q=" + std::to_string(q_residue);
    }
    return {};
}

Rat specialize(const QScalar& x, const Rat& q0) {
    if (x.is_zero()) return {};
    const Rat d = x.den().eval(q0);
    if (d.is_zero()) throw SpecializationError("denominator vanishes at q=" + q0.str());
    const LaurentQ& n = x.num();
    if (n.low() < 0 && q0.is_zero()) throw SpecializationError("negative power of q at q=0");
    return n.poly().eval(q0) * q0.pow(n.low()) / d;
}

ModP specialize(const QScalar& x, std::uint64_t prime, std::uint64_t q0) {
    q0 %= prime;
    if (x.is_zero()) return ModP(0, prime);
    const std::uint64_t d = x.den().eval_mod(q0, prime);
    if (d == 0) throw SpecializationError("denominator vanishes at q=" + std::to_string(q0) + " mod " + std::to_string(prime));
    const LaurentQ& n = x.num();
    std::uint64_t v = n.poly().eval_mod(q0, prime);
    if (n.low() != 0) {
        if (q0 == 0) throw SpecializationError("negative power of q at q=0");
        std::uint64_t base = n.low() < 0 ? modarith::inv(q0, prime) : q0;
        v = modarith::mul(v, modarith::pow(base, static_cast<std::uint64_t>(std::abs(n.low())), prime), prime);
    }
    return ModP(modarith::mul(v, modarith::inv(d, prime), prime), prime);
}

std::variant<QScalar, Rat, ModP> specialize(const QScalar& x, const FieldSpec& spec) {
    switch (spec.mode) {
        case FieldSpec::Mode::symbolic:
            return x;
        case FieldSpec::Mode::evaluated:
            return specialize(x, spec.q_value);
        case FieldSpec::Mode::modular:
            return specialize(x, spec.prime, spec.q_residue);
    }
    return x;
}

std::uint64_t small_order(std::uint64_t q, std::uint64_t prime, std::uint64_t limit) {
    std::uint64_t x = q % prime;
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (x == 1) return k;
        x = modarith::mul(x, q, prime);
    }
    return 0;
}

std::optional<long> SymbolicField::to_integer(const QScalar& x) const {
    if (!x.is_constant()) return std::nullopt;
    if (x.is_zero()) return 0;
    const Rat c = x.num().poly().coeff(0);
    if (!c.is_integer() || !c.num().fits_slong_p()) return std::nullopt;
    return c.num().get_si();
}

std::optional<long> RationalField::to_integer(const Rat& x) const {
    if (!x.is_integer() || !x.num().fits_slong_p()) return std::nullopt;
    return x.num().get_si();
}

ModP ModularField::from_int(long v) const {
    if (v >= 0) return ModP(static_cast<std::uint64_t>(v), prime_);
    return -ModP(static_cast<std::uint64_t>(-v), prime_);
}

std::optional<long> ModularField::to_integer(const ModP& x) const {
    constexpr std::uint64_t window = std::uint64_t{1} << 20;
    if (x.value() <= window) return static_cast<long>(x.value());
    if (prime_ - x.value() <= window) return -static_cast<long>(prime_ - x.value());
    return std::nullopt;
}

}  // namespace heckelab
