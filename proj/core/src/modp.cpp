#include "heckelab/modp.hpp"

namespace heckelab::modarith {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul(r, a, m);
        a = mul(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t m) {
    a %= m;
    if (a == 0) throw FieldError("division by zero modulo prime");
    // Extended Euclid on signed 128-bit to avoid overflow.
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a;
    while (new_r != 0) {
        __int128 quot = r / new_r;
        __int128 tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw FieldError("residue not invertible (modulus not prime?)");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce(const Rat& r, std::uint64_t m) {
    mpz_class mm(std::to_string(m));
    mpz_class n = r.num() % mm;
    if (n < 0) n += mm;
    mpz_class d = r.den() % mm;
    if (d == 0) throw SpecializationError("rational denominator vanishes modulo " + std::to_string(m));
    std::uint64_t nv = std::stoull(n.get_str());
    std::uint64_t dv = std::stoull(d.get_str());
    return mul(nv, inv(dv, m), m);
}

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace heckelab::modarith
