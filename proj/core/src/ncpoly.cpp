#include "heckelab/ncpoly.hpp"

#include <limits>

namespace heckelab {

Alphabet::Alphabet(int n) : n_(n), a_(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n)) {
    if (n < 1) throw ArgumentError("generator set requires N >= 1");
    max_degree_ = 0;
    unsigned __int128 p = 1;
    while (max_degree_ < 64) {
        p *= a_;
        if (p > (static_cast<unsigned __int128>(1) << 63)) break;
        ++max_degree_;
    }
}

std::uint64_t Alphabet::words(std::uint32_t d) const {
    if (d > max_degree_) throw ResourceError("monomial degree " + std::to_string(d) + " exceeds encoding range");
    std::uint64_t r = 1;
    for (std::uint32_t k = 0; k < d; ++k) r *= a_;
    return r;
}

Monomial Alphabet::generator(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_) throw ArgumentError("generator index out of range");
    return Monomial{1, static_cast<std::uint64_t>((row - 1) * n_ + (col - 1))};
}

Monomial Alphabet::concat(const Monomial& a, const Monomial& b) const {
    const std::uint32_t d = a.degree + b.degree;
    if (d > max_degree_) throw ResourceError("monomial degree " + std::to_string(d) + " exceeds encoding range");
    return Monomial{d, a.code * words(b.degree) + b.code};
}

std::vector<int> Alphabet::letters(const Monomial& m) const {
    std::vector<int> out(m.degree);
    std::uint64_t c = m.code;
    for (std::uint32_t k = m.degree; k-- > 0;) {
        out[k] = static_cast<int>(c % a_);
        c /= a_;
    }
    return out;
}

Monomial Alphabet::from_letters(const std::vector<int>& letters) const {
    Monomial m;
    for (int l : letters) {
        if (l < 0 || static_cast<std::uint64_t>(l) >= a_) throw ArgumentError("letter out of range");
        m = concat(m, Monomial{1, static_cast<std::uint64_t>(l)});
    }
    return m;
}

std::string Alphabet::format(const Monomial& m) const {
    if (m.degree == 0) return "1";
    std::string s;
    for (int l : letters(m)) {
        if (!s.empty()) s += "*";
        s += "L(" + std::to_string(l / n_ + 1) + "," + std::to_string(l % n_ + 1) + ")";
    }
    return s;
}

}  // namespace heckelab
