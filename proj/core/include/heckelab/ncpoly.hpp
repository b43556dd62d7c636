#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/tensor.hpp"

namespace heckelab {

// Word in the N^2 generators L_i^j. Generator L_i^j (1-based) is letter
// (i-1)*N + (j-1). A word w1 w2 ... wd is encoded as the base-N^2 number
// with w1 most significant, so the defaulted comparison (degree, then code)
// is degree-lexicographic.
struct Monomial {
    std::uint32_t degree = 0;
    std::uint64_t code = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Alphabet bookkeeping for a fixed N.
class Alphabet {
public:
    explicit Alphabet(int n);
    int n() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return a_; }
    // Number of words of length d; throws ResourceError on overflow.
    std::uint64_t words(std::uint32_t d) const;
    Monomial generator(int row, int col) const;  // 1-based L_row^col
    Monomial concat(const Monomial& a, const Monomial& b) const;
    std::vector<int> letters(const Monomial& m) const;
    Monomial from_letters(const std::vector<int>& letters) const;
    // "L(1,1)*L(2,2)", or "1" for the empty word.
    std::string format(const Monomial& m) const;
    std::uint32_t max_degree() const noexcept { return max_degree_; }

private:
    int n_;
    std::uint64_t a_;
    std::uint32_t max_degree_;
};

// Element of the free associative algebra on the L_i^j over scalars S.
template <class S>
class NCPoly {
public:
    using Scalar = S;
    using Terms = std::map<Monomial, S>;

    NCPoly() = default;
    explicit NCPoly(int n) : n_(n) {}
    static NCPoly constant(int n, const S& c) {
        NCPoly p(n);
        if (!::heckelab::is_zero(c)) p.terms_.emplace(Monomial{}, c);
        return p;
    }
    static NCPoly generator(const Alphabet& al, int row, int col, const S& one) {
        NCPoly p(al.n());
        p.terms_.emplace(al.generator(row, col), one);
        return p;
    }
    static NCPoly monomial(int n, const Monomial& m, const S& c) {
        NCPoly p(n);
        if (!::heckelab::is_zero(c)) p.terms_.emplace(m, c);
        return p;
    }

    int n() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    // Degree if homogeneous (-1 for zero), -2 if mixed.
    long homogeneous_degree() const {
        if (terms_.empty()) return -1;
        const auto lo = terms_.begin()->first.degree;
        const auto hi = terms_.rbegin()->first.degree;
        return lo == hi ? static_cast<long>(lo) : -2;
    }

    S coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? S{} : it->second;
    }

    void add_term(const Monomial& m, const S& c) {
        if (::heckelab::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (::heckelab::is_zero(it->second)) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        bind(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        bind(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    NCPoly& operator*=(const S& s) {
        if (::heckelab::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c = c * s;
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(const NCPoly& a) {
        NCPoly r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend NCPoly operator*(const S& s, NCPoly a) { return a *= s; }
    friend NCPoly operator*(NCPoly a, const S& s) { return a *= s; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) { return nc_mul(a, b); }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    friend NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
        NCPoly r(a.n_ ? a.n_ : b.n_);
        if (a.is_zero() || b.is_zero()) return r;
        if (a.n_ != b.n_) throw ShapeError("multiplying polynomials over different generator sets");
        const Alphabet al(r.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(al.concat(ma, mb), ca * cb);
        return r;
    }

    template <class Fmt>
    std::string str(const Alphabet& al, Fmt&& fmt_scalar) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + fmt_scalar(c) + ")";
            if (m.degree) out += "*" + al.format(m);
        }
        return out;
    }

private:
    void bind(const NCPoly& o) {
        if (n_ == 0) {
            n_ = o.n_;
        } else if (o.n_ != 0 && o.n_ != n_) {
            throw ShapeError("adding polynomials over different generator sets");
        }
    }

    int n_ = 0;
    Terms terms_;
};

template <class S>
bool is_zero(const NCPoly<S>& p) {
    return p.is_zero();
}

template <class S>
NCPoly<S> nc_add(const NCPoly<S>& a, const NCPoly<S>& b) {
    return a + b;
}

template <class S>
NCPoly<S> nc_scale(const S& s, const NCPoly<S>& a) {
    return s * a;
}

template <class S>
NCPoly<S> commutator(const NCPoly<S>& a, const NCPoly<S>& b) {
    return a * b - b * a;
}

// Square matrix of NC polynomials indexed by flattened multi-indices of
// V^{(x) k}; same index convention as TensorOperator.
template <class S>
class NCMatrix {
public:
    NCMatrix(int n, int arity) : space_(n, arity), cells_(std::size_t{space_.size()} * space_.size(), NCPoly<S>(n)) {}

    int n() const noexcept { return space_.dim(); }
    int arity() const noexcept { return space_.arity(); }
    std::uint32_t size() const noexcept { return space_.size(); }
    const IndexSpace& space() const noexcept { return space_; }

    NCPoly<S>& operator()(std::uint32_t r, std::uint32_t c) { return cells_[std::size_t{r} * size() + c]; }
    const NCPoly<S>& operator()(std::uint32_t r, std::uint32_t c) const { return cells_[std::size_t{r} * size() + c]; }

    // The generator matrix L embedded in the first tensor slot:
    // (L_1)_{(a, rest)}^{(b, rest)} = L_a^b.
    static NCMatrix generator_matrix(int n, int arity, const S& one) {
        NCMatrix m(n, arity);
        const Alphabet al(n);
        const std::uint32_t rest = m.size() / static_cast<std::uint32_t>(n);
        for (std::uint32_t t = 0; t < rest; ++t)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    m(static_cast<std::uint32_t>(a) + static_cast<std::uint32_t>(n) * t,
                      static_cast<std::uint32_t>(b) + static_cast<std::uint32_t>(n) * t) =
                        NCPoly<S>::generator(al, a + 1, b + 1, one);
        return m;
    }

    friend NCMatrix operator*(const NCMatrix& a, const NCMatrix& b) {
        NCMatrix r(a.n(), a.arity());
        for (std::uint32_t i = 0; i < a.size(); ++i)
            for (std::uint32_t k = 0; k < a.size(); ++k) {
                const auto& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::uint32_t j = 0; j < a.size(); ++j)
                    if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend NCMatrix operator*(const TensorOperator<S>& a, const NCMatrix& b) {
        NCMatrix r(b.n(), b.arity());
        for (std::uint32_t i = 0; i < a.size(); ++i)
            for (const auto& [k, x] : a.row(i))
                for (std::uint32_t j = 0; j < a.size(); ++j)
                    if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        return r;
    }
    friend NCMatrix operator*(const NCMatrix& a, const TensorOperator<S>& b) {
        NCMatrix r(a.n(), a.arity());
        for (std::uint32_t i = 0; i < a.size(); ++i)
            for (std::uint32_t k = 0; k < a.size(); ++k) {
                const auto& x = a(i, k);
                if (x.is_zero()) continue;
                for (const auto& [j, y] : b.row(k)) r(i, j) += x * y;
            }
        return r;
    }
    friend NCMatrix operator-(NCMatrix a, const NCMatrix& b) {
        for (std::size_t i = 0; i < a.cells_.size(); ++i) a.cells_[i] -= b.cells_[i];
        return a;
    }

private:
    IndexSpace space_;
    std::vector<NCPoly<S>> cells_;
};

// Vector of NC polynomials over V^{(x) p}; used both as a column (lower
// index, operators act from the left) and as a row (upper index, operators
// act from the right).
template <class S>
struct NCVector {
    IndexSpace space;
    std::vector<NCPoly<S>> entries;

    NCVector(int n, int arity) : space(n, arity), entries(space.size(), NCPoly<S>(n)) {}

    template <class Tensor>
    static NCVector from_scalars(const Tensor& t) {
        NCVector v(t.dim, t.rank);
        for (std::size_t i = 0; i < t.entries.size(); ++i) v.entries[i] = NCPoly<S>::constant(t.dim, t.entries[i]);
        return v;
    }

    bool is_zero() const {
        for (const auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }
};

// Row vector times scalar operator: (w A)^j = sum_i w^i A_i^j.
template <class S>
NCVector<S> right_apply(const NCVector<S>& w, const TensorOperator<S>& a) {
    NCVector<S> r(w.space.dim(), w.space.arity());
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        if (w.entries[i].is_zero()) continue;
        for (const auto& [j, x] : a.row(i)) r.entries[j] += w.entries[i] * x;
    }
    return r;
}

// Scalar operator times column vector: (A w)_i = sum_k A_i^k w_k.
template <class S>
NCVector<S> left_apply(const TensorOperator<S>& a, const NCVector<S>& w) {
    NCVector<S> r(w.space.dim(), w.space.arity());
    for (std::uint32_t i = 0; i < a.size(); ++i)
        for (const auto& [k, x] : a.row(i))
            if (!w.entries[k].is_zero()) r.entries[i] += x * w.entries[k];
    return r;
}

// Row vector times L_1: (w L_1)^{(b, rest)} = sum_a w^{(a, rest)} L_a^b.
template <class S>
NCVector<S> right_apply_generators(const NCVector<S>& w, const S& one) {
    const int n = w.space.dim();
    const Alphabet al(n);
    NCVector<S> r(n, w.space.arity());
    for (std::uint32_t idx = 0; idx < w.space.size(); ++idx) {
        if (w.entries[idx].is_zero()) continue;
        const int a = static_cast<int>(idx % static_cast<std::uint32_t>(n));
        const std::uint32_t rest = idx - static_cast<std::uint32_t>(a);
        for (int b = 0; b < n; ++b)
            r.entries[rest + static_cast<std::uint32_t>(b)] += w.entries[idx] * NCPoly<S>::generator(al, a + 1, b + 1, one);
    }
    return r;
}

// L_1 times column vector: (L_1 w)_{(a, rest)} = sum_b L_a^b w_{(b, rest)}.
template <class S>
NCVector<S> left_apply_generators(const NCVector<S>& w, const S& one) {
    const int n = w.space.dim();
    const Alphabet al(n);
    NCVector<S> r(n, w.space.arity());
    for (std::uint32_t idx = 0; idx < w.space.size(); ++idx) {
        const int a = static_cast<int>(idx % static_cast<std::uint32_t>(n));
        const std::uint32_t rest = idx - static_cast<std::uint32_t>(a);
        for (int b = 0; b < n; ++b) {
            const auto& x = w.entries[rest + static_cast<std::uint32_t>(b)];
            if (!x.is_zero()) r.entries[idx] += NCPoly<S>::generator(al, a + 1, b + 1, one) * x;
        }
    }
    return r;
}

// sum_i w^i u_i for an NC row vector and a scalar column.
template <class S>
NCPoly<S> contract(const NCVector<S>& w, const CoTensor<S>& u) {
    NCPoly<S> acc(w.space.dim());
    for (std::size_t i = 0; i < w.entries.size(); ++i)
        if (!is_zero(u.entries[i]) && !w.entries[i].is_zero()) acc += w.entries[i] * u.entries[i];
    return acc;
}

// sum_i v^i w_i for a scalar row and an NC column vector.
template <class S>
NCPoly<S> contract(const ContraTensor<S>& v, const NCVector<S>& w) {
    NCPoly<S> acc(w.space.dim());
    for (std::size_t i = 0; i < w.entries.size(); ++i)
        if (!is_zero(v.entries[i]) && !w.entries[i].is_zero()) acc += v.entries[i] * w.entries[i];
    return acc;
}

}  // namespace heckelab
