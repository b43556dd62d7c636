#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/ncpoly.hpp"

namespace heckelab {

// Entries of R L_1 R L_1 - L_1 R L_1 R, read row by row. Zero entries are
// dropped and entries that are scalar multiples of an earlier one are
// skipped, so the result spans the same degree-2 space.
template <class Field>
std::vector<NCPoly<typename Field::Scalar>> re_relations(const HeckeSymmetry<Field>& h) {
    using S = typename Field::Scalar;
    const int n = h.dim();
    const auto l1 = NCMatrix<S>::generator_matrix(n, 2, h.field().one());
    const auto& r = h.R();
    const auto lhs = ((r * l1) * r) * l1;
    const auto rhs = ((l1 * r) * l1) * r;
    const auto diff = lhs - rhs;

    std::vector<NCPoly<S>> out;
    std::vector<NCPoly<S>> normalized;
    for (std::uint32_t i = 0; i < diff.size(); ++i)
        for (std::uint32_t j = 0; j < diff.size(); ++j) {
            const auto& f = diff(i, j);
            if (f.is_zero()) continue;
            NCPoly<S> g = (h.field().one() / f.terms().begin()->second) * f;
            if (std::find(normalized.begin(), normalized.end(), g) != normalized.end()) continue;
            normalized.push_back(std::move(g));
            out.push_back(f);
        }
    return out;
}

template <class S>
struct Membership {
    bool member = true;
    NCPoly<S> residual;  // zero iff member
};

// Reduced row-echelon basis of the degree-d part of the two-sided ideal
// generated by homogeneous quadratic relations. Columns are monomial codes
// of degree d; each row's pivot is its smallest column and has coefficient 1.
template <class S>
class IdealBasisAtDegree {
public:
    using Row = std::vector<std::pair<std::uint64_t, S>>;

    IdealBasisAtDegree(int n, std::uint32_t degree, S one) : alphabet_(n), degree_(degree), one_(std::move(one)) {
        width_ = alphabet_.words(degree);
    }

    int n() const noexcept { return alphabet_.n(); }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint64_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    // Reduces the row against the basis and, if a nonzero remainder is left,
    // adds it. Returns true when the basis grew.
    bool insert(const Row& row) {
        Row rem = reduce_row(row);
        if (rem.empty()) return false;
        const S inv = one_ / rem.front().second;
        for (auto& e : rem) e.second = e.second * inv;
        const std::uint64_t pivot = rem.front().first;
        for (auto& other : rows_) {
            auto it = std::lower_bound(other.begin(), other.end(), pivot,
                                       [](const auto& e, std::uint64_t c) { return e.first < c; });
            if (it == other.end() || it->first != pivot) continue;
            const S f = it->second;
            other = axpy(other, rem, f);
        }
        pivots_.emplace(pivot, rows_.size());
        rows_.push_back(std::move(rem));
        return true;
    }

    // Remainder of f modulo the span, in ascending column order.
    Row reduce_row(const Row& row) const {
        std::vector<S> acc(width_);
        std::vector<bool> queued(width_, false);
        std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap;
        auto touch = [&](std::uint64_t c) {
            if (!queued[c]) {
                queued[c] = true;
                heap.push(c);
            }
        };
        for (const auto& [c, v] : row) {
            if (c >= width_) throw ShapeError("monomial code outside degree component");
            acc[c] += v;
            touch(c);
        }
        Row rem;
        while (!heap.empty()) {
            const std::uint64_t c = heap.top();
            heap.pop();
            if (is_zero(acc[c])) continue;
            auto it = pivots_.find(c);
            if (it == pivots_.end()) {
                rem.emplace_back(c, acc[c]);
                continue;
            }
            const S f = acc[c];
            for (const auto& [col, v] : rows_[it->second]) {
                acc[col] -= f * v;
                touch(col);
            }
        }
        return rem;
    }

    Membership<S> is_member(const NCPoly<S>& f) const {
        const long d = f.homogeneous_degree();
        if (d == -1) return {true, NCPoly<S>(n())};
        if (d != static_cast<long>(degree_))
            throw DegreeMismatch("polynomial of degree " + std::to_string(d) + " tested against degree-" +
                                 std::to_string(degree_) + " ideal component");
        Row row;
        row.reserve(f.size());
        for (const auto& [m, c] : f.terms()) row.emplace_back(m.code, c);
        const Row rem = reduce_row(row);
        Membership<S> out{rem.empty(), NCPoly<S>(n())};
        for (const auto& [c, v] : rem) out.residual.add_term(Monomial{degree_, c}, v);
        return out;
    }

private:
    // a - f b, both sorted.
    static Row axpy(const Row& a, const Row& b, const S& f) {
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, -(f * b[j].second));
                ++j;
            } else {
                S v = a[i].second - f * b[j].second;
                if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    Alphabet alphabet_;
    std::uint32_t degree_;
    S one_;
    std::uint64_t width_ = 0;
    std::vector<Row> rows_;
    std::map<std::uint64_t, std::size_t> pivots_;
};

// Default cap on the number of degree-d monomials (N^{2d}).
inline constexpr std::uint64_t default_ideal_width_cap = 20000;

// Degree-d component spanned by m_L r m_R over all relations r and
// monomials with deg m_L + deg m_R = d - 2.
template <class S>
IdealBasisAtDegree<S> ideal_component(const std::vector<NCPoly<S>>& relations, int n, std::uint32_t d, const S& one,
                                      std::uint64_t width_cap = default_ideal_width_cap) {
    if (d < 2) throw ArgumentError("ideal components exist only in degree >= 2");
    for (const auto& r : relations)
        if (r.homogeneous_degree() != 2) throw ArgumentError("relations must be homogeneous quadratic");
    IdealBasisAtDegree<S> basis(n, d, one);
    if (basis.width() > width_cap)
        throw ResourceError("degree-" + std::to_string(d) + " component has " + std::to_string(basis.width()) +
                            " monomials, above the cap of " + std::to_string(width_cap));
    const Alphabet& al = basis.alphabet();
    typename IdealBasisAtDegree<S>::Row row;
    for (std::uint32_t left = 0; left + 2 <= d; ++left) {
        const std::uint32_t right = d - 2 - left;
        const std::uint64_t nl = al.words(left), nr = al.words(right);
        for (std::uint64_t ml = 0; ml < nl; ++ml)
            for (const auto& r : relations)
                for (std::uint64_t mr = 0; mr < nr; ++mr) {
                    row.clear();
                    for (const auto& [m, c] : r.terms()) row.emplace_back((ml * al.words(2) + m.code) * nr + mr, c);
                    basis.insert(row);
                }
    }
    return basis;
}

// Lazily built components of one graded ideal, safe to share between
// threads. Degrees below 2 contain only zero.
template <class S>
class GradedIdeal {
public:
    GradedIdeal(std::vector<NCPoly<S>> relations, int n, S one, std::uint64_t width_cap = default_ideal_width_cap)
        : relations_(std::move(relations)), n_(n), one_(std::move(one)), cap_(width_cap) {}

    const std::vector<NCPoly<S>>& relations() const noexcept { return relations_; }
    int n() const noexcept { return n_; }

    const IdealBasisAtDegree<S>& component(std::uint32_t d) const {
        std::lock_guard<std::mutex> lock(*mu_);
        auto it = cache_.find(d);
        if (it == cache_.end())
            it = cache_.emplace(d, std::make_shared<IdealBasisAtDegree<S>>(ideal_component(relations_, n_, d, one_, cap_))).first;
        return *it->second;
    }

    Membership<S> is_member(const NCPoly<S>& f) const {
        const long d = f.homogeneous_degree();
        if (d == -1) return {true, NCPoly<S>(n_)};
        if (d == -2) throw DegreeMismatch("membership requires a homogeneous polynomial");
        if (d < 2) return {false, f};
        return component(static_cast<std::uint32_t>(d)).is_member(f);
    }

private:
    std::vector<NCPoly<S>> relations_;
    int n_;
    S one_;
    std::uint64_t cap_;
    std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
    mutable std::map<std::uint32_t, std::shared_ptr<IdealBasisAtDegree<S>>> cache_;
};

}  // namespace heckelab
