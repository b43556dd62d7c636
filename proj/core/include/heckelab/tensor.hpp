#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/field.hpp"

namespace heckelab {

// Multi-indices (i1, ..., in) with entries in [0, N) are flattened
// little-endian: i1 + N*i2 + N^2*i3 + ...
class IndexSpace {
public:
    IndexSpace(int dim, int arity);
    int dim() const noexcept { return dim_; }
    int arity() const noexcept { return arity_; }
    std::uint32_t size() const noexcept { return size_; }
    std::uint32_t flatten(const std::vector<int>& idx) const;
    std::vector<int> unflatten(std::uint32_t flat) const;
    // Digit of `flat` at 0-based slot.
    int digit(std::uint32_t flat, int slot) const { return static_cast<int>((flat / pow_[slot]) % dim_); }
    std::uint32_t stride(int slot) const { return pow_[slot]; }
    // "(1,2)"-style 1-based rendering.
    std::string label(std::uint32_t flat) const;

private:
    int dim_;
    int arity_;
    std::uint32_t size_;
    std::vector<std::uint32_t> pow_;
};

std::uint32_t checked_power(int dim, int arity);

// Exact linear operator on V^{(x) n}, dim V = N. Entry (row, col) is
// A_{row}^{col}: the lower (row) multi-index is the input, the upper (col)
// multi-index the output, and (AB)_i^j = sum_k A_i^k B_k^j. Rows are stored
// sparsely, sorted by column, with no stored zeros.
template <class S>
class TensorOperator {
public:
    using Scalar = S;
    using Entry = std::pair<std::uint32_t, S>;
    using Row = std::vector<Entry>;

    TensorOperator() : TensorOperator(1, 0) {}
    TensorOperator(int dim, int arity) : space_(dim, arity), rows_(space_.size()) {}

    static TensorOperator identity(int dim, int arity, const S& one) {
        TensorOperator r(dim, arity);
        for (std::uint32_t i = 0; i < r.size(); ++i) r.rows_[i].emplace_back(i, one);
        return r;
    }

    // P_12 on V (x) V: e_a (x) e_b -> e_b (x) e_a.
    static TensorOperator permutation(int dim, const S& one) {
        TensorOperator r(dim, 2);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) r.set(r.space_.flatten({a, b}), r.space_.flatten({b, a}), one);
        return r;
    }

    int dim() const noexcept { return space_.dim(); }
    int arity() const noexcept { return space_.arity(); }
    std::uint32_t size() const noexcept { return space_.size(); }
    const IndexSpace& space() const noexcept { return space_; }
    const Row& row(std::uint32_t i) const { return rows_.at(i); }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }
    bool is_null() const {
        return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
    }

    S at(std::uint32_t row, std::uint32_t col) const {
        const Row& r = rows_.at(row);
        auto it = std::lower_bound(r.begin(), r.end(), col, [](const Entry& e, std::uint32_t c) { return e.first < c; });
        if (it != r.end() && it->first == col) return it->second;
        return S{};
    }
    S at(const std::vector<int>& row, const std::vector<int>& col) const {
        return at(space_.flatten(row), space_.flatten(col));
    }

    void set(std::uint32_t row, std::uint32_t col, const S& v) {
        Row& r = rows_.at(row);
        if (col >= size()) throw ShapeError("column index out of range");
        auto it = std::lower_bound(r.begin(), r.end(), col, [](const Entry& e, std::uint32_t c) { return e.first < c; });
        const bool present = it != r.end() && it->first == col;
        if (is_zero(v)) {
            if (present) r.erase(it);
        } else if (present) {
            it->second = v;
        } else {
            r.insert(it, Entry(col, v));
        }
    }
    void set(const std::vector<int>& row, const std::vector<int>& col, const S& v) {
        set(space_.flatten(row), space_.flatten(col), v);
    }
    void set_row(std::uint32_t i, Row r) { rows_.at(i) = std::move(r); }

    template <class F>
    auto map_entries(F&& fn) const {
        using T = decltype(fn(std::declval<const S&>()));
        TensorOperator<T> out(dim(), arity());
        for (std::uint32_t i = 0; i < size(); ++i) {
            typename TensorOperator<T>::Row r;
            for (const auto& [c, v] : rows_[i]) {
                T t = fn(v);
                if (!is_zero(t)) r.emplace_back(c, std::move(t));
            }
            out.set_row(i, std::move(r));
        }
        return out;
    }

    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.dim() == b.dim() && a.arity() == b.arity() && a.rows_ == b.rows_;
    }
    friend bool operator!=(const TensorOperator& a, const TensorOperator& b) { return !(a == b); }

    TensorOperator& operator+=(const TensorOperator& o) {
        check_same_shape(o);
        for (std::uint32_t i = 0; i < size(); ++i) rows_[i] = merge(rows_[i], o.rows_[i], false);
        return *this;
    }
    TensorOperator& operator-=(const TensorOperator& o) {
        check_same_shape(o);
        for (std::uint32_t i = 0; i < size(); ++i) rows_[i] = merge(rows_[i], o.rows_[i], true);
        return *this;
    }
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
    friend TensorOperator operator*(const S& s, const TensorOperator& a) {
        TensorOperator r(a.dim(), a.arity());
        if (is_zero(s)) return r;
        for (std::uint32_t i = 0; i < a.size(); ++i) {
            r.rows_[i].reserve(a.rows_[i].size());
            for (const auto& [c, v] : a.rows_[i]) r.rows_[i].emplace_back(c, s * v);
        }
        return r;
    }
    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) { return compose(a, b); }

    void check_same_shape(const TensorOperator& o) const {
        if (dim() != o.dim() || arity() != o.arity())
            throw ShapeError("operator shape mismatch: (" + std::to_string(dim()) + "," + std::to_string(arity()) +
                             ") vs (" + std::to_string(o.dim()) + "," + std::to_string(o.arity()) + ")");
    }

private:
    static Row merge(const Row& a, const Row& b, bool subtract) {
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
                ++j;
            } else {
                S v = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
                if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    IndexSpace space_;
    std::vector<Row> rows_;
};

// Sparse accumulator for building one row at a time.
template <class S>
class RowAccumulator {
public:
    explicit RowAccumulator(std::uint32_t width) : pos_(width, -1) {}
    void add(std::uint32_t col, const S& v) {
        int& p = pos_[col];
        if (p < 0) {
            p = static_cast<int>(vals_.size());
            vals_.emplace_back(col, v);
        } else {
            vals_[static_cast<std::size_t>(p)].second += v;
        }
    }
    // Returns the sorted nonzero entries and resets the accumulator.
    typename TensorOperator<S>::Row take() {
        typename TensorOperator<S>::Row out;
        out.reserve(vals_.size());
        for (auto& e : vals_) {
            pos_[e.first] = -1;
            if (!is_zero(e.second)) out.push_back(std::move(e));
        }
        vals_.clear();
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

private:
    std::vector<int> pos_;
    std::vector<std::pair<std::uint32_t, S>> vals_;
};

template <class S>
TensorOperator<S> compose(const TensorOperator<S>& a, const TensorOperator<S>& b) {
    a.check_same_shape(b);
    TensorOperator<S> r(a.dim(), a.arity());
    RowAccumulator<S> acc(a.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        const auto& ra = a.row(i);
        if (ra.empty()) continue;
        for (const auto& [k, av] : ra)
            for (const auto& [j, bv] : b.row(k)) acc.add(j, av * bv);
        r.set_row(i, acc.take());
    }
    return r;
}

// A acting on slots [slot, slot + arity(A) - 1] (1-based) of V^{(x) n},
// identity elsewhere.
template <class S>
TensorOperator<S> embed(const TensorOperator<S>& a, int slot, int total_arity) {
    const int m = a.arity();
    if (slot < 1 || slot + m - 1 > total_arity)
        throw ShapeError("embed: slot " + std::to_string(slot) + " with arity " + std::to_string(m) +
                         " does not fit in arity " + std::to_string(total_arity));
    TensorOperator<S> r(a.dim(), total_arity);
    const std::uint32_t lo_size = checked_power(a.dim(), slot - 1);
    const std::uint32_t mid_size = a.size();
    for (std::uint32_t row = 0; row < r.size(); ++row) {
        const std::uint32_t lo = row % lo_size;
        const std::uint32_t mid = (row / lo_size) % mid_size;
        const std::uint32_t hi = row / lo_size / mid_size;
        typename TensorOperator<S>::Row out;
        out.reserve(a.row(mid).size());
        for (const auto& [c, v] : a.row(mid)) out.emplace_back(lo + lo_size * (c + mid_size * hi), v);
        r.set_row(row, std::move(out));
    }
    return r;
}

// Transpose in the first tensor factor: result(i1 i2..; j1 j2..) = A(j1 i2..; i1 j2..).
template <class S>
TensorOperator<S> partial_transpose_slot1(const TensorOperator<S>& a) {
    if (a.arity() != 2) throw ShapeError("partial_transpose_slot1 expects arity 2");
    const auto& sp = a.space();
    std::vector<std::map<std::uint32_t, S>> rows(a.size());
    for (std::uint32_t row = 0; row < a.size(); ++row) {
        for (const auto& [col, v] : a.row(row)) {
            const int i1 = sp.digit(row, 0), j1 = sp.digit(col, 0);
            const std::uint32_t nrow = row - static_cast<std::uint32_t>(i1) + static_cast<std::uint32_t>(j1);
            const std::uint32_t ncol = col - static_cast<std::uint32_t>(j1) + static_cast<std::uint32_t>(i1);
            rows[nrow].emplace(ncol, v);
        }
    }
    TensorOperator<S> r(a.dim(), a.arity());
    for (std::uint32_t i = 0; i < a.size(); ++i) r.set_row(i, {rows[i].begin(), rows[i].end()});
    return r;
}

template <class S>
S trace_full(const TensorOperator<S>& a) {
    S t{};
    for (std::uint32_t i = 0; i < a.size(); ++i) t += a.at(i, i);
    return t;
}

// Ordinary partial trace over the named 1-based slots.
template <class S>
TensorOperator<S> trace_slots(const TensorOperator<S>& a, std::vector<int> slots) {
    std::sort(slots.begin(), slots.end());
    if (std::adjacent_find(slots.begin(), slots.end()) != slots.end()) throw ShapeError("trace_slots: repeated slot");
    for (int s : slots)
        if (s < 1 || s > a.arity()) throw ShapeError("trace_slots: slot " + std::to_string(s) + " out of range");
    const auto& sp = a.space();
    std::vector<bool> traced(static_cast<std::size_t>(a.arity()), false);
    for (int s : slots) traced[static_cast<std::size_t>(s - 1)] = true;
    const int out_arity = a.arity() - static_cast<int>(slots.size());
    IndexSpace out_sp(a.dim(), out_arity);
    auto project = [&](std::uint32_t flat) {
        std::uint32_t r = 0, stride = 1;
        for (int s = 0; s < a.arity(); ++s) {
            if (traced[static_cast<std::size_t>(s)]) continue;
            r += static_cast<std::uint32_t>(sp.digit(flat, s)) * stride;
            stride *= static_cast<std::uint32_t>(a.dim());
        }
        return r;
    };
    std::vector<std::map<std::uint32_t, S>> acc(out_sp.size());
    for (std::uint32_t row = 0; row < a.size(); ++row) {
        for (const auto& [col, v] : a.row(row)) {
            bool diagonal = true;
            for (int s : slots)
                if (sp.digit(row, s - 1) != sp.digit(col, s - 1)) {
                    diagonal = false;
                    break;
                }
            if (!diagonal) continue;
            auto [it, inserted] = acc[project(row)].try_emplace(project(col), v);
            if (!inserted) it->second += v;
        }
    }
    TensorOperator<S> r(a.dim(), out_arity);
    for (std::uint32_t i = 0; i < out_sp.size(); ++i) {
        typename TensorOperator<S>::Row row;
        for (auto& [c, v] : acc[i])
            if (!is_zero(v)) row.emplace_back(c, std::move(v));
        r.set_row(i, std::move(row));
    }
    return r;
}

// Exact inverse by Gauss-Jordan elimination. Throws NotInvertible.
template <class Field>
TensorOperator<typename Field::Scalar> invert(const Field& field, const TensorOperator<typename Field::Scalar>& a) {
    using S = typename Field::Scalar;
    const std::uint32_t n = a.size();
    std::vector<std::vector<S>> m(n, std::vector<S>(2 * std::size_t{n}));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (const auto& [c, v] : a.row(i)) m[i][c] = v;
        m[i][n + i] = field.one();
    }
    for (std::uint32_t col = 0; col < n; ++col) {
        std::optional<std::uint32_t> pivot;
        std::size_t best = 0;
        for (std::uint32_t r = col; r < n; ++r) {
            if (is_zero(m[r][col])) continue;
            const std::size_t cost = pivot_cost(m[r][col]);
            if (!pivot || cost < best) {
                pivot = r;
                best = cost;
            }
            if (cost == 0) break;
        }
        if (!pivot) throw NotInvertible("operator is singular (no pivot in column " + std::to_string(col) + ")");
        std::swap(m[col], m[*pivot]);
        const S inv = field.one() / m[col][col];
        for (auto& x : m[col])
            if (!is_zero(x)) x = x * inv;
        for (std::uint32_t r = 0; r < n; ++r) {
            if (r == col || is_zero(m[r][col])) continue;
            const S f = m[r][col];
            for (std::size_t c = col; c < 2 * std::size_t{n}; ++c)
                if (!is_zero(m[col][c])) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    TensorOperator<S> r(a.dim(), a.arity());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t c = 0; c < n; ++c)
            if (!is_zero(m[i][n + c])) r.set(i, c, m[i][n + c]);
    return r;
}

// Rank of an idempotent, read off as its trace.
template <class Field>
long idempotent_rank(const Field& field, const TensorOperator<typename Field::Scalar>& a) {
    if (compose(a, a) != a) throw NotIdempotent("operator is not idempotent");
    const auto t = trace_full(a);
    auto v = field.to_integer(t);
    if (!v || *v < 0 || static_cast<unsigned long>(*v) > a.size())
        throw NotAnInteger("trace of idempotent is not a valid rank: " + field.format(t));
    return *v;
}

// Column vector u_{i1..ip} (lower multi-index).
template <class S>
struct CoTensor {
    int dim = 0;
    int rank = 0;
    std::vector<S> entries;
};

// Row vector v^{j1..jp} (upper multi-index).
template <class S>
struct ContraTensor {
    int dim = 0;
    int rank = 0;
    std::vector<S> entries;
};

template <class S>
S pair(const ContraTensor<S>& v, const CoTensor<S>& u) {
    if (v.entries.size() != u.entries.size()) throw ShapeError("pairing tensors of different size");
    S acc{};
    for (std::size_t i = 0; i < u.entries.size(); ++i)
        if (!is_zero(v.entries[i]) && !is_zero(u.entries[i])) acc += v.entries[i] * u.entries[i];
    return acc;
}

// A u
template <class S>
CoTensor<S> apply(const TensorOperator<S>& a, const CoTensor<S>& u) {
    if (a.size() != u.entries.size()) throw ShapeError("apply: size mismatch");
    CoTensor<S> r{u.dim, u.rank, std::vector<S>(u.entries.size())};
    for (std::uint32_t i = 0; i < a.size(); ++i)
        for (const auto& [k, x] : a.row(i))
            if (!is_zero(u.entries[k])) r.entries[i] += x * u.entries[k];
    return r;
}

// v A
template <class S>
ContraTensor<S> apply(const ContraTensor<S>& v, const TensorOperator<S>& a) {
    if (a.size() != v.entries.size()) throw ShapeError("apply: size mismatch");
    ContraTensor<S> r{v.dim, v.rank, std::vector<S>(v.entries.size())};
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        if (is_zero(v.entries[i])) continue;
        for (const auto& [j, x] : a.row(i)) r.entries[j] += v.entries[i] * x;
    }
    return r;
}

template <class S>
TensorOperator<S> outer(const CoTensor<S>& u, const ContraTensor<S>& v) {
    TensorOperator<S> r(u.dim, u.rank);
    for (std::uint32_t i = 0; i < r.size(); ++i) {
        if (is_zero(u.entries[i])) continue;
        typename TensorOperator<S>::Row row;
        for (std::uint32_t j = 0; j < r.size(); ++j)
            if (!is_zero(v.entries[j])) row.emplace_back(j, u.entries[i] * v.entries[j]);
        r.set_row(i, std::move(row));
    }
    return r;
}

// Factor a rank-one idempotent as u v with v.u = 1. u is the first nonzero
// column, scaled so its first nonzero entry is 1; v is then the matching row.
template <class Field>
std::pair<CoTensor<typename Field::Scalar>, ContraTensor<typename Field::Scalar>> rank1_factor(
    const Field& field, const TensorOperator<typename Field::Scalar>& a) {
    using S = typename Field::Scalar;
    const long rank = idempotent_rank(field, a);
    if (rank != 1) throw RankError("rank1_factor: operator has rank " + std::to_string(rank));
    std::optional<std::uint32_t> first_col;
    for (std::uint32_t i = 0; i < a.size(); ++i)
        if (!a.row(i).empty() && (!first_col || a.row(i).front().first < *first_col)) first_col = a.row(i).front().first;
    CoTensor<S> u{a.dim(), a.arity(), std::vector<S>(a.size())};
    std::optional<std::uint32_t> lead;
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        u.entries[i] = a.at(i, *first_col);
        if (!lead && !is_zero(u.entries[i])) lead = i;
    }
    const S scale = field.one() / u.entries[*lead];
    for (auto& x : u.entries) x = x * scale;
    ContraTensor<S> v{a.dim(), a.arity(), std::vector<S>(a.size())};
    for (const auto& [c, x] : a.row(*lead)) v.entries[c] = x;
    const S norm = pair(v, u);
    if (norm != field.one()) {
        const S inv = field.one() / norm;
        for (auto& x : v.entries) x = x * inv;
    }
    if (outer(u, v) != a) throw RankError("rank1_factor: reconstruction failed");
    return {u, v};
}

}  // namespace heckelab
