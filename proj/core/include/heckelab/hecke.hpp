#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/field.hpp"
#include "heckelab/tensor.hpp"

namespace heckelab {

// Outcome of checking one defining equation of a Hecke symmetry.
struct AxiomResult {
    std::string name;
    bool passed = true;
    std::string location;  // first offending entry, "(i1,i2,..;j1,j2,..)"
    std::string residual;
};

// R-matrix together with everything derived from it. Built by validate(),
// then enriched by check_closed() and detect_rank(); each step returns a new
// value and never mutates its input.
template <class Field>
class HeckeSymmetry {
public:
    using Scalar = typename Field::Scalar;
    using Operator = TensorOperator<Scalar>;

    const Field& field() const noexcept { return field_; }
    const Operator& R() const noexcept { return r_; }
    int dim() const noexcept { return r_.dim(); }
    Scalar q() const { return field_.q(); }
    const Scalar& lambda() const noexcept { return lambda_; }

    bool is_closed() const noexcept { return closed_inverse_.has_value(); }
    // ((P R)^{t1})^{-1}.
    const Operator& closed_inverse() const {
        if (!closed_inverse_) throw NotClosed("closedness has not been established");
        return *closed_inverse_;
    }

    std::optional<int> rank() const noexcept { return rank_; }
    int require_rank() const {
        if (!rank_) throw RankError("rank has not been detected");
        return *rank_;
    }
    // P_-^1 ... P_-^{p+1}, available after detect_rank.
    const std::vector<Operator>& antisymmetrizers() const noexcept { return chain_; }

    // R_i = R acting on slots (i, i+1) of V^{(x) k}.
    Operator R_at(int i, int k) const { return embed(r_, i, k); }

    template <class F>
    friend HeckeSymmetry<F> validate(const F& field, const TensorOperator<typename F::Scalar>& r);
    template <class F>
    friend HeckeSymmetry<F> check_closed(const HeckeSymmetry<F>& h);
    template <class F>
    friend HeckeSymmetry<F> detect_rank(const HeckeSymmetry<F>& h, int bound, std::uint32_t max_size);

private:
    HeckeSymmetry(Field f, Operator r, Scalar lambda) : field_(std::move(f)), r_(std::move(r)), lambda_(std::move(lambda)) {}

    Field field_;
    Operator r_;
    Scalar lambda_;
    std::optional<Operator> closed_inverse_;
    std::optional<int> rank_;
    std::vector<Operator> chain_;
};

namespace detail {

template <class Field>
std::string entry_label(const TensorOperator<typename Field::Scalar>& op, std::uint32_t row, std::uint32_t col) {
    std::string r = op.space().label(row), c = op.space().label(col);
    return r.substr(0, r.size() - 1) + ";" + c.substr(1);
}

// First nonzero entry of a residual, scanning rows then columns.
template <class Field>
AxiomResult residual_report(const Field& field, std::string name, const TensorOperator<typename Field::Scalar>& residual) {
    AxiomResult res{std::move(name), true, {}, {}};
    for (std::uint32_t i = 0; i < residual.size(); ++i) {
        if (residual.row(i).empty()) continue;
        const auto& [c, v] = residual.row(i).front();
        res.passed = false;
        res.location = entry_label<Field>(residual, i, c);
        res.residual = field.format(v);
        break;
    }
    return res;
}

}  // namespace detail

template <class Field>
typename Field::Scalar hecke_lambda(const Field& field) {
    return field.q() - field.one() / field.q();
}

// R12 R23 R12 = R23 R12 R23.
template <class Field>
AxiomResult check_yang_baxter(const Field& field, const TensorOperator<typename Field::Scalar>& r) {
    if (r.arity() != 2) throw ShapeError("R-matrix must have arity 2");
    const auto r1 = embed(r, 1, 3), r2 = embed(r, 2, 3);
    return detail::residual_report(field, "yang-baxter", r1 * r2 * r1 - r2 * r1 * r2);
}

// R^2 = I + lambda R with lambda = q - 1/q.
template <class Field>
AxiomResult check_hecke(const Field& field, const TensorOperator<typename Field::Scalar>& r) {
    if (r.arity() != 2) throw ShapeError("R-matrix must have arity 2");
    using Op = TensorOperator<typename Field::Scalar>;
    const auto lambda = hecke_lambda(field);
    const Op id = Op::identity(r.dim(), 2, field.one());
    return detail::residual_report(field, "hecke", r * r - id - lambda * r);
}

template <class Field>
HeckeSymmetry<Field> validate(const Field& field, const TensorOperator<typename Field::Scalar>& r) {
    auto ybe = check_yang_baxter(field, r);
    if (!ybe.passed) throw YBEViolation(ybe.location, ybe.residual);
    auto hecke = check_hecke(field, r);
    if (!hecke.passed) throw HeckeViolation(hecke.location, hecke.residual);
    return HeckeSymmetry<Field>(field, r, hecke_lambda(field));
}

// The twisted matrix P R whose first-slot transpose must be invertible.
template <class Field>
TensorOperator<typename Field::Scalar> twisted_r(const HeckeSymmetry<Field>& h) {
    using Op = TensorOperator<typename Field::Scalar>;
    return Op::permutation(h.dim(), h.field().one()) * h.R();
}

template <class Field>
HeckeSymmetry<Field> check_closed(const HeckeSymmetry<Field>& h) {
    HeckeSymmetry<Field> out = h;
    try {
        out.closed_inverse_ = invert(h.field(), partial_transpose_slot1(twisted_r(h)));
    } catch (const NotInvertible& e) {
        throw NotClosed(std::string("(P R)^t1 is not invertible: ") + e.what());
    }
    return out;
}

// Which of the equivalent constructions of P_-^k to use.
enum class AntisymmetrizerRoute {
    left_iterative,     // (1/k_q)(q^{k-1} - q^{k-2} R_{k-1} + ... ) P^{k-1}
    right_iterative,    // (1/k_q) P^{k-1} (q^{k-1} - q^{k-2} R_{k-1} + ... + (-1)^{k-1} R_{k-1}..R_1)
    shifted_iterative,  // (1/k_q)(q^{k-1} - q^{k-2} R_1 + ... + (-1)^{k-1} R_{k-1}..R_1) P_2^{k-1}
    bracket_first,      // P^{k} from P^{k-1} R_{k-1} P^{k-1}
    bracket_shifted,    // P^{k} from P_2^{k-1} R_1 P_2^{k-1}
};

namespace detail {

template <class Field>
TensorOperator<typename Field::Scalar> antisymmetrizer_step(const HeckeSymmetry<Field>& h,
                                                           const TensorOperator<typename Field::Scalar>& prev, int k,
                                                           AntisymmetrizerRoute route) {
    using S = typename Field::Scalar;
    using Op = TensorOperator<S>;
    const Field& f = h.field();
    const S kq = q_number_in(f, k);
    if (is_zero(kq)) throw FieldError("q-number " + std::to_string(k) + "_q vanishes in this field");
    const S inv_kq = f.one() / kq;
    auto coeff = [&](int m) {
        S c = q_pow_in(f, k - 1 - m);
        return (m % 2) ? -c : c;
    };
    switch (route) {
        case AntisymmetrizerRoute::left_iterative: {
            // Y_0 = P^{k-1} (x) I, Y_m = R_{k-m} Y_{m-1}
            Op y = embed(prev, 1, k);
            Op acc = coeff(0) * y;
            for (int m = 1; m <= k - 1; ++m) {
                y = h.R_at(k - m, k) * y;
                acc += coeff(m) * y;
            }
            return inv_kq * acc;
        }
        case AntisymmetrizerRoute::right_iterative: {
            Op y = embed(prev, 1, k);
            Op acc = coeff(0) * y;
            for (int m = 1; m <= k - 1; ++m) {
                y = y * h.R_at(k - m, k);
                acc += coeff(m) * y;
            }
            return inv_kq * acc;
        }
        case AntisymmetrizerRoute::shifted_iterative: {
            // W_m = R_m R_{m-1} ... R_1 P_2^{k-1}
            Op y = embed(prev, 2, k);
            Op acc = coeff(0) * y;
            Op prefix = Op::identity(h.dim(), k, f.one());
            for (int m = 1; m <= k - 1; ++m) {
                prefix = h.R_at(m, k) * prefix;
                acc += coeff(m) * (prefix * y);
            }
            return inv_kq * acc;
        }
        case AntisymmetrizerRoute::bracket_first:
        case AntisymmetrizerRoute::bracket_shifted: {
            // P^{k} = -((k-1)_q / k_q) (P R P - q^{k-1}/(k-1)_q P), P embedded on V^{(x) k}
            const bool shifted = route == AntisymmetrizerRoute::bracket_shifted;
            const Op p = embed(prev, shifted ? 2 : 1, k);
            const Op r = h.R_at(shifted ? 1 : k - 1, k);
            const S km1 = q_number_in(f, k - 1);
            const Op bracket = p * r * p - (q_pow_in(f, k - 1) / km1) * p;
            return (-(km1 / kq)) * bracket;
        }
    }
    throw ArgumentError("unknown antisymmetrizer route");
}

}  // namespace detail

// P_-^k on V^{(x) k}, built from P_-^1 = I with the chosen route.
template <class Field>
TensorOperator<typename Field::Scalar> antisymmetrizer(const HeckeSymmetry<Field>& h, int k,
                                                      AntisymmetrizerRoute route = AntisymmetrizerRoute::left_iterative) {
    using Op = TensorOperator<typename Field::Scalar>;
    if (k < 1) throw ArgumentError("antisymmetrizer requires k >= 1");
    if (route == AntisymmetrizerRoute::left_iterative && static_cast<int>(h.antisymmetrizers().size()) >= k)
        return h.antisymmetrizers()[static_cast<std::size_t>(k - 1)];
    Op p = Op::identity(h.dim(), 1, h.field().one());
    for (int j = 2; j <= k; ++j) p = detail::antisymmetrizer_step(h, p, j, route);
    return p;
}

// Smallest p with P_-^{p+1} = 0, searching k = 1..bound. Requires closedness.
// max_size caps N^k to keep the chain desk-sized.
template <class Field>
HeckeSymmetry<Field> detect_rank(const HeckeSymmetry<Field>& h, int bound = 8, std::uint32_t max_size = 4096) {
    using Op = TensorOperator<typename Field::Scalar>;
    if (!h.is_closed()) throw NotClosed("rank detection requires a closed Hecke symmetry");
    HeckeSymmetry<Field> out = h;
    std::vector<Op> chain;
    Op p = Op::identity(h.dim(), 1, h.field().one());
    for (int k = 1; k <= bound; ++k) {
        if (k > 1) {
            if (checked_power(h.dim(), k) > max_size)
                throw ResourceError("antisymmetrizer on V^" + std::to_string(k) + " exceeds size cap " + std::to_string(max_size));
            p = detail::antisymmetrizer_step(h, p, k, AntisymmetrizerRoute::left_iterative);
        }
        chain.push_back(p);
        const long r = idempotent_rank(h.field(), p);
        if (r == 0) {
            const int rank = k - 1;
            if (rank < 1) throw RankError("P_-^1 vanishes");
            const long top = idempotent_rank(h.field(), chain[static_cast<std::size_t>(rank - 1)]);
            if (top != 1)
                throw RankImageNotOneDimensional("P_-^" + std::to_string(rank) + " has rank " + std::to_string(top));
            out.rank_ = rank;
            out.chain_ = std::move(chain);
            return out;
        }
    }
    throw NotEven("no vanishing antisymmetrizer for k <= " + std::to_string(bound));
}

template <class S>
struct LeviCivita {
    CoTensor<S> u;
    ContraTensor<S> v;
};

// u, v with P_-^p = u v, v.u = 1; checks R_i u = -u/q and v R_i = -v/q.
template <class Field>
LeviCivita<typename Field::Scalar> levi_civita(const HeckeSymmetry<Field>& h) {
    using S = typename Field::Scalar;
    const int p = h.require_rank();
    auto [u, v] = rank1_factor(h.field(), h.antisymmetrizers()[static_cast<std::size_t>(p - 1)]);
    const S minus_inv_q = -(h.field().one() / h.q());
    for (int i = 1; i <= p - 1; ++i) {
        const auto ri = h.R_at(i, p);
        auto ru = apply(ri, u);
        auto vr = apply(v, ri);
        for (std::size_t k = 0; k < u.entries.size(); ++k) {
            if (ru.entries[k] != minus_inv_q * u.entries[k] || vr.entries[k] != minus_inv_q * v.entries[k])
                throw RankError("Levi-Civita tensor fails R_" + std::to_string(i) + " eigen-relation");
        }
    }
    if (pair(v, u) != h.field().one()) throw RankError("Levi-Civita pairing is not 1");
    return {u, v};
}

// C_i^j = sum_k X_{ji}^{kk} with X = ((P R)^{t1})^{-1}.
template <class Field>
TensorOperator<typename Field::Scalar> matrix_C(const HeckeSymmetry<Field>& h) {
    using Op = TensorOperator<typename Field::Scalar>;
    const Op& x = h.closed_inverse();
    const int n = h.dim();
    Op c(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            typename Field::Scalar acc{};
            for (int k = 0; k < n; ++k) acc += x.at({j, i}, {k, k});
            c.set(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), acc);
        }
    return c;
}

// B_i^j = sum_k X_{kk}^{ij}.
template <class Field>
TensorOperator<typename Field::Scalar> matrix_B(const HeckeSymmetry<Field>& h) {
    using Op = TensorOperator<typename Field::Scalar>;
    const Op& x = h.closed_inverse();
    const int n = h.dim();
    Op b(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            typename Field::Scalar acc{};
            for (int k = 0; k < n; ++k) acc += x.at({k, k}, {i, j});
            b.set(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), acc);
        }
    return b;
}

// Second route: C = Tr_(1)[(X^{t1}) P], B = Tr_(2)[(X^{t1}) P].
template <class Field>
std::pair<TensorOperator<typename Field::Scalar>, TensorOperator<typename Field::Scalar>> matrices_CB_by_partial_trace(
    const HeckeSymmetry<Field>& h) {
    using Op = TensorOperator<typename Field::Scalar>;
    const Op y = partial_transpose_slot1(h.closed_inverse()) * Op::permutation(h.dim(), h.field().one());
    return {trace_slots(y, {1}), trace_slots(y, {2})};
}

template <class S>
struct TraceData {
    TensorOperator<S> C;
    TensorOperator<S> B;
    CoTensor<S> u;
    ContraTensor<S> v;
};

// Asserts BC = CB = scalar * I.
template <class Field>
TraceData<typename Field::Scalar> trace_data(const HeckeSymmetry<Field>& h) {
    using Op = TensorOperator<typename Field::Scalar>;
    auto lc = levi_civita(h);
    Op c = matrix_C(h), b = matrix_B(h);
    const Op bc = b * c, cb = c * b;
    if (bc != cb) throw Error("BC != CB");
    const auto s = bc.at(0, 0);
    if (bc != s * Op::identity(h.dim(), 1, h.field().one())) throw Error("BC is not scalar");
    return {std::move(c), std::move(b), std::move(lc.u), std::move(lc.v)};
}

// Tr(C M).
template <class S>
S quantum_trace(const TensorOperator<S>& c, const TensorOperator<S>& m) {
    if (m.arity() != 1 || m.dim() != c.dim()) throw ShapeError("quantum_trace expects an N x N matrix");
    return trace_full(c * m);
}

// Tr over the named slots of (C_{s1} C_{s2} ... A).
template <class S>
TensorOperator<S> quantum_trace_slots(const TensorOperator<S>& c, const TensorOperator<S>& a, const std::vector<int>& slots) {
    TensorOperator<S> weighted = a;
    for (int s : slots) {
        if (s < 1 || s > a.arity()) throw ShapeError("quantum_trace_slots: slot out of range");
        weighted = embed(c, s, a.arity()) * weighted;
    }
    return trace_slots(weighted, slots);
}

// S_+^k(X) = X_1 + R_1 X_1 R_1 + ... + R_{k-1}..R_1 X_1 R_1..R_{k-1}.
template <class Field>
TensorOperator<typename Field::Scalar> symmetrize(const HeckeSymmetry<Field>& h, const TensorOperator<typename Field::Scalar>& x,
                                                 int k) {
    if (x.arity() != 1 || x.dim() != h.dim()) throw ShapeError("symmetrize expects an N x N matrix");
    if (k < 1) throw ArgumentError("symmetrize requires k >= 1");
    auto term = embed(x, 1, k);
    auto acc = term;
    for (int m = 1; m <= k - 1; ++m) {
        const auto rm = h.R_at(m, k);
        term = rm * term * rm;
        acc += term;
    }
    return acc;
}

// Standard Drinfeld-Jimbo braid R-matrix:
//   R_{ii}^{ii} = q,  R_{ij}^{ji} = 1 (i != j),  R_{ij}^{ij} = q - 1/q (i < j).
template <class Field>
TensorOperator<typename Field::Scalar> builtin_standard(const Field& field, int n) {
    if (n < 2 || n > 4) throw ArgumentError("builtin standard R-matrix supports 2 <= N <= 4");
    TensorOperator<typename Field::Scalar> r(n, 2);
    const auto lambda = hecke_lambda(field);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                r.set({i, i}, {i, i}, field.q());
            } else {
                r.set({i, j}, {j, i}, field.one());
                if (i < j) r.set({i, j}, {i, j}, lambda);
            }
        }
    return r;
}

template <class Field>
TensorOperator<typename Field::Scalar> builtin_permutation(const Field& field, int n) {
    if (n < 2 || n > 4) throw ArgumentError("builtin permutation supports 2 <= N <= 4");
    return TensorOperator<typename Field::Scalar>::permutation(n, field.one());
}

}  // namespace heckelab
