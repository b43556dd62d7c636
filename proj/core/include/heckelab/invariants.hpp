#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/ideal.hpp"
#include "heckelab/ncpoly.hpp"

namespace heckelab {

// Powers L^0 .. L^kmax of the generator matrix, accumulated left to right:
// (L^{k+1})_i^j = sum_m (L^k)_i^m L_m^j.
template <class S>
std::vector<NCMatrix<S>> l_powers(int n, int kmax, const S& one) {
    std::vector<NCMatrix<S>> out;
    NCMatrix<S> id(n, 1);
    for (int i = 0; i < n; ++i) id(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i)) = NCPoly<S>::constant(n, one);
    out.push_back(id);
    const auto l = NCMatrix<S>::generator_matrix(n, 1, one);
    for (int k = 1; k <= kmax; ++k) out.push_back(out.back() * l);
    return out;
}

// Tr(C M) for a matrix of NC polynomials.
template <class S>
NCPoly<S> quantum_trace(const TensorOperator<S>& c, const NCMatrix<S>& m) {
    if (m.arity() != 1 || m.n() != c.dim()) throw ShapeError("quantum_trace expects an N x N matrix");
    NCPoly<S> acc(m.n());
    for (std::uint32_t a = 0; a < c.size(); ++a)
        for (const auto& [b, x] : c.row(a)) acc += x * m(b, a);
    return acc;
}

// s_q(i) = q Tr_q L^i.
template <class Field>
NCPoly<typename Field::Scalar> power_sum(const HeckeSymmetry<Field>& h, const TraceData<typename Field::Scalar>& td,
                                         const NCMatrix<typename Field::Scalar>& l_power) {
    return h.q() * quantum_trace(td.C, l_power);
}

// alpha_i = q^{-i(p-i)} [p choose i]_q.
template <class Field>
typename Field::Scalar alpha(const Field& f, int i, int p) {
    if (p < 1 || i < 1 || i > p) throw ArgumentError("alpha requires 1 <= i <= p");
    return q_pow_in(f, -static_cast<long>(i) * (p - i)) * q_binomial_in(f, p, i);
}

// alpha_1 = p_q / q^{p-1}, alpha_j = q^{2j-1-p} ((p-j+1)_q / j_q) alpha_{j-1}.
template <class Field>
typename Field::Scalar alpha_by_recurrence(const Field& f, int i, int p) {
    if (p < 1 || i < 1 || i > p) throw ArgumentError("alpha requires 1 <= i <= p");
    auto a = q_number_in(f, p) * q_pow_in(f, -(p - 1));
    for (int j = 2; j <= i; ++j) a = q_pow_in(f, 2 * j - 1 - p) * (q_number_in(f, p - j + 1) / q_number_in(f, j)) * a;
    return a;
}

// v (L_1 R_1 ... R_{i-1})^i, an NC row vector over V^{(x) p}.
template <class Field>
NCVector<typename Field::Scalar> minor_row(const HeckeSymmetry<Field>& h, const ContraTensor<typename Field::Scalar>& v,
                                           int i, const TensorOperator<typename Field::Scalar>* r_override = nullptr) {
    using S = typename Field::Scalar;
    const int p = v.rank;
    const auto& r = r_override ? *r_override : h.R();
    std::vector<TensorOperator<S>> rs;
    for (int j = 1; j <= i - 1; ++j) rs.push_back(embed(r, j, p));
    NCVector<S> w = NCVector<S>::from_scalars(v);
    for (int rep = 0; rep < i; ++rep) {
        w = right_apply_generators(w, h.field().one());
        for (const auto& rj : rs) w = right_apply(w, rj);
    }
    return w;
}

template <class S>
struct CentralSet {
    int p = 0;
    std::vector<NCPoly<S>> s;      // s[i] = s_q(i), s[0] unused
    std::vector<NCPoly<S>> sigma;  // sigma[0] = 1
    std::vector<S> alpha;          // alpha[i], alpha[0] unused
};

// Power sums and elementary invariants for i = 1..p. A non-null r_override
// replaces R inside the L-products while C, u, v stay those of h.
template <class Field>
CentralSet<typename Field::Scalar> central_set(const HeckeSymmetry<Field>& h, const TraceData<typename Field::Scalar>& td,
                                               const TensorOperator<typename Field::Scalar>* r_override = nullptr) {
    using S = typename Field::Scalar;
    const auto& f = h.field();
    const int p = h.require_rank();
    const int n = h.dim();
    CentralSet<S> cs;
    cs.p = p;
    const auto powers = l_powers<S>(n, p, f.one());
    cs.s.resize(static_cast<std::size_t>(p) + 1, NCPoly<S>(n));
    cs.sigma.resize(static_cast<std::size_t>(p) + 1, NCPoly<S>(n));
    cs.alpha.resize(static_cast<std::size_t>(p) + 1);
    cs.sigma[0] = NCPoly<S>::constant(n, f.one());
    for (int i = 1; i <= p; ++i) {
        cs.s[static_cast<std::size_t>(i)] = power_sum(h, td, powers[static_cast<std::size_t>(i)]);
        const S a = alpha(f, i, p);
        if (a != alpha_by_recurrence(f, i, p)) throw Error("alpha closed form and recurrence disagree at i=" + std::to_string(i));
        cs.alpha[static_cast<std::size_t>(i)] = a;
        cs.sigma[static_cast<std::size_t>(i)] = a * contract(minor_row(h, td.v, i, r_override), td.u);
        for (const auto* x : {&cs.s[static_cast<std::size_t>(i)], &cs.sigma[static_cast<std::size_t>(i)]})
            if (!x->is_zero() && x->homogeneous_degree() != i) throw Error("invariant of order " + std::to_string(i) + " is not homogeneous");
    }
    return cs;
}

// (i_q/q^{i-1}) sigma(i) - s(1) sigma(i-1) + ... + (-1)^{i-1} s(i-1) sigma(1) + (-1)^i s(i).
template <class Field>
NCPoly<typename Field::Scalar> newton_defect(const Field& f, const CentralSet<typename Field::Scalar>& cs, int i) {
    if (i < 1 || i > cs.p) throw ArgumentError("newton_defect requires 1 <= i <= p");
    auto acc = (q_number_in(f, i) * q_pow_in(f, -(i - 1))) * cs.sigma[static_cast<std::size_t>(i)];
    for (int j = 1; j <= i - 1; ++j) {
        auto term = cs.s[static_cast<std::size_t>(j)] * cs.sigma[static_cast<std::size_t>(i - j)];
        if (j % 2) acc -= term;
        else acc += term;
    }
    if (i % 2) acc -= cs.s[static_cast<std::size_t>(i)];
    else acc += cs.s[static_cast<std::size_t>(i)];
    return acc;
}

// sum_{i=0}^{p} ((-L)^i)_a^b sigma(p-i), sigma multiplied on the right.
template <class Field>
NCMatrix<typename Field::Scalar> cayley_hamilton_defect(const Field& f, const CentralSet<typename Field::Scalar>& cs, int n) {
    using S = typename Field::Scalar;
    const auto powers = l_powers<S>(n, cs.p, f.one());
    NCMatrix<S> out(n, 1);
    for (int i = 0; i <= cs.p; ++i) {
        const auto& sg = cs.sigma[static_cast<std::size_t>(cs.p - i)];
        for (std::uint32_t a = 0; a < out.size(); ++a)
            for (std::uint32_t b = 0; b < out.size(); ++b) {
                const auto& x = powers[static_cast<std::size_t>(i)](a, b);
                if (x.is_zero()) continue;
                auto term = x * sg;
                if (i % 2) out(a, b) -= term;
                else out(a, b) += term;
            }
    }
    return out;
}

// w(x) = prod_{i=0}^{p-1} [(L_1 - q^{2i} x I) R_1 ... R_{p-1}] u as a column
// vector, stored by powers of the central variable x.
template <class S>
struct CharPoly {
    int p = 0;
    std::vector<NCVector<S>> w;      // w[k] = coefficient of x^k
    std::vector<NCPoly<S>> delta;    // delta[k] = coefficient of x^k in v . w(x)
};

template <class Field>
CharPoly<typename Field::Scalar> char_poly(const HeckeSymmetry<Field>& h, const TraceData<typename Field::Scalar>& td,
                                           const TensorOperator<typename Field::Scalar>* r_override = nullptr) {
    using S = typename Field::Scalar;
    const auto& f = h.field();
    const int p = h.require_rank();
    const int n = h.dim();
    const auto& r = r_override ? *r_override : h.R();
    std::vector<TensorOperator<S>> rs;
    for (int j = 1; j <= p - 1; ++j) rs.push_back(embed(r, j, p));

    // Coefficients of x^0..x^p; the rightmost bracket acts first.
    std::vector<NCVector<S>> w(static_cast<std::size_t>(p) + 1, NCVector<S>(n, p));
    w[0] = NCVector<S>::from_scalars(td.u);
    for (int i = p - 1; i >= 0; --i) {
        for (auto& c : w)
            for (auto it = rs.rbegin(); it != rs.rend(); ++it) c = left_apply(*it, c);
        const S shift = q_pow_in(f, 2L * i);
        std::vector<NCVector<S>> next(w.size(), NCVector<S>(n, p));
        for (std::size_t k = 0; k < w.size(); ++k) {
            auto lw = left_apply_generators(w[k], f.one());
            for (std::size_t e = 0; e < lw.entries.size(); ++e) next[k].entries[e] += lw.entries[e];
            if (k + 1 < w.size())
                for (std::size_t e = 0; e < w[k].entries.size(); ++e)
                    if (!w[k].entries[e].is_zero()) next[k + 1].entries[e] -= shift * w[k].entries[e];
        }
        w = std::move(next);
    }
    CharPoly<S> out;
    out.p = p;
    for (const auto& c : w) out.delta.push_back(contract(td.v, c));
    out.w = std::move(w);
    return out;
}

// First failing (i, x-power) of the eigen-relation (R_i + 1/q) w(x) = 0
// modulo the ideal, checked coefficient by coefficient and entry by entry.
struct EigenFailure {
    int i = 0;
    int x_power = 0;
    std::string entry;
};

template <class Field>
std::optional<EigenFailure> eigen_relation_check(const HeckeSymmetry<Field>& h, const CharPoly<typename Field::Scalar>& cp,
                                                 const GradedIdeal<typename Field::Scalar>& ideal) {
    using S = typename Field::Scalar;
    const int p = cp.p;
    const S inv_q = h.field().one() / h.q();
    for (int i = 1; i <= p - 1; ++i) {
        const auto ri = embed(h.R(), i, p);
        for (int k = 0; k <= p; ++k) {
            const auto& w = cp.w[static_cast<std::size_t>(k)];
            auto rw = left_apply(ri, w);
            for (std::size_t e = 0; e < rw.entries.size(); ++e) {
                auto defect = rw.entries[e] + inv_q * w.entries[e];
                if (!ideal.is_member(defect).member) return EigenFailure{i, k, w.space.label(static_cast<std::uint32_t>(e))};
            }
        }
    }
    return std::nullopt;
}

// w(x) - Delta(x) u, entrywise, for each x-power; all should lie in the ideal.
template <class S>
std::optional<std::pair<int, std::string>> proportionality_check(const CharPoly<S>& cp, const TraceData<S>& td,
                                                                 const GradedIdeal<S>& ideal) {
    for (int k = 0; k <= cp.p; ++k) {
        const auto& w = cp.w[static_cast<std::size_t>(k)];
        for (std::size_t e = 0; e < w.entries.size(); ++e) {
            auto defect = w.entries[e] - cp.delta[static_cast<std::size_t>(k)] * td.u.entries[e];
            if (!ideal.is_member(defect).member) return std::make_pair(k, w.space.label(static_cast<std::uint32_t>(e)));
        }
    }
    return std::nullopt;
}

}  // namespace heckelab
