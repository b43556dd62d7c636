#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "heckelab/hecke.hpp"

namespace heckelab {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

namespace detail {

template <class Field>
TensorOperator<typename Field::Scalar> random_operator(const Field& f, int n, int arity, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-5, 5);
    TensorOperator<typename Field::Scalar> x(n, arity);
    for (std::uint32_t i = 0; i < x.size(); ++i)
        for (std::uint32_t j = 0; j < x.size(); ++j) x.set(i, j, f.from_int(dist(rng)));
    return x;
}

inline CheckResult verdict(std::string name, bool ok, std::string detail_ok, std::string detail_bad) {
    return {std::move(name), ok, ok ? std::move(detail_ok) : std::move(detail_bad)};
}

}  // namespace detail

// Properties of the antisymmetrizer chain P_-^1 .. P_-^{p+1}:
//   absorbs_r:        P^k R_i = R_i P^k = -(1/q) P^k, i <= k-1
//   absorbs_smaller:  P^k P^i_j = P^i_j P^k = P^k, i + j - 1 <= k
//   recursion:        P^k R_k P^k = -((k+1)_q/k_q) P^{k+1} + (q^k/k_q) P^k
//   recursion_shifted: the same with P^k_2 and R_1
//   routes_agree:     all constructions give the same P^k
template <class Field>
std::vector<CheckResult> antisymmetrizer_checks(const HeckeSymmetry<Field>& h) {
    using S = typename Field::Scalar;
    using Op = TensorOperator<S>;
    const auto& f = h.field();
    const int p = h.require_rank();
    const auto& chain = h.antisymmetrizers();
    const S minus_inv_q = -(f.one() / h.q());
    std::vector<CheckResult> out;

    {
        std::string bad;
        for (int k = 1; k <= p + 1 && bad.empty(); ++k) {
            const Op& pk = chain[static_cast<std::size_t>(k - 1)];
            const Op target = minus_inv_q * pk;
            for (int i = 1; i <= k - 1; ++i) {
                const Op ri = h.R_at(i, k);
                if (pk * ri != target || ri * pk != target) {
                    bad = "fails for k=" + std::to_string(k) + ", i=" + std::to_string(i);
                    break;
                }
            }
        }
        out.push_back(detail::verdict("antisymmetrizer.absorbs_r", bad.empty(), "k <= " + std::to_string(p + 1), bad));
    }
    {
        std::string bad;
        for (int k = 1; k <= p + 1 && bad.empty(); ++k) {
            const Op& pk = chain[static_cast<std::size_t>(k - 1)];
            for (int i = 1; i <= k && bad.empty(); ++i)
                for (int j = 1; i + j - 1 <= k; ++j) {
                    const Op pij = embed(chain[static_cast<std::size_t>(i - 1)], j, k);
                    if (pk * pij != pk || pij * pk != pk) {
                        bad = "fails for k=" + std::to_string(k) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
                        break;
                    }
                }
        }
        out.push_back(detail::verdict("antisymmetrizer.absorbs_smaller", bad.empty(), "k <= " + std::to_string(p + 1), bad));
    }
    for (const bool shifted : {false, true}) {
        std::string bad;
        for (int k = 1; k <= p && bad.empty(); ++k) {
            const Op pk = embed(chain[static_cast<std::size_t>(k - 1)], shifted ? 2 : 1, k + 1);
            const Op r = h.R_at(shifted ? 1 : k, k + 1);
            const S kq = q_number_in(f, k);
            const Op rhs = (-(q_number_in(f, k + 1) / kq)) * chain[static_cast<std::size_t>(k)] + (q_pow_in(f, k) / kq) * pk;
            if (pk * r * pk != rhs) bad = "fails for k=" + std::to_string(k);
        }
        out.push_back(detail::verdict(shifted ? "antisymmetrizer.recursion_shifted" : "antisymmetrizer.recursion", bad.empty(),
                                      "k <= " + std::to_string(p), bad));
    }
    {
        std::string bad;
        const AntisymmetrizerRoute routes[] = {AntisymmetrizerRoute::right_iterative, AntisymmetrizerRoute::shifted_iterative,
                                               AntisymmetrizerRoute::bracket_first, AntisymmetrizerRoute::bracket_shifted};
        for (auto route : routes) {
            if (antisymmetrizer(h, p + 1, route) != chain[static_cast<std::size_t>(p)]) {
                bad = "route " + std::to_string(static_cast<int>(route)) + " differs at k=" + std::to_string(p + 1);
                break;
            }
            for (int k = 1; k <= p; ++k)
                if (antisymmetrizer(h, k, route) != chain[static_cast<std::size_t>(k - 1)]) {
                    bad = "route " + std::to_string(static_cast<int>(route)) + " differs at k=" + std::to_string(k);
                    break;
                }
            if (!bad.empty()) break;
        }
        out.push_back(detail::verdict("antisymmetrizer.routes_agree", bad.empty(), "5 constructions, k <= " + std::to_string(p + 1), bad));
    }
    {
        std::string bad;
        for (int k = 1; k <= p + 1; ++k) {
            const Op& pk = chain[static_cast<std::size_t>(k - 1)];
            if (pk * pk != pk) {
                bad = "P^" + std::to_string(k) + " is not idempotent";
                break;
            }
        }
        out.push_back(detail::verdict("antisymmetrizer.idempotent", bad.empty(), "k <= " + std::to_string(p + 1), bad));
    }
    return out;
}

// Identities of the quantum-trace calculus, with `samples` random integer
// matrices X for the identities quantified over X.
template <class Field>
std::vector<CheckResult> structure_checks(const HeckeSymmetry<Field>& h, const TraceData<typename Field::Scalar>& td,
                                          std::uint64_t seed, int samples = 10) {
    using S = typename Field::Scalar;
    using Op = TensorOperator<S>;
    const auto& f = h.field();
    const int p = h.require_rank();
    const int n = h.dim();
    const Op id1 = Op::identity(n, 1, f.one());
    const Op id2 = Op::identity(n, 2, f.one());
    const S pq_over_qp = q_number_in(f, p) * q_pow_in(f, -p);
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);

    out.push_back(detail::verdict("closed.inverse", partial_transpose_slot1(twisted_r(h)) * h.closed_inverse() == id2,
                                  "(P R)^t1 times cached inverse is I", "cached inverse is wrong"));

    {
        bool ok = true;
        std::string bad;
        const S minus_inv_q = -(f.one() / h.q());
        for (int i = 1; i <= p - 1 && ok; ++i) {
            const Op ri = h.R_at(i, p);
            const auto ru = apply(ri, td.u);
            const auto vr = apply(td.v, ri);
            for (std::size_t k = 0; k < td.u.entries.size(); ++k)
                if (ru.entries[k] != minus_inv_q * td.u.entries[k] || vr.entries[k] != minus_inv_q * td.v.entries[k]) {
                    ok = false;
                    bad = "fails for i=" + std::to_string(i);
                    break;
                }
        }
        out.push_back(detail::verdict("levi_civita.eigen", ok, "R_i u = -u/q and v R_i = -v/q", bad));
    }
    {
        const Op& pp = h.antisymmetrizers()[static_cast<std::size_t>(p - 1)];
        const auto pu = apply(pp, td.u);
        const auto vp = apply(td.v, pp);
        const bool ok = pu.entries == td.u.entries && vp.entries == td.v.entries && pair(td.v, td.u) == f.one() &&
                        outer(td.u, td.v) == pp;
        out.push_back(detail::verdict("levi_civita.factorization", ok, "P^p = u v, v.u = 1, P^p u = u, v P^p = v",
                                      "factorization identities fail"));
    }
    {
        const auto [c2, b2] = matrices_CB_by_partial_trace(h);
        out.push_back(detail::verdict("trace.c_b_routes_agree", c2 == td.C && b2 == td.B,
                                      "index sums and partial traces of ((P R)^t1)^-1 agree", "C or B differ between routes"));
    }
    {
        // C_a^b = (p_q/q^p) sum v^{b rest} u_{a rest}; B_a^b = (p_q/q^p) sum v^{rest b} u_{rest a}
        const IndexSpace sp(n, p);
        const std::uint32_t rest = sp.size() / static_cast<std::uint32_t>(n);
        Op c(n, 1), b(n, 1);
        for (int a = 0; a < n; ++a)
            for (int bb = 0; bb < n; ++bb) {
                S sc{}, sb{};
                for (std::uint32_t t = 0; t < rest; ++t) {
                    const std::uint32_t first_a = static_cast<std::uint32_t>(a) + static_cast<std::uint32_t>(n) * t;
                    const std::uint32_t first_b = static_cast<std::uint32_t>(bb) + static_cast<std::uint32_t>(n) * t;
                    const std::uint32_t last_a = t + rest * static_cast<std::uint32_t>(a);
                    const std::uint32_t last_b = t + rest * static_cast<std::uint32_t>(bb);
                    sc += td.v.entries[first_b] * td.u.entries[first_a];
                    sb += td.v.entries[last_b] * td.u.entries[last_a];
                }
                c.set(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(bb), pq_over_qp * sc);
                b.set(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(bb), pq_over_qp * sb);
            }
        out.push_back(detail::verdict("trace.c_b_factorization", c == td.C && b == td.B,
                                      "C and B are (p_q/q^p)-scaled contractions of v and u", "contraction formula fails"));
    }
    {
        const Op bc = td.B * td.C;
        const bool ok = bc == td.C * td.B && bc == bc.at(0, 0) * id1;
        out.push_back(detail::verdict("trace.bc_scalar", ok, "BC = CB = " + f.format(bc.at(0, 0)) + " I", "BC is not a scalar"));
    }
    {
        const S trc = trace_full(td.C), trb = trace_full(td.B);
        const bool ok = trc == pq_over_qp && trb == pq_over_qp && trace_full(td.C * id1) == pq_over_qp;
        out.push_back(detail::verdict("trace.normalization", ok, "Tr_q I = Tr C = Tr B = " + f.format(trc),
                                      "Tr C = " + f.format(trc) + ", Tr B = " + f.format(trb) + ", expected " + f.format(pq_over_qp)));
    }
    {
        const Op lhs = quantum_trace_slots(td.C, h.R(), {2});
        const Op rhs = trace_slots(embed(td.B, 1, 2) * h.R(), {1});
        out.push_back(detail::verdict("trace.partial_trace_r", lhs == id1 && rhs == id1, "Tr_q(2) R = Tr(1) B_1 R = I",
                                      "partial quantum trace of R is not I"));
    }
    const Op cc = embed(td.C, 1, 2) * embed(td.C, 2, 2);
    out.push_back(detail::verdict("trace.r_commutes_with_cc", h.R() * cc == cc * h.R(), "R C_1 C_2 = C_1 C_2 R",
                                  "R does not commute with C_1 C_2"));

    const Op r_inv = invert(f, h.R());
    {
        std::string bad;
        for (int s = 0; s < samples && bad.empty(); ++s) {
            const Op x = detail::random_operator(f, n, 1, rng);
            const Op x1 = embed(x, 1, 2);
            const Op expected = quantum_trace(td.C, x) * id1;
            if (quantum_trace_slots(td.C, h.R() * x1 * r_inv, {2}) != expected ||
                quantum_trace_slots(td.C, r_inv * x1 * h.R(), {2}) != expected)
                bad = "fails for sample " + std::to_string(s);
        }
        out.push_back(detail::verdict("trace.invariance", bad.empty(), std::to_string(samples) + " random X", bad));
    }
    {
        std::string bad;
        for (int s = 0; s < samples && bad.empty(); ++s) {
            const Op x = detail::random_operator(f, n, 2, rng);
            if (trace_full(cc * h.R() * x * r_inv) != trace_full(cc * x)) bad = "fails for sample " + std::to_string(s);
        }
        out.push_back(detail::verdict("trace.invariance_two_slot", bad.empty(), std::to_string(samples) + " random X_12", bad));
    }
    {
        std::string bad;
        const Op& pp = h.antisymmetrizers()[static_cast<std::size_t>(p - 1)];
        const S scale = q_number_in(f, p) * q_pow_in(f, -(p - 1));
        for (int s = 0; s < samples && bad.empty(); ++s) {
            const Op x = detail::random_operator(f, n, 1, rng);
            const Op sx = symmetrize(h, x, p);
            const S qtr = h.q() * quantum_trace(td.C, x);
            for (int i = 1; i <= p - 1; ++i) {
                const Op ri = h.R_at(i, p);
                if (sx * ri != ri * sx) bad = "S_+ does not commute with R_" + std::to_string(i);
            }
            const Op middle = scale * (pp * embed(x, 1, p) * pp);
            if (pp * sx != middle || sx * pp != middle) bad = "P^p S_+ P^p relation fails for sample " + std::to_string(s);
            const auto vs = apply(td.v, sx);
            const auto su = apply(sx, td.u);
            for (std::size_t k = 0; k < td.u.entries.size() && bad.empty(); ++k)
                if (vs.entries[k] != qtr * td.v.entries[k] || su.entries[k] != qtr * td.u.entries[k])
                    bad = "contraction fails for sample " + std::to_string(s);
        }
        out.push_back(detail::verdict("trace.symmetrizer_contraction", bad.empty(),
                                      "v S_+^p(X) = q Tr_q X v and S_+^p(X) u = q Tr_q X u, " + std::to_string(samples) + " random X", bad));
    }
    return out;
}

}  // namespace heckelab
