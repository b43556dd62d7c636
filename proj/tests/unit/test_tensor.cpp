#include <random>
#include <vector>

#include "doctest.h"
#include "heckelab/errors.hpp"
#include "heckelab/field.hpp"
#include "heckelab/tensor.hpp"

using namespace heckelab;
using Op = TensorOperator<Rat>;

namespace {

Op random_op(int n, int arity, std::mt19937_64& rng, int density = 2) {
    std::uniform_int_distribution<long> val(-4, 4), keep(0, density);
    Op a(n, arity);
    for (std::uint32_t i = 0; i < a.size(); ++i)
        for (std::uint32_t j = 0; j < a.size(); ++j)
            if (keep(rng) == 0) a.set(i, j, Rat(val(rng)));
    return a;
}

// Dense entry of 1 (x) .. (x) A (x) .. (x) 1 computed digit by digit.
Rat embed_entry(const Op& a, int slot, const IndexSpace& big, std::uint32_t row, std::uint32_t col) {
    std::vector<int> ri = big.unflatten(row), ci = big.unflatten(col);
    std::vector<int> ar, ac;
    for (int s = 0; s < big.arity(); ++s) {
        const bool inside = s >= slot - 1 && s < slot - 1 + a.arity();
        if (inside) {
            ar.push_back(ri[static_cast<std::size_t>(s)]);
            ac.push_back(ci[static_cast<std::size_t>(s)]);
        } else if (ri[static_cast<std::size_t>(s)] != ci[static_cast<std::size_t>(s)]) {
            return Rat(0);
        }
    }
    return a.at(ar, ac);
}

}  // namespace

TEST_CASE("index flattening is little-endian") {
    IndexSpace sp(3, 3);
    CHECK(sp.size() == 27);
    CHECK(sp.flatten({1, 0, 0}) == 1);
    CHECK(sp.flatten({0, 1, 0}) == 3);
    CHECK(sp.flatten({2, 1, 2}) == 2 + 3 + 18);
    for (std::uint32_t f = 0; f < sp.size(); ++f) CHECK(sp.flatten(sp.unflatten(f)) == f);
    CHECK(sp.label(sp.flatten({0, 2, 1})) == "(1,3,2)");
    CHECK_THROWS(checked_power(16, 40));
}

TEST_CASE("composition follows (AB)_i^j = sum_k A_i^k B_k^j") {
    std::mt19937_64 rng(1);
    const Op a = random_op(2, 2, rng), b = random_op(2, 2, rng);
    const Op c = a * b;
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 4; ++j) {
            Rat s;
            for (std::uint32_t k = 0; k < 4; ++k) s += a.at(i, k) * b.at(k, j);
            CHECK(c.at(i, j) == s);
        }
}

TEST_CASE("embed matches the digit-wise definition and commutes with composition") {
    std::mt19937_64 rng(2);
    for (int slot = 1; slot <= 3; ++slot) {
        const Op a = random_op(2, 2, rng), b = random_op(2, 2, rng);
        if (slot + 1 > 4) continue;
        const Op e = embed(a, slot, 4);
        for (std::uint32_t i = 0; i < e.size(); ++i)
            for (std::uint32_t j = 0; j < e.size(); ++j) CHECK(e.at(i, j) == embed_entry(a, slot, e.space(), i, j));
        CHECK(embed(a * b, slot, 4) == embed(a, slot, 4) * embed(b, slot, 4));
    }
    CHECK_THROWS_AS(embed(Op(2, 2), 3, 3), ShapeError);
}

TEST_CASE("operators on disjoint slots commute") {
    std::mt19937_64 rng(3);
    const Op a = random_op(2, 2, rng), b = random_op(2, 2, rng);
    CHECK(embed(a, 1, 4) * embed(b, 3, 4) == embed(b, 3, 4) * embed(a, 1, 4));
    const Op p = Op::permutation(2, Rat(1));
    CHECK(embed(p, 1, 3) * embed(p, 2, 3) * embed(p, 1, 3) == embed(p, 2, 3) * embed(p, 1, 3) * embed(p, 2, 3));
}

TEST_CASE("partial transpose in slot 1") {
    std::mt19937_64 rng(4);
    const Op a = random_op(3, 2, rng);
    const Op t = partial_transpose_slot1(a);
    CHECK(partial_transpose_slot1(t) == a);
    for (int i1 = 0; i1 < 3; ++i1)
        for (int i2 = 0; i2 < 3; ++i2)
            for (int j1 = 0; j1 < 3; ++j1)
                for (int j2 = 0; j2 < 3; ++j2) CHECK(t.at({i1, i2}, {j1, j2}) == a.at({j1, i2}, {i1, j2}));
}

TEST_CASE("exact inversion") {
    std::mt19937_64 rng(5);
    RationalField f(Rat(2));
    int inverted = 0;
    for (int t = 0; t < 10; ++t) {
        const Op a = random_op(2, 2, rng, 1);
        try {
            const Op inv = invert(f, a);
            CHECK(a * inv == Op::identity(2, 2, Rat(1)));
            CHECK(inv * a == Op::identity(2, 2, Rat(1)));
            ++inverted;
        } catch (const NotInvertible&) {
        }
    }
    CHECK(inverted > 0);
    CHECK_THROWS_AS(invert(f, Op(2, 2)), NotInvertible);
}

TEST_CASE("partial traces compose") {
    std::mt19937_64 rng(6);
    const Op a = random_op(2, 3, rng);
    CHECK(trace_slots(a, {1, 3}) == trace_slots(trace_slots(a, {3}), {1}));
    CHECK(trace_slots(a, {2, 3}) == trace_slots(trace_slots(a, {2}), {2}));
    const Op t1 = trace_slots(trace_slots(a, {2, 3}), {1});
    CHECK(t1.at(0, 0) == trace_full(a));
    // Brute force for one slot.
    const Op t2 = trace_slots(a, {2});
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i3 = 0; i3 < 2; ++i3)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j3 = 0; j3 < 2; ++j3) {
                    Rat s;
                    for (int k = 0; k < 2; ++k) s += a.at({i1, k, i3}, {j1, k, j3});
                    CHECK(t2.at({i1, i3}, {j1, j3}) == s);
                }
    CHECK_THROWS_AS(trace_slots(a, {2, 2}), ShapeError);
}

TEST_CASE("idempotent rank and rank-one factorization") {
    RationalField f(Rat(2));
    const Op id = Op::identity(3, 2, Rat(1));
    const Op p = Op::permutation(3, Rat(1));
    const Op sym = Rat(1, 2) * (id + p), alt = Rat(1, 2) * (id - p);
    CHECK(idempotent_rank(f, id) == 9);
    CHECK(idempotent_rank(f, sym) == 6);
    CHECK(idempotent_rank(f, alt) == 3);
    CHECK_THROWS_AS(idempotent_rank(f, p), NotIdempotent);

    const Op alt2 = Rat(1, 2) * (Op::identity(2, 2, Rat(1)) - Op::permutation(2, Rat(1)));
    const auto [u, v] = rank1_factor(f, alt2);
    CHECK(pair(v, u) == Rat(1));
    CHECK(outer(u, v) == alt2);
    CHECK(apply(alt2, u).entries == u.entries);
    CHECK(apply(v, alt2).entries == v.entries);
    CHECK_THROWS_AS(rank1_factor(f, alt), RankError);
}
