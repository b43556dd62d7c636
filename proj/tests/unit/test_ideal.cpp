#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "heckelab/errors.hpp"
#include "heckelab/field.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/ideal.hpp"

using namespace heckelab;

namespace {

template <class Field>
HeckeSymmetry<Field> standard(const Field& f, int n) {
    return detect_rank(check_closed(validate(f, builtin_standard(f, n))));
}

// Dimension of the degree-d commutative polynomials in m variables.
std::uint64_t commutative_dim(std::uint64_t m, std::uint64_t d) {
    std::uint64_t r = 1;
    for (std::uint64_t k = 1; k <= d; ++k) r = r * (m + k - 1) / k;
    return r;
}

// Image of f in the commutative polynomial ring, keyed by sorted letters.
std::map<std::vector<int>, Rat> abelianize(const NCPoly<Rat>& f, const Alphabet& al) {
    std::map<std::vector<int>, Rat> out;
    for (const auto& [m, c] : f.terms()) {
        auto l = al.letters(m);
        std::sort(l.begin(), l.end());
        out[l] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TEST_CASE("relations at q = 1 span the commutators") {
    RationalField f(Rat(1));
    const auto h = detect_rank(check_closed(validate(f, builtin_permutation(f, 2))));
    const auto rels = re_relations(h);
    CHECK(rels.size() == 6);
    GradedIdeal<Rat> ideal(rels, 2, f.one());
    CHECK(ideal.component(2).rank() == 6);
    const Alphabet al(2);
    for (const auto& r : rels) CHECK(ideal.is_member(r).member);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const auto gx = NCPoly<Rat>::generator(al, x / 2 + 1, x % 2 + 1, f.one());
            const auto gy = NCPoly<Rat>::generator(al, y / 2 + 1, y % 2 + 1, f.one());
            CHECK(ideal.is_member(commutator(gx, gy)).member);
            if (x <= y) {
                const auto sq = gx * gy;
                const auto m = ideal.is_member(sq);
                CHECK_FALSE(m.member);
                CHECK_FALSE(m.residual.is_zero());
            }
        }
}

TEST_CASE("membership at q = 1 agrees with the commutative image") {
    RationalField f(Rat(1));
    const int n = 2;
    const auto h = detect_rank(check_closed(validate(f, builtin_permutation(f, n))));
    GradedIdeal<Rat> ideal(re_relations(h), n, f.one());
    const Alphabet al(n);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<std::uint64_t> word(0, al.words(3) - 1);
    int members = 0;
    for (int t = 0; t < 20; ++t) {
        NCPoly<Rat> g(n);
        for (int k = 0; k < 4; ++k) g.add_term(Monomial{3, word(rng)}, Rat(coef(rng)));
        if (t % 2 == 0) {
            // Subtract a reordering of each term so the commutative image vanishes.
            NCPoly<Rat> h2(n);
            for (const auto& [m, c] : g.terms()) {
                auto l = al.letters(m);
                std::shuffle(l.begin(), l.end(), rng);
                h2.add_term(al.from_letters(l), c);
            }
            g -= h2;
        }
        if (g.is_zero()) continue;
        const bool expected = abelianize(g, al).empty();
        members += expected;
        CHECK(ideal.is_member(g).member == expected);
    }
    CHECK(members > 0);
}

TEST_CASE("graded dimensions match the commutative ring") {
    SymbolicField f;
    const auto h2 = standard(f, 2);
    GradedIdeal<QScalar> i2(re_relations(h2), 2, f.one());
    CHECK(re_relations(h2).size() == 7);
    for (std::uint32_t d : {2u, 3u}) CHECK(i2.component(d).rank() == i2.component(d).width() - commutative_dim(4, d));

    RationalField r(Rat(2));
    const auto h3 = standard(r, 3);
    GradedIdeal<Rat> i3(re_relations(h3), 3, r.one());
    for (std::uint32_t d : {2u, 3u}) CHECK(i3.component(d).rank() == i3.component(d).width() - commutative_dim(9, d));
}

TEST_CASE("components are two-sided") {
    SymbolicField f;
    const auto h = standard(f, 2);
    const auto rels = re_relations(h);
    GradedIdeal<QScalar> ideal(rels, 2, f.one());
    const Alphabet al(2);
    for (const auto& r : rels)
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) {
                const auto g = NCPoly<QScalar>::generator(al, a, b, f.one());
                CHECK(ideal.is_member(g * r).member);
                CHECK(ideal.is_member(r * g).member);
                CHECK(ideal.is_member(QScalar::q() * (g * r) - (r * g)).member);
            }
}

TEST_CASE("degree handling and resource limits") {
    SymbolicField f;
    const auto h = standard(f, 2);
    const auto rels = re_relations(h);
    GradedIdeal<QScalar> ideal(rels, 2, f.one());
    const Alphabet al(2);
    const auto g = NCPoly<QScalar>::generator(al, 1, 2, f.one());
    CHECK_FALSE(ideal.is_member(g).member);
    CHECK(ideal.is_member(NCPoly<QScalar>(2)).member);
    CHECK_THROWS_AS(ideal.component(2).is_member(g * g * g), DegreeMismatch);
    CHECK_THROWS_AS(ideal.is_member(g + g * g), DegreeMismatch);
    CHECK_THROWS_AS(ideal_component(rels, 2, 1, f.one()), ArgumentError);
    CHECK_THROWS_AS(ideal_component(rels, 2, 4, f.one(), 100), ResourceError);
    CHECK_THROWS_AS(ideal_component(std::vector<NCPoly<QScalar>>{g}, 2, 2, f.one()), ArgumentError);
}
