#include <vector>

#include "doctest.h"
#include "heckelab/errors.hpp"
#include "heckelab/field.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/ideal.hpp"
#include "heckelab/invariants.hpp"

using namespace heckelab;

namespace {

template <class Field>
HeckeSymmetry<Field> standard(const Field& f, int n) {
    return detect_rank(check_closed(validate(f, builtin_standard(f, n))));
}

}  // namespace

TEST_CASE("alpha closed form equals the recurrence") {
    SymbolicField f;
    for (int p = 1; p <= 5; ++p)
        for (int i = 1; i <= p; ++i) CHECK(alpha(f, i, p) == alpha_by_recurrence(f, i, p));
    RationalField one(Rat(1));
    const long binom5[] = {1, 5, 10, 10, 5, 1};
    for (int i = 1; i <= 5; ++i) CHECK(alpha(one, i, 5) == Rat(binom5[i]));
    CHECK_THROWS_AS(alpha(f, 0, 3), ArgumentError);
    CHECK_THROWS_AS(alpha(f, 4, 3), ArgumentError);
}

TEST_CASE("generator matrix powers") {
    SymbolicField f;
    const auto pw = l_powers<QScalar>(2, 2, f.one());
    const Alphabet al(2);
    auto g = [&](int a, int b) { return NCPoly<QScalar>::generator(al, a, b, f.one()); };
    CHECK(pw[1](0, 1) == g(1, 2));
    CHECK(pw[2](0, 1) == g(1, 1) * g(1, 2) + g(1, 2) * g(2, 2));
    CHECK(pw[0](1, 1) == NCPoly<QScalar>::constant(2, f.one()));
}

TEST_CASE("first elementary invariant equals the first power sum") {
    SymbolicField f;
    for (int n = 2; n <= 3; ++n) {
        const auto h = standard(f, n);
        const auto cs = central_set(h, trace_data(h));
        CHECK(cs.sigma[1] == cs.s[1]);
        CHECK(cs.s[1].homogeneous_degree() == 1);
        CHECK(newton_defect(f, cs, 1).is_zero());
    }
}

TEST_CASE("Newton and Cayley-Hamilton defects lie in the ideal for N = 2") {
    SymbolicField f;
    const auto h = standard(f, 2);
    const auto td = trace_data(h);
    const auto cs = central_set(h, td);
    GradedIdeal<QScalar> ideal(re_relations(h), 2, f.one());
    for (int i = 1; i <= 2; ++i) CHECK(ideal.is_member(newton_defect(f, cs, i)).member);
    const auto ch = cayley_hamilton_defect(f, cs, 2);
    for (std::uint32_t a = 0; a < 2; ++a)
        for (std::uint32_t b = 0; b < 2; ++b) CHECK(ideal.is_member(ch(a, b)).member);
    CHECK_THROWS_AS(newton_defect(f, cs, 3), ArgumentError);
}

TEST_CASE("invariants are central modulo the ideal") {
    SymbolicField f;
    const auto h = standard(f, 2);
    const auto cs = central_set(h, trace_data(h));
    GradedIdeal<QScalar> ideal(re_relations(h), 2, f.one());
    const Alphabet al(2);
    for (int i = 1; i <= 2; ++i)
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) {
                const auto g = NCPoly<QScalar>::generator(al, a, b, f.one());
                CHECK(ideal.is_member(commutator(cs.s[static_cast<std::size_t>(i)], g)).member);
                CHECK(ideal.is_member(commutator(cs.sigma[static_cast<std::size_t>(i)], g)).member);
            }
    // A generator is not central.
    const auto g11 = NCPoly<QScalar>::generator(al, 1, 1, f.one());
    const auto g12 = NCPoly<QScalar>::generator(al, 1, 2, f.one());
    CHECK_FALSE(ideal.is_member(commutator(g12, g11)).member);
}

TEST_CASE("characteristic polynomial for N = 2") {
    SymbolicField f;
    const auto h = standard(f, 2);
    const auto td = trace_data(h);
    const auto cs = central_set(h, td);
    const auto cp = char_poly(h, td);
    GradedIdeal<QScalar> ideal(re_relations(h), 2, f.one());
    CHECK(cp.delta[2] == NCPoly<QScalar>::constant(2, f.one()));
    CHECK(ideal.is_member(cp.delta[1] + cs.sigma[1]).member);
    CHECK(ideal.is_member(cp.delta[0] - cs.sigma[2]).member);
    CHECK_FALSE(eigen_relation_check(h, cp, ideal).has_value());
    CHECK_FALSE(proportionality_check(cp, td, ideal).has_value());
}

TEST_CASE("a wrong R inside the invariants is caught") {
    SymbolicField f;
    const auto h = standard(f, 2);
    const auto td = trace_data(h);
    auto bad = h.R();
    bad.set(0, 0, bad.at(0, 0) + f.one());
    const auto cs = central_set(h, td, &bad);
    GradedIdeal<QScalar> ideal(re_relations(h), 2, f.one());
    const auto ch = cayley_hamilton_defect(f, cs, 2);
    bool caught = !ideal.is_member(newton_defect(f, cs, 2)).member;
    for (std::uint32_t a = 0; a < 2; ++a)
        for (std::uint32_t b = 0; b < 2; ++b) caught = caught || !ideal.is_member(ch(a, b)).member;
    CHECK(caught);
}
