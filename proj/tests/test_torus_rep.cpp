#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ansular/corpus.hpp"
#include "ansular/pointed_family.hpp"
#include "ansular/torus_rep.hpp"

using namespace ansular;

TEST_CASE("basis is indexed by group elements with total degree a0") {
    for (const auto& e : corpus()) {
        if (!e.pointed) continue;
        auto basis = torus_block_basis(*e.pointed_datum);
        CHECK(static_cast<int>(basis.size()) == e.pointed_datum->group.order);
    }
    const auto* z3 = find_corpus("z3_pointed");
    REQUIRE(z3);
    const auto& p = *z3->pointed_datum;
    for (int a : torus_block_basis(p)) CHECK(p.group.mul(p.bar(a), a) == p.a0());
}

TEST_CASE("T is diagonal with the balancing entries") {
    const auto* semion = find_corpus("semion");
    REQUIRE(semion);
    auto t = t_matrix(*semion->pointed_datum);
    CHECK(t[0][0] == Cyclotomic::one());
    CHECK(t[1][1] == Cyclotomic::root_of_unity(4, 1));  // i
    CHECK(t[0][1].is_zero());

    const auto* z3q = find_corpus("z3_quadratic");
    REQUIRE(z3q);
    auto t3 = t_matrix(*z3q->pointed_datum);
    CHECK(t3[0][0] == Cyclotomic::one());
    CHECK(t3[1][1] == Cyclotomic::root_of_unity(3, 1));
    CHECK(t3[2][2] == Cyclotomic::root_of_unity(3, 1));

    const auto* z2 = find_corpus("z2_trivial");
    REQUIRE(z2);
    CHECK(cyc_eq(t_matrix(*z2->pointed_datum), cyc_identity(2)));
}

TEST_CASE("R is monomial along the dual involution") {
    const auto* z3 = find_corpus("z3_pointed");  // trivial q, a0 = 1
    REQUIRE(z3);
    const auto& p = *z3->pointed_datum;
    auto r = r_matrix(p);
    // all scalars 1: pure permutation a -> a0 - a
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(r[b][a] == (b == p.bar(a) ? Cyclotomic::one() : Cyclotomic::zero()));
    // fixed point at the square root of a0 = 1: bar(2) = 2
    CHECK(r[2][2] == Cyclotomic::one());
}

TEST_CASE("mapping class relations hold on the whole corpus") {
    for (const auto& e : corpus()) {
        if (!e.pointed) continue;
        auto c = check_torus_rep(*e.pointed_datum);
        CHECK(c.t_diagonal_balancing);
        CHECK(c.commute);
        CHECK(c.r_squared_identity);
    }
}

TEST_CASE("relations hold across the generated pointed families") {
    for (const auto& [name, gt] : abelian_groups_up_to(6)) {
        for (const auto& p : admissible_pointed_data(gt)) {
            auto c = check_torus_rep(p);
            CHECK(c.all());
        }
    }
}

TEST_CASE("(m, e) -> T^m R^e is a homomorphism") {
    const auto* semion = find_corpus("semion");
    REQUIRE(semion);
    const auto& p = *semion->pointed_datum;
    auto t = t_matrix(p);
    auto r = r_matrix(p);
    auto power = [&](const CycMatrix& m, int k) {
        CycMatrix acc = cyc_identity(p.group.order);
        for (int i = 0; i < k; ++i) acc = cyc_mul(acc, m);
        return acc;
    };
    auto rep = [&](int m, int e) {
        return cyc_mul(power(t, m), power(r, e));
    };
    for (int m1 = 0; m1 <= 3; ++m1)
        for (int e1 = 0; e1 <= 1; ++e1)
            for (int m2 = 0; m2 <= 3; ++m2)
                for (int e2 = 0; e2 <= 1; ++e2)
                    CHECK(cyc_eq(cyc_mul(rep(m1, e1), rep(m2, e2)),
                                 rep(m1 + m2, (e1 + e2) % 2)));
}

TEST_CASE("SL(2,Z) shadow constants") {
    auto [t, r] = sl2z_shadow();
    CHECK(t[0][0] == 1);
    CHECK(t[0][1] == 0);
    CHECK(t[1][0] == 1);
    CHECK(t[1][1] == 1);
    CHECK(r[0][0] == -1);
    CHECK(r[1][1] == -1);
    CHECK(r[0][1] == 0);
    // R^2 = I in SL(2,Z)
    int rr[2][2] = {};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) rr[i][j] += r[i][k] * r[k][j];
    CHECK(rr[0][0] == 1);
    CHECK(rr[1][1] == 1);
    CHECK(rr[0][1] == 0);
    CHECK(rr[1][0] == 0);
}

TEST_CASE("invalid data is rejected") {
    PointedDatum bad;
    bad.group = cyclic_group(4);
    bad.root_order = 8;
    bad.q_exp = {0, 1, 0, 0};  // not a quadratic form
    bad.b0 = 0;
    CHECK_THROWS_AS(torus_block_basis(bad), std::invalid_argument);
    CHECK_THROWS_AS(t_matrix(bad), std::invalid_argument);
}
