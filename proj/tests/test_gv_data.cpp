#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ansular/corpus.hpp"
#include "ansular/gv_data.hpp"
#include "ansular/pointed_family.hpp"

using namespace ansular;

TEST_CASE("rank-1 and Rep(S3) data validate") {
    FusionDatum triv;
    triv.rank = 1;
    triv.N = {1};
    triv.bar = {0};
    triv.kappa = 0;
    CHECK(validate_fusion(triv).ok());
    CHECK(is_r_category(triv));

    FusionDatum s3 = rep_s3_fusion();
    CHECK(validate_fusion(s3).ok());
    CHECK(is_r_category(s3));
    // std x std = I + sgn + std
    CHECK(s3.n(2, 2, 0) == 1);
    CHECK(s3.n(2, 2, 1) == 1);
    CHECK(s3.n(2, 2, 2) == 1);
}

TEST_CASE("mutations are caught with witnesses") {
    FusionDatum s3 = rep_s3_fusion();
    {
        FusionDatum bad = s3;
        bad.N[(2 * 3 + 2) * 3 + 1] = 0;  // drop sgn from std x std
        auto rep = validate_fusion(bad);
        CHECK_FALSE(rep.ok());
        bool assoc = false;
        for (const auto& f : rep.failures) assoc |= (f.check == "associativity");
        CHECK(assoc);
    }
    {
        FusionDatum bad = s3;
        bad.bar = {0, 2, 1};  // breaks duality at kappa
        CHECK_FALSE(validate_fusion(bad).ok());
    }
    {
        FusionDatum bad = s3;
        bad.N[(0 * 3 + 1) * 3 + 1] = 2;  // unit law
        auto rep = validate_fusion(bad);
        CHECK_FALSE(rep.ok());
        bool unit = false;
        for (const auto& f : rep.failures) unit |= (f.check.rfind("unit law", 0) == 0);
        CHECK(unit);
    }
}

TEST_CASE("group tables validate and compute inverses") {
    CHECK(cyclic_group(5).validate(true).ok());
    CHECK(s3_table().validate(false).ok());
    CHECK_FALSE(s3_table().validate(true).ok());
    GroupTable z6 = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(z6.validate(true).ok());
    for (int a = 0; a < 6; ++a) CHECK(z6.mul(a, z6.inv(a)) == 0);
    GroupTable bad = cyclic_group(3);
    bad.table[4] = 0;  // 1*1 = 0 breaks associativity/inverses
    CHECK_FALSE(bad.validate(true).ok());
}

TEST_CASE("pointed data: a0, bar and the bicharacter") {
    PointedDatum p;
    p.group = cyclic_group(3);
    p.root_order = 1;
    p.q_exp = {0, 0, 0};
    p.b0 = 1;
    CHECK(validate_pointed(p).ok());
    CHECK(p.a0() == 1);  // b0^{-2} = -2 = 1 mod 3
    CHECK(p.bar(0) == 1);
    CHECK(p.bar(2) == 2);

    // semion: B(g,g) = q(0)/q(g)^2 = -1
    PointedDatum s;
    s.group = cyclic_group(2);
    s.root_order = 4;
    s.q_exp = {0, 1};
    s.b0 = 0;
    CHECK(validate_pointed(s).ok());
    CHECK(s.b_exp(1, 1) == 2);
    CHECK(s.bichar(1, 1) == Cyclotomic::integer(-1));
}

TEST_CASE("pointed validation rejects non-quadratic forms") {
    PointedDatum p;
    p.group = cyclic_group(4);
    p.root_order = 8;
    p.b0 = 0;
    p.q_exp = {0, 1, 0, 0};  // B is not a bicharacter
    CHECK_FALSE(validate_pointed(p).ok());
    p.q_exp = {1, 0, 0, 0};  // q(1) != 1
    CHECK_FALSE(validate_pointed(p).ok());
    // valid form q(x) = zeta_8^{x^2}: exponents x^2 mod 8 = 0,1,4,1
    p.q_exp = {0, 1, 4, 1};
    auto rep = validate_pointed(p);
    // self-dual element 2 has q(2)^4 = zeta_8^{16} = 1: passes
    CHECK(rep.ok());
}

TEST_CASE("pointed_to_fusion realizes group fusion with dual twist") {
    PointedDatum p;
    p.group = cyclic_group(3);
    p.root_order = 1;
    p.q_exp = {0, 0, 0};
    p.b0 = 1;
    FusionDatum d = pointed_to_fusion(p);
    CHECK(validate_fusion(d).ok());
    CHECK(d.kappa == 1);
    CHECK_FALSE(is_r_category(d));
    CHECK(d.bar[0] == 1);
    CHECK(d.bar[2] == 2);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                CHECK(d.n(a, b, c) == (p.group.mul(a, b) == c ? 1 : 0));

    PointedDatum triv;
    triv.group = cyclic_group(1);
    triv.root_order = 1;
    triv.q_exp = {0};
    triv.b0 = 0;
    FusionDatum dt = pointed_to_fusion(triv);
    CHECK(dt.rank == 1);
    CHECK(is_r_category(dt));
}

TEST_CASE("every admissible pointed datum converts to valid fusion data") {
    for (const auto& [name, g] : abelian_groups_up_to(8)) {
        auto family = admissible_pointed_data(g);
        CHECK(!family.empty());
        for (const auto& p : family) {
            CHECK(validate_pointed(p).ok());
            CHECK(validate_fusion(pointed_to_fusion(p)).ok());
        }
    }
    // spot check a larger group
    auto z12 = admissible_pointed_data(cyclic_group(12));
    CHECK(!z12.empty());
    for (const auto& p : z12) CHECK(validate_fusion(pointed_to_fusion(p)).ok());
}

TEST_CASE("duality row sums: kappa-component is exactly one") {
    for (const auto& e : corpus()) {
        for (int a = 0; a < e.fusion.rank; ++a) {
            CHECK(e.fusion.n(a, e.fusion.bar[a], e.fusion.kappa) == 1);
            int total = 0;
            for (int b = 0; b < e.fusion.rank; ++b) total += e.fusion.n(a, b, e.fusion.kappa);
            CHECK(total == 1);
        }
    }
}

TEST_CASE("json round-trips bit-exactly") {
    for (const auto& e : corpus()) {
        if (e.pointed) {
            auto j = e.pointed_datum->to_json();
            CHECK(PointedDatum::from_json(j).to_json() == j);
        }
        auto j = e.fusion.to_json();
        CHECK(FusionDatum::from_json(j).to_json() == j);
    }
    CHECK_THROWS(FusionDatum::from_json(nlohmann::json{{"rank", 2}, {"N", {1}}, {"bar", {0, 1}},
                                                       {"kappa", 0}}));
}
