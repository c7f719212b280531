#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ansular/blocks.hpp"
#include "ansular/corpus.hpp"
#include "ansular/graph_enum.hpp"
#include "ansular/pointed_family.hpp"

using namespace ansular;

TEST_CASE("genus-zero dimensions") {
    FusionDatum s3 = rep_s3_fusion();
    CHECK(genus_zero_dim(s3, {2, 2}) == 1);        // multiplicity of I in std x std
    CHECK(genus_zero_dim(s3, {}) == 1);            // empty product, kappa = unit
    CHECK(genus_zero_dim(s3, {1, 2}) == 0);
    CHECK(genus_zero_dim(s3, {2, 2, 2}) == 1);
    for (int a = 0; a < 3; ++a) CHECK(genus_zero_dim(s3, {s3.bar[a], a}) == 1);
    CHECK_THROWS_AS(genus_zero_dim(s3, {7}), std::invalid_argument);

    // non-r-category: empty product misses kappa
    const auto* z3 = find_corpus("z3_pointed");
    REQUIRE(z3);
    CHECK(genus_zero_dim(z3->fusion, {}) == 0);
    CHECK(genus_zero_dim(z3->fusion, {z3->fusion.kappa}) == 1);
}

TEST_CASE("genus-one dimension equals the rank") {
    for (const auto& e : corpus())
        CHECK(handlebody_dim(e.fusion, {1, {}}).dimension ==
              static_cast<std::uint64_t>(e.fusion.rank));
}

TEST_CASE("genus-two dimension matches the explicit double sum") {
    for (const auto& e : corpus()) {
        const auto& d = e.fusion;
        std::uint64_t direct = 0;
        for (int a = 0; a < d.rank; ++a)
            for (int ap = 0; ap < d.rank; ++ap)
                for (int b = 0; b < d.rank; ++b)
                    direct += static_cast<std::uint64_t>(d.n(d.bar[a], a, b)) *
                              d.n(d.bar[ap], ap, d.bar[b]);
        CHECK(handlebody_dim(d, {2, {}}).dimension == direct);
    }
}

TEST_CASE("graph gluing reproduces handlebody dimensions") {
    // one-vertex circle: sum_a N_{bar a, a}^kappa = rank
    for (const auto& e : corpus()) {
        auto r = graph_glue_dim(e.fusion, circle_graph(0), {});
        CHECK(r.dimension == static_cast<std::uint64_t>(e.fusion.rank));
        CHECK(r.signature.genus == 1);
        CHECK(r.method == "graph");
    }
    // theta graph at genus two
    Graph theta = Graph::from_parts({{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 4}, {2, 5}}, {});
    CHECK(graph_glue_dim(rep_s3_fusion(), theta, {}).dimension == 11);
    // bare corolla: empty gluing is genus_zero_dim
    Graph cor = corolla_graph(corolla_with_legs({"x", "y"}));
    CHECK(graph_glue_dim(rep_s3_fusion(), cor, {{"x", 2}, {"y", 2}}).dimension == 1);
}

TEST_CASE("graph independence across enumerated graphs") {
    for (const auto& e : corpus()) {
        if (e.fusion.rank > 4) continue;
        for (int genus = 1; genus <= 2; ++genus) {
            std::uint64_t expected = handlebody_dim(e.fusion, {genus, {}}).dimension;
            for (const auto& g : enumerate_reduced({}, genus, 3))
                CHECK(graph_glue_dim(e.fusion, g.graph, {}).dimension == expected);
            // one leg, all labels
            for (int l = 0; l < e.fusion.rank; ++l) {
                std::uint64_t want = handlebody_dim(e.fusion, {genus, {l}}).dimension;
                for (const auto& g : enumerate_reduced({"x"}, genus, 3))
                    CHECK(graph_glue_dim(e.fusion, g.graph, {{"x", l}}).dimension == want);
            }
        }
    }
}

TEST_CASE("pointed closed form") {
    const auto* z2 = find_corpus("z2_trivial");
    REQUIRE(z2);
    CHECK(pointed_dim(*z2->pointed_datum, {3, {}}).dimension == 8);

    const auto* z3 = find_corpus("z3_pointed");
    REQUIRE(z3);
    CHECK(z3->pointed_datum->a0() == 1);
    CHECK(pointed_dim(*z3->pointed_datum, {2, {}}).dimension == 0);  // a0^2 != a0
    CHECK(pointed_dim(*z3->pointed_datum, {1, {}}).dimension == 3);

    PointedDatum triv;
    triv.group = cyclic_group(1);
    triv.root_order = 1;
    triv.q_exp = {0};
    triv.b0 = 0;
    for (int g = 0; g <= 4; ++g) CHECK(pointed_dim(triv, {g, {}}).dimension == 1);
}

TEST_CASE("pointed closed form agrees with the coend formula") {
    for (const auto& [name, gt] : abelian_groups_up_to(8)) {
        auto family = admissible_pointed_data(gt);
        // a few representatives per group keeps this fast; coverage of the
        // whole family is the acceptance run's job
        std::size_t step = family.size() > 6 ? family.size() / 6 : 1;
        for (std::size_t i = 0; i < family.size(); i += step) {
            const auto& p = family[i];
            FusionDatum d = pointed_to_fusion(p);
            for (int g = 0; g <= 3; ++g)
                CHECK(pointed_dim(p, {g, {}}).dimension ==
                      handlebody_dim(d, {g, {}}).dimension);
            for (int l = 0; l < p.group.order; ++l)
                CHECK(pointed_dim(p, {1, {l}}).dimension ==
                      handlebody_dim(d, {1, {l}}).dimension);
        }
    }
}

TEST_CASE("orbit oracle") {
    GroupTable s3 = s3_table();
    CHECK(orbit_oracle(s3, 0) == 1);
    CHECK(orbit_oracle(s3, 1) == 3);   // conjugacy classes
    CHECK(orbit_oracle(s3, 2) == 11);  // (36 + 3*4 + 2*9)/6
    for (int g = 0; g <= 3; ++g)
        CHECK(orbit_oracle(cyclic_group(4), g) == static_cast<std::uint64_t>(1) << (2 * g));
}

TEST_CASE("fusion dimensions match the orbit oracle for Rep(S3)") {
    for (int g = 0; g <= 3; ++g)
        CHECK(handlebody_dim(rep_s3_fusion(), {g, {}}).dimension ==
              orbit_oracle(s3_table(), g));
}

TEST_CASE("unit labels never change a dimension") {
    for (const auto& e : corpus()) {
        for (int g = 0; g <= 2; ++g) {
            auto base = handlebody_dim(e.fusion, {g, {}}).dimension;
            CHECK(handlebody_dim(e.fusion, {g, {0}}).dimension == base);
            CHECK(handlebody_dim(e.fusion, {g, {0, 0}}).dimension == base);
        }
    }
}

TEST_CASE("budget guard throws length_error") {
    CHECK_THROWS_AS(handlebody_dim(rep_s3_fusion(), {9, {}}, 100), std::length_error);
    Graph theta = Graph::from_parts({{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 4}, {2, 5}}, {});
    CHECK_THROWS_AS(graph_glue_dim(rep_s3_fusion(), theta, {}, 2), std::length_error);
}
