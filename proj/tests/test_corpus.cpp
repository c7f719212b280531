#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "ansular/corpus.hpp"

using namespace ansular;

namespace {

nlohmann::json load(const std::string& name) {
    std::ifstream in(std::string(ANSULAR_DATA_DIR) + "/" + name + ".json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

} // namespace

TEST_CASE("corpus contains the required datasets and all validate") {
    std::set<std::string> names;
    for (const auto& e : corpus()) {
        names.insert(e.name);
        CHECK(validate_fusion(e.fusion).ok());
        if (e.pointed) CHECK(validate_pointed(*e.pointed_datum).ok());
    }
    for (const char* n :
         {"trivial", "z2_trivial", "semion", "z3_pointed", "z4_pointed", "rep_s3"})
        CHECK(names.count(n));
}

TEST_CASE("corpus covers both r-categories and non-r-categories") {
    const auto* z3 = find_corpus("z3_pointed");
    REQUIRE(z3);
    CHECK(z3->fusion.kappa != 0);
    CHECK_FALSE(is_r_category(z3->fusion));
    const auto* s3 = find_corpus("rep_s3");
    REQUIRE(s3);
    CHECK(is_r_category(s3->fusion));
}

TEST_CASE("bundled files match the embedded corpus bit-exactly") {
    for (const auto& e : corpus()) {
        nlohmann::json file = load(e.name);
        CHECK(file == e.to_json());
        // round-trip through the parsers is also bit-exact
        if (e.pointed)
            CHECK(PointedDatum::from_json(file).to_json() == file);
        else
            CHECK(FusionDatum::from_json(file).to_json() == file);
    }
}

TEST_CASE("the shipped corrupted dataset fails validation") {
    nlohmann::json j = load("invalid_rep_s3_mutation");
    auto d = FusionDatum::from_json(j);
    CHECK_FALSE(validate_fusion(d).ok());
}

TEST_CASE("named groups resolve") {
    CHECK(named_group("s3"));
    CHECK(named_group("z6"));
    CHECK(named_group("z6")->order == 6);
    CHECK_FALSE(named_group("q8"));
    CHECK(s3_table().validate(false).ok());
}
