#include "doctest.h"

#include "ospbasis/errors.hpp"
#include "ospbasis/json_io.hpp"

using namespace ospbasis;

TEST_CASE("documents carry a schema version")
{
    const auto d = document("thing", Json{{"x", 1}});
    CHECK(d.at("schema_version") == schema_version);
    CHECK(d.at("kind") == "thing");
    CHECK(d.at("x") == 1);
    CHECK(d.begin().key() == "schema_version");
}

TEST_CASE("scalar round trips")
{
    const auto a = parse_tableau("1,1,2;2", 2);
    CHECK(to_json(a).dump() == "[[1,1,2],[2]]");
    CHECK(tableau_from_json(to_json(a), 2) == a);
    CHECK_THROWS_AS(tableau_from_json(Json::parse("[[2,1]]"), 2), invalid_tableau);

    const auto g = ExponentMatrix::from_rows({{1, 0, 2}, {0, 3, 0}});
    CHECK(exponent_matrix_from_json(to_json(g)) == g);

    const Integer big("-123456789012345678901234567890");
    CHECK(integer_to_json(big) == "-123456789012345678901234567890");
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_from_json(Json(7)) == 7);

    const auto m = normalize_word(3, std::vector<int>{3, 1});
    CHECK(to_json(m).dump() == R"({"sign":-1,"parity":[1,0,1]})");
}

TEST_CASE("polynomial and vector round trips")
{
    const auto v = build_omega_expansion(parse_tableau("1,1,2;2", 2), 2);
    const auto j = to_json(v.value());
    CHECK(j.size() == 7);
    CHECK(poly_from_json(j, 2, 2) == v.value());
    CHECK(poly_from_json(Json::parse(j.dump()), 2, 2) == v.value());
    CHECK_THROWS_AS(poly_from_json(j, 2, 3), std::invalid_argument);

    const auto tv = to_json(v);
    CHECK(tv.at("p") == 2);
    CHECK(tv.at("tableau").dump() == "[[1,1,2],[2]]");
}

TEST_CASE("action tables round trip")
{
    for (auto g : {Generator::X, Generator::D}) {
        const auto t = act(g, 1, parse_tableau("2,3;4", 4), 2);
        CHECK(action_table_from_json(Json::parse(to_json(t).dump()), 4) == t);
    }
    const auto b = act_verma(Generator::BMinus, 2, parse_tableau("1,2;2", 2), 3);
    const auto jb = to_json(b);
    CHECK(jb.at("generator") == "B-2");
    CHECK(action_table_from_json(jb, 2) == b);
    CHECK_THROWS_AS(action_table_from_json(Json{{"source", Json::array()}, {"generator", "X"}, {"p", 1}, {"terms", Json::array()}}, 2),
                    std::invalid_argument);
}

TEST_CASE("context bundles")
{
    const auto ctx = get_context(4, 2, WeightVector({1, 1, 1, 1}));
    auto bundle = context_bundle(*ctx);
    CHECK(bundle.at("schema_version") == schema_version);
    CHECK(bundle.at("dimension") == 6);
    CHECK(bundle.at("U")[0].dump() == R"(["1","-1","0","0","1","1"])");
    CHECK(context_from_bundle(Json::parse(bundle.dump()))->dimension() == 6);

    auto tampered = bundle;
    tampered["U"][0][1] = "5";
    CHECK_THROWS_AS(context_from_bundle(tampered), consistency_error);
    auto old = bundle;
    old["schema_version"] = 0;
    CHECK_THROWS_AS(context_from_bundle(old), std::invalid_argument);
}
