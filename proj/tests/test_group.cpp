#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "dwc/group.hpp"

using dwc::construct_group;
using dwc::FiniteGroup;
using nlohmann::json;

TEST_CASE("trivial group") {
    auto g = construct_group(json{{"kind", "cyclic"}, {"n", 1}});
    CHECK(g->order() == 1);
    CHECK(g->identity() == 0);
    CHECK(g->mul(0, 0) == 0);
}

TEST_CASE("dihedral order 10 passes exhaustive verification") {
    auto g = construct_group(json{{"kind", "dihedral"}, {"n", 5}});
    REQUIRE(g->order() == 10);
    // independent triple-loop associativity check on the exposed table
    const auto& t = g->table();
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b)
            for (int c = 0; c < 10; ++c) REQUIRE(t[t[a][b]][c] == t[a][t[b][c]]);
    // rotation generator has order 5, a reflection has order 2
    CHECK(g->elem_order(1) == 5);
    CHECK(g->elem_order(5) == 2);
}

TEST_CASE("non-associative table rejected") {
    // order-3 table with left-cancellation rows but broken associativity
    json spec = {{"kind", "table"},
                 {"mul", json::array({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}})}};
    CHECK_THROWS_AS(construct_group(spec), dwc::InvalidGroup);
}

TEST_CASE("order cap enforced") {
    CHECK_THROWS_AS(construct_group(json{{"kind", "cyclic"}, {"n", 100}}),
                    dwc::TooLarge);
    CHECK(construct_group(json{{"kind", "cyclic"}, {"n", 100}}, 128)->order() == 100);
}

TEST_CASE("powers") {
    auto z5 = construct_group(json{{"kind", "cyclic"}, {"n", 5}});
    CHECK(z5->power(2, 0) == z5->identity());
    CHECK(z5->power(2, -3) == 4);  // -6 mod 5
    for (long long m = -20; m <= 20; ++m)
        for (long long n = -20; n <= 20; ++n)
            for (int g = 0; g < 5; ++g)
                CHECK(z5->power(g, m + n) == z5->mul(z5->power(g, m), z5->power(g, n)));
}

TEST_CASE("inverse anti-homomorphism") {
    for (auto spec : {json{{"kind", "dihedral"}, {"n", 4}}, json{{"kind", "symmetric"}, {"n", 3}},
                      json{{"kind", "product"},
                           {"factors", json::array({json{{"kind", "cyclic"}, {"n", 2}},
                                                    json{{"kind", "cyclic"}, {"n", 2}}})}}}) {
        auto g = construct_group(spec);
        for (int a = 0; a < g->order(); ++a)
            for (int b = 0; b < g->order(); ++b)
                CHECK(g->inv(g->mul(a, b)) == g->mul(g->inv(b), g->inv(a)));
    }
}

TEST_CASE("symmetric and product sizes") {
    CHECK(construct_group(json{{"kind", "symmetric"}, {"n", 3}})->order() == 6);
    auto q = construct_group(json{{"kind", "product"},
                                  {"factors", json::array({json{{"kind", "cyclic"}, {"n", 3}},
                                                           json{{"kind", "dihedral"}, {"n", 2}}})}});
    CHECK(q->order() == 12);
}
