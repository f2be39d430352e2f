#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dwc/cochain.hpp"

using namespace dwc;
using nlohmann::json;

namespace {

GroupPtr cyclic(int n) { return construct_group(json{{"kind", "cyclic"}, {"n", n}}); }

Cochain2 random_cochain2(GroupPtr g, std::mt19937& rng, long long den) {
    Cochain2 b(std::move(g));
    for (auto& v : b.values()) v = QmodZ::from_fraction(rng() % den, den);
    return b;
}

}  // namespace

TEST_CASE("coboundary of zero is zero") {
    auto g = cyclic(4);
    Cochain3 d = coboundary_2(Cochain2(g));
    for (const auto& v : d.values()) CHECK(v.is_zero());
}

TEST_CASE("hand-computed coboundary entry on Z/2") {
    auto g = cyclic(2);
    Cochain2 b(g);
    b.at(1, 1) = QmodZ::from_fraction(1, 2);
    Cochain3 d = coboundary_2(b);
    // d(g,g,g) = b(g,g) - b(1,g) + b(g,1) - b(g,g) = 0
    CHECK(d.at(1, 1, 1).is_zero());
    // d(1,g,g) = b(g,g) - b(g,g) + b(1,1) - b(1,g) = 0
    CHECK(d.at(0, 1, 1).is_zero());
}

TEST_CASE("coboundaries are cocycles") {
    std::mt19937 rng(17);
    for (int n : {2, 3, 4, 5, 6}) {
        auto g = cyclic(n);
        for (int t = 0; t < 10; ++t) CHECK(is_cocycle(coboundary_2(random_cochain2(g, rng, 2 * n))));
    }
    auto d5 = construct_group(json{{"kind", "dihedral"}, {"n", 5}});
    for (int t = 0; t < 5; ++t) CHECK(is_cocycle(coboundary_2(random_cochain2(d5, rng, 10))));
}

TEST_CASE("standard cyclic family verifies, perturbation fails") {
    for (int n = 2; n <= 12; ++n) {
        auto g = cyclic(n);
        for (long long k = 0; k < n; ++k) CHECK(is_cocycle(cyclic_standard_cocycle(g, k)));
    }
    auto g = cyclic(5);
    Cochain3 a = cyclic_standard_cocycle(g, 2);
    a.at(3, 4, 2) += QmodZ::from_fraction(1, 2);
    CHECK(!is_cocycle(a));
}

TEST_CASE("strong normalization predicate") {
    auto g = cyclic(2);
    Cochain3 zero(g);
    CHECK(is_strongly_normalized(zero));
    Cochain3 a(g);
    a.at(1, 1, 1) = QmodZ::from_fraction(1, 2);  // xy = 1 there
    CHECK(!is_strongly_normalized(a));
    // on Z/2 the allowed support is empty: every triple is forced
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) CHECK(forced_zero_triple(*g, x, y, z));
}

TEST_CASE("evaluation") {
    auto g = cyclic(5);
    Cochain3 a = cyclic_standard_cocycle(g, 3);
    CHECK(evaluate(a, FormalChain3{}).is_zero());
    FormalChain3 single;
    single.add(1, 2, 3, 4);
    CHECK(evaluate(a, single) == a.at(2, 3, 4));
    // the five-term chain of the cocycle identity evaluates to zero
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        int x = rng() % 5, y = rng() % 5, z = rng() % 5, w = rng() % 5;
        FormalChain3 c;
        c.add(1, x, y, z);
        c.add(-1, g->mul(x, y), z, w);
        c.add(1, x, g->mul(y, z), w);
        c.add(-1, x, y, g->mul(z, w));
        c.add(1, y, z, w);
        CHECK(evaluate(a, c).is_zero());
    }
    // linearity
    FormalChain3 c1, c2;
    c1.add(2, 1, 2, 3);
    c2.add(-1, 4, 4, 1);
    FormalChain3 sum = c1;
    sum += c2;
    CHECK(evaluate(a, sum) == evaluate(a, c1) + evaluate(a, c2));
}

TEST_CASE("json round trip") {
    auto g = cyclic(3);
    Cochain3 a = cyclic_standard_cocycle(g, 2);
    Cochain3 b = cochain3_from_json(cochain3_to_json(a), g);
    CHECK(a == b);
    Cochain3 c = cochain3_from_json(json{{"kind", "cyclic_standard"}, {"n", 3}, {"k", 2}}, g);
    CHECK(a == c);
    CHECK_THROWS(cochain3_from_json(json{{"kind", "cyclic_standard"}, {"n", 4}, {"k", 1}}, g));
}
