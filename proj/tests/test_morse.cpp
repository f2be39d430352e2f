#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "dwc/morse.hpp"

using namespace dwc;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream f(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// abelianized exponent of the word on the meridian class of a component
long long exponent_on(const WirtingerPresentation& p, const std::vector<std::pair<int, int>>& word,
                      int component) {
    long long e = 0;
    for (auto [g, s] : word)
        if (p.arc_component[g] == component) e += s;
    return e;
}

void check_longitude_classes(const MorseDiagram& d) {
    auto p = wirtinger(d);
    for (int i = 0; i < p.n_components; ++i) {
        auto word = longitude_word(p, i);
        for (int j = 0; j < p.n_components; ++j)
            CHECK(exponent_on(p, word, j) == (i == j ? 0 : d.linking_number(i, j)));
    }
}

MorseDiagram braid_closure(const std::vector<int>& word) {
    // word entries +-1, +-2 for the two 3-braid generators and inverses
    std::vector<Event> ev;
    for (int i = 0; i < 3; ++i) ev.push_back({EventKind::Cup, true, i});
    for (int g : word)
        ev.push_back({g > 0 ? EventKind::CrossPos : EventKind::CrossNeg, false, (g > 0 ? g : -g) - 1});
    for (int i = 2; i >= 0; --i) ev.push_back({EventKind::Cap, false, i});
    return MorseDiagram(std::move(ev));
}

}  // namespace

TEST_CASE("unknot") {
    auto d = parse_diagram("cup ccw 0\ncap 0\n");
    CHECK(d.component_count() == 1);
    CHECK(d.arc_count() == 1);
    CHECK(d.crossings().empty());
    auto p = wirtinger(d);
    CHECK(p.relations.empty());
    CHECK(p.meridian[0] == 0);
    CHECK(longitude_word(p, 0).empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_diagram("cop ccw 0\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("cup sideways 0\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("cup ccw\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("cup ccw 0 7\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("cap -1\n"), ParseError);
}

TEST_CASE("topology errors") {
    // position beyond current width
    CHECK_THROWS_AS(parse_diagram("cup ccw 0\nx+ 1\ncap 0\n"), TopologyError);
    CHECK_THROWS_AS(parse_diagram("cup ccw 2\ncap 0\n"), TopologyError);
    CHECK_THROWS_AS(parse_diagram("cap 0\n"), TopologyError);
    // unclosed strands
    CHECK_THROWS_AS(parse_diagram("cup ccw 0\n"), TopologyError);
    // cap joining two parallel strands
    CHECK_THROWS_AS(parse_diagram("cup ccw 0\ncup cw 2\ncap 1\ncap 0\n"), TopologyError);
    // ... while antiparallel middles close up fine (zigzag unknot)
    CHECK(parse_diagram("cup ccw 0\ncup ccw 2\ncap 1\ncap 0\n").component_count() == 1);
}

TEST_CASE("kinks carry writhe of either sign") {
    auto pos = parse_diagram("cup ccw 0\nx- 0\ncap 0\n");
    CHECK(pos.component_count() == 1);
    CHECK(pos.writhe(0) == 1);
    auto neg = parse_diagram("cup ccw 0\nx+ 0\ncap 0\n");
    CHECK(neg.writhe(0) == -1);
    check_longitude_classes(pos);
    check_longitude_classes(neg);
}

TEST_CASE("Hopf link and its mirror") {
    auto d = parse_diagram("cup ccw 0\ncup ccw 1\nx+ 2\nx+ 2\ncap 1\ncap 0\n");
    CHECK(d.component_count() == 2);
    CHECK(d.arc_count() == 2);
    CHECK(d.linking_number(0, 1) == 1);
    auto p = wirtinger(d);
    REQUIRE(p.relations.size() == 2);
    // each meridian is forced to commute with the other (single arc per
    // component, so out == in and the relation is a commutator)
    for (const auto& r : p.relations) {
        CHECK(r.out == r.in);
        CHECK(r.over != r.in);
        CHECK(r.sign == 1);
    }
    CHECK(p.writhe[0] == 0);
    CHECK(p.writhe[1] == 0);
    auto word = longitude_word(p, 0);
    REQUIRE(word.size() == 1);
    CHECK(p.arc_component[word[0].first] == 1);
    CHECK(word[0].second == 1);

    auto m = parse_diagram("cup ccw 0\ncup ccw 1\nx- 2\nx- 2\ncap 1\ncap 0\n");
    CHECK(m.linking_number(0, 1) == -1);
    check_longitude_classes(d);
    check_longitude_classes(m);
}

TEST_CASE("trefoil from a 2-braid") {
    auto d = parse_diagram("cup ccw 0\ncup ccw 1\nx+ 0\nx+ 0\nx+ 0\ncap 1\ncap 0\n");
    CHECK(d.component_count() == 1);
    CHECK(d.arc_count() == 3);
    CHECK(d.crossings().size() == 3);
    CHECK(d.writhe(0) == 3);
    check_longitude_classes(d);
}

TEST_CASE("figure-eight fixture") {
    auto d = parse_diagram(slurp("figure8.morse"));
    CHECK(d.component_count() == 1);
    CHECK(d.arc_count() == 4);
    CHECK(d.crossings().size() == 4);
    CHECK(d.writhe(0) == 0);
    auto p = wirtinger(d);
    // relation set pinned: (out, over, in, sign)
    std::vector<WirtingerRelation> want = {
        {1, 0, 3, -1}, {0, 2, 1, 1}, {2, 3, 0, -1}, {3, 1, 2, 1}};
    REQUIRE(p.relations.size() == want.size());
    for (const auto& w : want) {
        bool found = false;
        for (const auto& r : p.relations)
            found |= r.out == w.out && r.over == w.over && r.in == w.in && r.sign == w.sign;
        CHECK(found);
    }
    check_longitude_classes(d);
}

TEST_CASE("three-ring chain fixture") {
    auto d = parse_diagram(slurp("chain3.morse"));
    CHECK(d.component_count() == 3);
    CHECK(d.arc_count() == 6);
    CHECK(d.crossings().size() == 6);
    for (int c = 0; c < 3; ++c) CHECK(d.writhe(c) == 0);
    CHECK(d.linking_number(0, 1) == 1);
    CHECK(d.linking_number(0, 2) == 1);
    CHECK(d.linking_number(1, 2) == -1);
    auto p = wirtinger(d);
    std::vector<WirtingerRelation> want = {{3, 1, 0, 1}, {4, 3, 1, 1}, {1, 2, 4, -1},
                                           {5, 4, 2, -1}, {2, 0, 5, 1}, {0, 5, 3, 1}};
    REQUIRE(p.relations.size() == want.size());
    for (const auto& w : want) {
        bool found = false;
        for (const auto& r : p.relations)
            found |= r.out == w.out && r.over == w.over && r.in == w.in && r.sign == w.sign;
        CHECK(found);
    }
    CHECK(p.meridian == std::vector<int>{0, 1, 2});
    check_longitude_classes(d);
}

TEST_CASE("signed count identity and longitude classes on random braid closures") {
    std::mt19937 rng(41);
    for (int t = 0; t < 40; ++t) {
        std::vector<int> word(rng() % 8);
        for (int& g : word) {
            g = 1 + static_cast<int>(rng() % 2);
            if (rng() % 2) g = -g;
        }
        auto d = braid_closure(word);
        long long lhs = 0;
        for (int c = 0; c < d.component_count(); ++c) lhs += d.writhe(c);
        for (int i = 0; i < d.component_count(); ++i)
            for (int j = i + 1; j < d.component_count(); ++j) lhs += 2 * d.linking_number(i, j);
        CHECK(lhs == d.total_signed_crossings());
        check_longitude_classes(d);
    }
}

TEST_CASE("basepoint override") {
    auto d = parse_diagram(slurp("figure8.morse"));
    std::vector<int> bp{2};
    auto p = wirtinger(d, &bp);
    CHECK(p.meridian[0] == 2);
    auto word = longitude_word(p, 0);
    CHECK(word.size() == 4);
    CHECK(exponent_on(p, word, 0) == 0);
    std::vector<int> bad{9};
    CHECK_THROWS_AS(wirtinger(d, &bad), TopologyError);
}

TEST_CASE("parsing is deterministic") {
    auto text = slurp("chain3.morse");
    auto p1 = wirtinger(parse_diagram(text));
    auto p2 = wirtinger(parse_diagram(text));
    REQUIRE(p1.relations.size() == p2.relations.size());
    for (size_t i = 0; i < p1.relations.size(); ++i) {
        CHECK(p1.relations[i].out == p2.relations[i].out);
        CHECK(p1.relations[i].over == p2.relations[i].over);
        CHECK(p1.relations[i].in == p2.relations[i].in);
        CHECK(p1.relations[i].sign == p2.relations[i].sign);
    }
    CHECK(p1.meridian == p2.meridian);
}
