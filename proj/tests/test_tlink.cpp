#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "skein3/textio.hpp"
#include "skein3/tlink.hpp"

using namespace skein3;

TEST_CASE("braid representation") {
    CHECK(to_braid(parse_tlink("T((2,3))")) == parse_braid("B2: s1^3"));
    CHECK(to_braid(parse_tlink("T((2,4),(3,4))")) == free_reduce(parse_braid("B3: [1,2]^4 [1,3]^4")));
    const BraidWord w = to_braid(parse_tlink("T((2,2),(3,2),(5,2))"));
    CHECK(w.strands() == 5);
    CHECK(w.writhe() == 2 * 1 + 2 * 2 + 2 * 4);
    CHECK_THROWS_AS(parse_tlink("T((1,3))"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_tlink("T((3,2),(2,2))"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_tlink("T((2,0))"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_tlink("T(2,3)"), SyntaxError);
}

TEST_CASE("normalization") {
    CHECK(tier_normalize(parse_tlink("T((2,1),(2,2),(3,1))")) == parse_tlink("T((2,3),(3,1))"));
    CHECK(normalize(parse_tlink("T((2,3),(3,1))")) == parse_tlink("T((2,4))"));
    CHECK(normalize(parse_tlink("T((2,1))")) == parse_tlink("T((2,1))")); // unknot
    SkeinOracle oracle;
    for (const char* t : {"T((2,4),(3,1))", "T((2,2),(4,1))", "T((2,2),(3,2),(4,1))"}) {
        TLink L = parse_tlink(t);
        CHECK(oracle.kauffman_jones(to_braid(L)) == oracle.kauffman_jones(to_braid(normalize(L))));
    }
}

TEST_CASE("duality") {
    CHECK(dual(parse_tlink("T((2,3),(3,2))")) == parse_tlink("T((2,1),(5,2))"));
    CHECK(dual(parse_tlink("T((2,4),(3,4))")) == parse_tlink("T((4,1),(8,2))"));
    for (const char* t : {"T((2,5),(4,3),(7,2))", "T((3,4))", "T((2,2),(3,3),(5,1),(6,2))"}) {
        TLink L = parse_tlink(t);
        CHECK(dual(dual(L)) == tier_normalize(L));
    }
    SkeinOracle oracle(18);
    for (const char* t : {"T((2,3),(3,2))", "T((2,4),(3,4))", "T((3,2),(4,2))"}) {
        TLink L = parse_tlink(t);
        CHECK(oracle.kauffman_jones(to_braid(L)) == oracle.kauffman_jones(to_braid(dual(L))));
    }
}

TEST_CASE("braid index rule") {
    const BraidIndexResult bi = braid_index(parse_tlink("T((2,4),(3,4))"));
    CHECK(bi.b == 3);
    CHECK(bi.i0 == 2);
    CHECK(bi.j0 == 1);
    CHECK(braid_index(parse_tlink("T((7,9))")).b == 7);
    for (int y = 1; y <= 5; ++y)
        for (int n = 3; n <= 9; ++n) CHECK(braid_index(TLink({{2, y}, {n, 2}})).b == 2);
    CHECK(braid_index(parse_tlink("T((2,1))")).b == 1);
}

TEST_CASE("tier bound") {
    CHECK(max_tiers_check(parse_tlink("T((2,4),(3,4))")));
    CHECK(max_tiers_check(parse_tlink("T((2,2),(3,2),(5,1),(6,2))"))); // 4 tiers at index 3
    CHECK(tiers_bound_ok(4, 3));
    CHECK_FALSE(tiers_bound_ok(5, 3)); // synthetic negative control
}

TEST_CASE("canonical forms") {
    CHECK(canonical_form(4, 0, 4) == CanonicalForm3{5, 1, 3});
    CHECK(canonical_form(8, 0, 5) == CanonicalForm3{11, 1, 3});
    CHECK(canonical_form(0, 0, 6) == CanonicalForm3{0, 0, 6});
    CHECK(canonical_form(3, 4, 2) == CanonicalForm3{3, 2, 3});
    CHECK(canonical_form(parse_braid("B3: s1^4 [1,3]^4")) == CanonicalForm3{5, 1, 3});
    CHECK(canonical_form(parse_braid("B3: s2^3 [1,3]^3")) == CanonicalForm3{3, 0, 3});
    CHECK_THROWS_AS(canonical_form(4, 3, 0), NotRepresentable);
    CHECK_THROWS_AS(canonical_form(2, 2, 1), NotRepresentable);
    CHECK_THROWS_AS(canonical_form(5, 0, 2), NotRepresentable);
    // sigma_2 sigma_1 sigma_2 parses as sigma_2 [1,3] but closes to T(2,3)
    CHECK_THROWS_AS(canonical_form(parse_braid("B3: s2 s1 s2")), NotRepresentable);
    CHECK_THROWS_AS(canonical_form(parse_braid("B3: s2^2 s1^2")), ShapeMismatch);
    CHECK_THROWS_AS(canonical_form(parse_braid("B3: s1^-2 [1,3]^3")), ShapeMismatch);
}

TEST_CASE("torus identification") {
    CHECK(torus_detect({0, 0, 6}) == std::make_pair(3, 6));
    CHECK(torus_detect({1, 1, 3}) == std::make_pair(3, 4));
    CHECK(torus_detect({3, 1, 3}) == std::make_pair(3, 5));
    CHECK_FALSE(torus_detect({2, 2, 3}).has_value());
    CHECK_FALSE(torus_detect({4, 0, 3}).has_value());
}

TEST_CASE("tier reduction") {
    SECTION("two-braid index") {
        TierReduction r = tier_reduce(parse_tlink("T((2,4),(5,2))"));
        CHECK(r.two_braid == 9);
        CHECK(tier_reduce(parse_tlink("T((2,1))")).braid_index == 1);
        CHECK(tier_reduce(parse_tlink("T((5,2))")).two_braid == 5);
    }
    SECTION("worked chains") {
        CHECK(tier_reduce(parse_tlink("T((3,3),(11,2))")).canonical == CanonicalForm3{11, 1, 3});
        CHECK(tier_reduce(parse_tlink("T((2,8),(3,5))")).canonical == CanonicalForm3{11, 1, 3});
        CHECK(tier_reduce(parse_tlink("T((2,2),(3,2),(5,2))")).canonical == CanonicalForm3{3, 3, 3});
        CHECK(tier_reduce(parse_tlink("T((2,4),(3,4))")).canonical == CanonicalForm3{5, 1, 3});
    }
    SECTION("torus families inside two-tier forms") {
        TierReduction r = tier_reduce(parse_tlink("T((3,6),(7,3))"));
        REQUIRE(r.torus.has_value());
        CHECK(*r.torus == std::make_pair(3, 13));
        TierReduction q = tier_reduce(parse_tlink("T((3,4),(9,3))"));
        REQUIRE(q.torus.has_value());
        CHECK(*q.torus == std::make_pair(3, 13));
    }
    SECTION("hyperbolic knot table") {
        struct Row {
            const char* t;
            CanonicalForm3 c;
        };
        const Row rows[] = {
            {"T((2,4),(3,4))", {5, 1, 3}},   {"T((2,2),(3,8))", {5, 1, 6}},
            {"T((2,2),(3,11))", {5, 1, 9}},  {"T((2,6),(3,4))", {7, 1, 3}},
            {"T((2,2),(3,14))", {5, 1, 12}}, {"T((2,6),(3,5))", {9, 1, 3}},
            {"T((2,4),(3,16))", {5, 1, 15}}, {"T((2,6),(3,10))", {7, 1, 9}},
            {"T((2,6),(3,8))", {9, 1, 6}},
        };
        for (const Row& r : rows) CHECK(tier_reduce(parse_tlink(r.t)).canonical == r.c);
    }
    SECTION("four tiers") {
        TierReduction r = tier_reduce(parse_tlink("T((2,2),(3,2),(5,1),(6,2))"));
        REQUIRE(r.canonical.has_value());
        SkeinOracle oracle(20);
        const BraidWord w = to_braid(parse_tlink("T((2,2),(3,2),(5,1),(6,2))"));
        if (w.crossings() <= 20)
            CHECK(jones_xy_fulltwists(r.canonical->x, r.canonical->y, r.canonical->z).reconstruct() ==
                  oracle.kauffman_jones(w));
    }
    CHECK_THROWS_AS(tier_reduce(parse_tlink("T((4,5),(7,4))")), BraidIndexTooLarge);
}

TEST_CASE("link equality") {
    CHECK(equal_links(parse_tlink("T((2,6),(3,4))"), parse_tlink("T((2,4),(3,5))")));
    CHECK(equal_links(parse_tlink("T((7,27),(10,7))"), parse_tlink("T((7,6),(31,7))")));
    CHECK_FALSE(equal_links(parse_tlink("T((2,4),(3,4))"), parse_tlink("T((2,6),(3,4))")));
    CHECK(equal_links(CanonicalForm3{5, 1, 3}, CanonicalForm3{5, 1, 3}));
    CHECK_FALSE(equal_links(CanonicalForm3{5, 1, 3}, CanonicalForm3{7, 1, 3}));
    // distinct braid indices decide inequality even above index three
    CHECK_FALSE(equal_links(parse_tlink("T((4,5),(7,4))"), parse_tlink("T((5,4),(6,5))")));
    CHECK_THROWS_AS(equal_links(parse_tlink("T((4,5),(7,4))"), parse_tlink("T((4,3),(7,4))")),
                    BraidIndexTooLarge);
}

TEST_CASE("symmetry families") {
    const auto fam = symmetry_family(parse_tlink("T((7,27),(10,7))"));
    auto has = [&](const char* t) {
        return std::find(fam.begin(), fam.end(), parse_tlink(t)) != fam.end();
    };
    CHECK(has("T((7,27),(10,7))"));
    CHECK(has("T((7,20),(17,7))"));
    CHECK(has("T((7,13),(24,7))"));
    CHECK(has("T((7,6),(31,7))"));
    CHECK(has("T((7,10),(27,7))"));
    CHECK(has("T((7,17),(20,7))"));
    CHECK(has("T((7,24),(13,7))"));
    // an index-3 family, decidable through the canonical forms
    const auto small = symmetry_family(parse_tlink("T((3,4),(4,3))"));
    CHECK(small.size() >= 2);
    CHECK(std::find(small.begin(), small.end(), parse_tlink("T((3,1),(7,3))")) != small.end());
    for (const TLink& L : small) CHECK(equal_links(L, parse_tlink("T((3,4),(4,3))")));
    // final-pair swap when r_{k-1} <= s_k <= r_k and s_k | r_k
    const auto swap_fam = symmetry_family(parse_tlink("T((2,3),(6,3))"));
    CHECK(std::find(swap_fam.begin(), swap_fam.end(), parse_tlink("T((2,3),(3,6))")) != swap_fam.end());
    CHECK_THROWS_AS(symmetry_family(parse_tlink("T((2,3),(7,5))")), ShapeMismatch);
}
