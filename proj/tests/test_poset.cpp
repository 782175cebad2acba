#include <doctest.h>

#include "qops/catalog.hpp"
#include "qops/poset.hpp"

using namespace qops;

TEST_CASE("cover closure builds the reflexive transitive order") {
    // chain 0 < 1 < 2
    Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}}, {2, 1, 0});
    CHECK(p.leq(0, 2));
    CHECK(p.leq(0, 0));
    CHECK_FALSE(p.leq(2, 0));
    CHECK(p.bottom == 0);
    CHECK(p.top == 2);
    CHECK(p.height(p.top) == 2);
}

TEST_CASE("validation rejects broken structures") {
    // involution that is not antitone: identity on a 2-chain
    Poset p = Poset::from_covers(2, {{0, 1}}, {1, 0});
    CHECK_THROWS_AS(Poset::validate(p.n, p.up, {0, 1}), ValidationError);

    // not an involution
    Poset q = Poset::from_covers(3, {{0, 1}, {1, 2}}, {2, 1, 0});
    CHECK_THROWS_AS(Poset::validate(q.n, q.up, {2, 0, 1}), ValidationError);

    // no top element: 0 below the two incomparable elements 1 and 2
    std::vector<Bits> up = {0b111, 0b010, 0b100};
    CHECK_THROWS_AS(Poset::validate(3, up, {0, 1, 2}), ValidationError);
}

TEST_CASE("partial meets and joins match cover structure on the benzene ring") {
    const Poset& b6 = catalog_get("B6").poset;
    int x = 1, yp = 3;  // incomparable middle elements on opposite sides
    CHECK(b6.incomparable(x, yp));
    auto m = b6.partial_meet(x, yp);
    REQUIRE(m.has_value());
    CHECK(*m == b6.bottom);
}

TEST_CASE("lattice tables agree with bruteforce bounds on every catalog entry") {
    for (const auto& e : catalog()) {
        auto lat = try_lattice(e.poset);
        REQUIRE_MESSAGE(lat.has_value(), e.name);
        const Lattice& l = *lat;
        for (int x = 0; x < l.n(); ++x)
            for (int y = 0; y < l.n(); ++y) {
                // meet = unique maximal common lower bound
                int m = l.meet(x, y);
                CHECK(l.leq(m, x));
                CHECK(l.leq(m, y));
                for (int z = 0; z < l.n(); ++z)
                    if (l.leq(z, x) && l.leq(z, y)) CHECK(l.leq(z, m));
                int j = l.join(x, y);
                CHECK(l.leq(x, j));
                CHECK(l.leq(y, j));
                for (int z = 0; z < l.n(); ++z)
                    if (l.leq(x, z) && l.leq(y, z)) CHECK(l.leq(j, z));
            }
    }
}

TEST_CASE("involution is antitone and swaps bounds on catalog entries") {
    for (const auto& e : catalog()) {
        const Poset& p = e.poset;
        CHECK(p.inv[p.bottom] == p.top);
        for (int x = 0; x < p.n; ++x)
            for (int y = 0; y < p.n; ++y)
                if (p.leq(x, y)) CHECK(p.leq(p.inv[y], p.inv[x]));
    }
}
