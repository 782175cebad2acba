#include <doctest.h>

#include "qops/catalog.hpp"
#include "qops/classify.hpp"
#include "qops/constructs.hpp"
#include "qops/subalg.hpp"

#include <algorithm>

using namespace qops;

TEST_CASE("catalog entries validate and have the advertised sizes") {
    for (const auto& e : catalog()) {
        CHECK_NOTHROW(Poset::validate(e.poset.n, e.poset.up, e.poset.inv));
        CHECK(try_lattice(e.poset).has_value());
    }
    CHECK(catalog_get("B2").poset.n == 2);
    CHECK(catalog_get("K3").poset.n == 3);
    CHECK(catalog_get("B6").poset.n == 6);
    CHECK(catalog_get("B8").poset.n == 8);
    CHECK(catalog_get("B10").poset.n == 10);
    CHECK(catalog_get("C").poset.n == 10);
    CHECK(catalog_get("F11").poset.n == 16);
    CHECK_FALSE(catalog_has("nope"));
    CHECK_THROWS_AS(catalog_get("nope"), std::out_of_range);
}

TEST_CASE("catalog isomorphism classes match the known coincidences") {
    // The twelve-element witnesses come from different case splits of one
    // argument, so several of them share an abstract shape even though they
    // are generated by different terms. Exactly two clusters coincide.
    auto same_cluster = [](const std::string& a, const std::string& b) {
        static const std::vector<std::vector<std::string>> clusters = {
            {"F2", "F3", "F4", "F6", "F8", "F8star", "F10"},
            {"F5", "F7", "F9"},
        };
        for (const auto& c : clusters) {
            bool ia = std::find(c.begin(), c.end(), a) != c.end();
            bool ib = std::find(c.begin(), c.end(), b) != c.end();
            if (ia || ib) return ia && ib;
        }
        return false;
    };
    auto entries = catalog();
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (entries[i].poset.n != entries[j].poset.n) continue;
            bool iso =
                find_orthoisomorphism(entries[i].poset, entries[j].poset).has_value();
            CHECK_MESSAGE(iso == same_cluster(entries[i].name, entries[j].name),
                          entries[i].name, " vs ", entries[j].name);
        }
}

TEST_CASE("doubling the two-element lattice gives the three-element chain") {
    Lattice b2 = as_lattice(catalog_get("B2").poset);
    Lattice doubled = moisil_interval(b2);
    CHECK(doubled.n() == 3);
    CHECK(find_orthoisomorphism(doubled.base, catalog_get("K3").poset).has_value());
}

TEST_CASE("orthoisomorphism search is sound") {
    const Poset& b8 = catalog_get("B8").poset;
    auto id = find_orthoisomorphism(b8, b8);
    REQUIRE(id.has_value());
    const auto& f = *id;
    for (int x = 0; x < b8.n; ++x)
        for (int y = 0; y < b8.n; ++y) CHECK(b8.leq(x, y) == b8.leq(f[x], f[y]));
    for (int x = 0; x < b8.n; ++x) CHECK(f[b8.inv[x]] == b8.inv[f[x]]);
    CHECK_FALSE(find_orthoisomorphism(b8, catalog_get("B8star").poset).has_value());
}
