#include <doctest.h>

#include "qops/catalog.hpp"
#include "qops/classify.hpp"
#include "qops/enumerate.hpp"

using namespace qops;

TEST_CASE("catalog class profiles") {
    auto flags = [](const char* name) { return classify(catalog_get(name).poset); };

    ClassReport b2 = flags("B2");
    CHECK(b2.boolean_algebra);
    CHECK(b2.oml);
    CHECK(b2.sp);

    ClassReport k3 = flags("K3");
    CHECK(k3.kleene);
    CHECK_FALSE(k3.ortholattice);
    CHECK(k3.sp);

    ClassReport b6 = flags("B6");
    CHECK(b6.pkl);
    CHECK(b6.ortholattice);
    CHECK_FALSE(b6.paraorthomodular);
    CHECK_FALSE(b6.oml);

    ClassReport b8 = flags("B8");
    CHECK(b8.paraorthomodular);
    CHECK_FALSE(b8.sp1);
    CHECK(b8.sp2);
    CHECK_FALSE(b8.modular);

    ClassReport b8s = flags("B8star");
    CHECK(b8s.paraorthomodular);
    CHECK(b8s.sp1);
    CHECK_FALSE(b8s.sp2);

    ClassReport mo2 = flags("MO2");
    CHECK(mo2.oml);
    CHECK(mo2.modular);
    CHECK_FALSE(mo2.distributive);
}

TEST_CASE("witnesses really violate the reported predicate") {
    Check c = is_paraorthomodular(catalog_get("B6").poset);
    REQUIRE_FALSE(c.ok);
    const Poset& p = catalog_get("B6").poset;
    int x = c.witness[0], y = c.witness[1];
    CHECK(p.leq(x, y));
    auto m = p.partial_meet(p.inv[x], y);
    REQUIRE(m.has_value());
    CHECK(*m == p.bottom);
    CHECK(x != y);
}

TEST_CASE("quasi-equation, conjunction of pasting conditions, and equational forms coincide") {
    // over every model with at most 6 elements
    for (int n = 2; n <= 6; ++n) {
        for (const Poset& p : enumerate_models(n)) {
            Lattice l = as_lattice(p);
            if (!is_pseudo_kleene(l)) continue;
            bool sp = is_sp(l).ok;
            CHECK(sp == (is_sp1(l).ok && is_sp2(l).ok));
            CHECK(sp == is_sp_equational(l).ok);
            CHECK(sp == is_sp_equational_alt(l).ok);
        }
    }
}

TEST_CASE("sharp elements of the B entry behave as advertised") {
    Lattice l = as_lattice(catalog_get("B").poset);
    int a = -1, b = -1;
    for (int i = 0; i < l.n(); ++i) {
        if (l.label(i) == "a") a = i;
        if (l.label(i) == "b") b = i;
    }
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(is_sharp(l, a));
    CHECK(is_sharp(l, b));
    CHECK_FALSE(is_sharp(l, l.meet(a, b)));
}

TEST_CASE("check_class covers every advertised name") {
    const Poset& p = catalog_get("B4").poset;
    for (const auto& name : known_classes()) CHECK_NOTHROW(check_class(p, name));
    CHECK_THROWS(check_class(p, "no-such-class"));
}
