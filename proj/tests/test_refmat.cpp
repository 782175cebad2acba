#include <doctest.h>

#include "qops/catalog.hpp"
#include "qops/classify.hpp"
#include "qops/refmat.hpp"
#include "qops/subalg.hpp"

using namespace qops;

TEST_CASE("the five-proposition example matrix satisfies the matrix axioms") {
    RefMatrix m = example_matrix();
    CHECK(m.carrier.size() == 5);
    CHECK(m.num_indices == 2);
    CHECK(check_matrix_axioms(m).empty());
    // the join of the two one-sided propositions is undefined
    CHECK_FALSE(m.commeasurable(2, 4));  // f_a vs f_b
    CHECK(m.commeasurable(2, 3));        // f_a vs f_not_a
}

TEST_CASE("plain entailment on the example matrix is not substitution invariant") {
    RefMatrix m = example_matrix();
    Formula x = Formula::var("x");
    Formula phi = Formula::lor(Formula::lor(x, Formula::neg(x)), Formula::var("y"));
    CHECK(entails(m, {x}, phi));

    // substituting y -> or(u,v) and assigning u -> f_a, v -> f_b leaves the
    // conclusion undefined (the two one-sided propositions have no join), so
    // the substitution instance of the consequence fails while the
    // variable-inclusion relation rejects the original outright
    Formula sub = substitute(phi, {{"y", Formula::lor(Formula::var("u"), Formula::var("v"))}});
    auto val = extend_partial_hom(m, {{"x", 2}, {"u", 2}, {"v", 4}}, sub);
    CHECK_FALSE(val.has_value());
    CHECK_FALSE(entails(m, {x}, sub));
    CHECK_FALSE(entails_structural(m, {x}, phi));
}

TEST_CASE("formula parsing and printing") {
    Formula f = parse_formula("or(neg(x),or(0,1))");
    CHECK(f.str() == "or(neg(x),or(0,1))");
    CHECK(f.variables() == std::vector<std::string>{"x"});
    CHECK_THROWS(parse_formula("or(x"));
    CHECK_THROWS(parse_formula(""));
    Formula g = substitute(f, {{"x", Formula::var("y")}});
    CHECK(g.str() == "or(neg(y),or(0,1))");
}

TEST_CASE("matrices built from tame models represent them") {
    for (const char* name : {"B2", "K3", "B4", "MO2"}) {
        Lattice l = as_lattice(catalog_get(name).poset);
        RefMatrix m = build_refmat(l);
        CHECK_MESSAGE(check_matrix_axioms(m).empty(), name);
        auto r = representation_check(l);
        CHECK_MESSAGE(r.injective, name);
        CHECK_MESSAGE(r.orthoiso, name);
        JoinUniqueness ju = join_uniqueness(l);
        CHECK_MESSAGE(ju.ok, name, " join not unique at ", ju.a, ",", ju.b);
    }
}

TEST_CASE("the untame B8 entry has a comparable pair its matrix cannot see") {
    Lattice l = as_lattice(catalog_get("B8").poset);
    auto r = representation_check(l);
    CHECK(r.injective);
    CHECK(r.forward);
    CHECK_FALSE(r.converse);
    CHECK(l.leq(r.wx, r.wy));
    RefMatrix m = build_refmat(l);
    CHECK_FALSE(precsim(m, r.wx, r.wy));
}

TEST_CASE("prime filters of the four-element boolean lattice") {
    Lattice l = as_lattice(catalog_get("B4").poset);
    PrimeFilterIndex idx;
    build_refmat(l, &idx);
    // the whole lattice is distributive, so it is its own largest block
    bool has_full = false;
    for (Bits s : idx.sublattices) has_full |= s == l.base.full_set();
    CHECK(has_full);
    for (const auto& [pos, members] : idx.filters) {
        Bits amb = idx.sublattices[pos];
        CHECK((members & ~amb) == 0);
        CHECK(members != 0);
        CHECK(members != amb);  // proper
    }
}
