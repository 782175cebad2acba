#include <doctest.h>

#include <random>

#include "qops/spectral.hpp"
#include "qops/verify.hpp"

using namespace qops;

namespace {

RationalSubspace sp(int d, RatMat rows) { return RationalSubspace::span(d, std::move(rows)); }

}  // namespace

TEST_CASE("rational subspace algebra") {
    RationalSubspace diag = sp(2, {{Rat(1), Rat(1)}});
    RationalSubspace e1 = sp(2, {{Rat(1), Rat(0)}});
    CHECK(diag.dim() == 1);
    CHECK(diag.sum(e1) == RationalSubspace::full(2));
    CHECK(diag.intersect(e1) == RationalSubspace::zero(2));
    CHECK(diag.orthocomplement() == sp(2, {{Rat(1), Rat(-1)}}));
    CHECK(diag.orthocomplement().orthocomplement() == diag);
    CHECK(diag.contains({Rat(3), Rat(3)}));
    CHECK_FALSE(diag.contains({Rat(3), Rat(2)}));

    // projector onto the diagonal is the constant-1/2 matrix
    RatMat p = diag.projector();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(p[i][j] == Rat(1, 2));
}

TEST_CASE("projection effects embed the subspace lattice") {
    RationalSubspace v = sp(3, {{Rat(1), Rat(0), Rat(0)}});
    RationalSubspace w = sp(3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}});
    SpectralEffect pv = SpectralEffect::projection(v);
    SpectralEffect pw = SpectralEffect::projection(w);
    CHECK(spectral_leq(pv, pw));
    CHECK_FALSE(spectral_leq(pw, pv));
    CHECK(spectral_join(pv, pw) == pw);
    CHECK(spectral_meet(pv, pw) == pv);
    CHECK(spectral_sharp(pv));
    CHECK(spectral_neg(pv) == SpectralEffect::projection(v.orthocomplement()));
}

TEST_CASE("operator order does not imply spectral order in general") {
    // A has eigenvalues 3/4 and 1/4 on the diagonals, B = diag(1, 5/8);
    // B - A is positive semidefinite but the spectral families are not nested.
    SpectralEffect a{2,
                     {{Rat(1, 4), sp(2, {{Rat(1), Rat(-1)}})},
                      {Rat(3, 4), RationalSubspace::full(2)}}};
    SpectralEffect b{2,
                     {{Rat(5, 8), sp(2, {{Rat(0), Rat(1)}})},
                      {Rat(1), RationalSubspace::full(2)}}};
    REQUIRE(a.valid());
    REQUIRE(b.valid());
    CHECK(canonical_leq(a, b));
    CHECK_FALSE(spectral_leq(a, b));
    // the reverse inclusion is the theorem: spectral order refines it
    CHECK_FALSE(spectral_leq(b, a));
}

TEST_CASE("operator matrices match hand computation") {
    SpectralEffect a{2,
                     {{Rat(1, 4), sp(2, {{Rat(1), Rat(-1)}})},
                      {Rat(3, 4), RationalSubspace::full(2)}}};
    RatMat m = a.to_operator();
    CHECK(m[0][0] == Rat(1, 2));
    CHECK(m[0][1] == Rat(1, 4));
    CHECK(m[1][0] == Rat(1, 4));
    CHECK(m[1][1] == Rat(1, 2));
}

TEST_CASE("meet join and negation on staircase effects") {
    SpectralEffect a{2,
                     {{Rat(1, 3), sp(2, {{Rat(1), Rat(0)}})},
                      {Rat(2, 3), RationalSubspace::full(2)}}};
    SpectralEffect zero = SpectralEffect::zero_effect(2);
    SpectralEffect one = SpectralEffect::identity_effect(2);
    CHECK(spectral_join(a, zero) == canonical(a));
    CHECK(spectral_meet(a, one) == canonical(a));
    CHECK(spectral_join(a, one) == one);
    CHECK(spectral_meet(a, zero) == zero);
    CHECK(spectral_neg(spectral_neg(a)) == canonical(a));
    CHECK(spectral_leq(zero, a));
    CHECK(spectral_leq(a, one));
}

TEST_CASE("serialization round-trips") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i)
        for (int d = 1; d <= 3; ++d) {
            SpectralEffect e = canonical(random_effect(d, rng));
            CHECK(parse_effect(emit_effect(e)) == e);
        }
}

TEST_CASE("parser rejects malformed effects") {
    // threshold outside [0,1]
    CHECK_THROWS(parse_effect("effect 2 1\n3/2 ; 2 1/1 0/1 0/1 1/1\n"));
    // last subspace not the full space
    CHECK_THROWS(parse_effect("effect 2 1\n1/2 ; 1 1/1 0/1\n"));
    CHECK_THROWS(parse_effect("effect 2 0\n"));
    CHECK_THROWS(parse_effect("nonsense"));
}

TEST_CASE("parallel and serial verification drivers agree") {
    SpectralVerifyResult s = spectral_verify(200, 3, 31, /*parallel=*/false);
    SpectralVerifyResult p = spectral_verify(200, 3, 31, /*parallel=*/true);
    CHECK(s.samples == p.samples);
    CHECK(s.violations == p.violations);
    CHECK(s.first_failure == p.first_failure);
    CHECK(s.violations == 0);
}
