#include "qops/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qops {

namespace {

std::string describe(const char* prop, int index) {
    return std::string(prop) + " violated at sample " + std::to_string(index);
}

}  // namespace

std::string spectral_verify_one(int d, std::uint64_t seed, int index) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(index));
    SpectralEffect a = random_effect(d, rng);
    SpectralEffect b = random_effect(d, rng);
    SpectralEffect c = random_effect(d, rng);
    const SpectralEffect zero = SpectralEffect::zero_effect(d);
    const SpectralEffect one = SpectralEffect::identity_effect(d);

    if (!a.valid() || !b.valid() || !c.valid()) return describe("generator validity", index);

    // lattice axioms
    if (spectral_join(a, b) != spectral_join(b, a)) return describe("join commutativity", index);
    if (spectral_meet(a, b) != spectral_meet(b, a)) return describe("meet commutativity", index);
    if (spectral_join(a, spectral_join(b, c)) != spectral_join(spectral_join(a, b), c))
        return describe("join associativity", index);
    if (spectral_meet(a, spectral_meet(b, c)) != spectral_meet(spectral_meet(a, b), c))
        return describe("meet associativity", index);
    if (spectral_join(a, spectral_meet(a, b)) != canonical(a))
        return describe("absorption", index);
    if (spectral_meet(a, spectral_join(a, b)) != canonical(a))
        return describe("absorption", index);
    if (spectral_join(a, zero) != canonical(a) || spectral_meet(a, one) != canonical(a))
        return describe("bounds", index);

    // involution
    if (spectral_neg(spectral_neg(a)) != canonical(a))
        return describe("double complement", index);
    if (spectral_neg(spectral_join(a, b)) != spectral_meet(spectral_neg(a), spectral_neg(b)))
        return describe("De Morgan", index);
    if (spectral_leq(a, b) != spectral_leq(spectral_neg(b), spectral_neg(a)))
        return describe("antitonicity", index);

    // pseudo-Kleene condition
    if (!spectral_leq(spectral_meet(a, spectral_neg(a)), spectral_join(b, spectral_neg(b))))
        return describe("Kleene condition", index);

    // strong pasting quasi-equation on the comparable pair a&b <= b
    {
        SpectralEffect x = spectral_meet(a, b);
        SpectralEffect nx = spectral_neg(x);
        if (spectral_meet(b, spectral_join(x, nx)) != spectral_join(x, spectral_meet(nx, b)))
            return describe("strong pasting", index);
    }

    // modular law on x <= b
    {
        SpectralEffect x = spectral_meet(a, b);
        if (spectral_join(x, spectral_meet(c, b)) !=
            spectral_meet(spectral_join(x, c), b))
            return describe("modular law", index);
    }

    // projections close under the operations and match the subspace calculus
    {
        SpectralEffect p = random_projection_effect(d, rng);
        SpectralEffect q = random_projection_effect(d, rng);
        RationalSubspace rp = p.left_limit(Rat(1)).orthocomplement();
        RationalSubspace rq = q.left_limit(Rat(1)).orthocomplement();
        if (spectral_join(p, q) != SpectralEffect::projection(rp.sum(rq)))
            return describe("projection join", index);
        if (spectral_meet(p, q) != SpectralEffect::projection(rp.intersect(rq)))
            return describe("projection meet", index);
        if (spectral_neg(p) != SpectralEffect::projection(rp.orthocomplement()))
            return describe("projection complement", index);
        if (!spectral_sharp(p)) return describe("projection sharpness", index);
        if (spectral_leq(p, q) != rq.contains(rp)) return describe("projection order", index);
    }

    // sharp iff all thresholds lie in {0,1}
    if (spectral_sharp(a) != canonical(a).is_projection())
        return describe("sharpness criterion", index);

    // operator-order comparison against the spectral order. The spectral
    // order is the stronger one: A <=s B implies B-A positive semidefinite,
    // and on a spectrally comparable pair the reverse operator comparison
    // forces spectral comparison the same way (it collapses the pair).
    if (spectral_leq(a, b) && !canonical_leq(a, b))
        return describe("spectral order within operator order", index);
    {
        SpectralEffect x = spectral_meet(a, b);  // x <=s b by construction
        if (canonical_leq(b, x) && !spectral_leq(b, x))
            return describe("operator order within spectral order on a comparable pair",
                            index);
    }

    // serialization round-trip
    if (parse_effect(emit_effect(canonical(a))) != canonical(a))
        return describe("round-trip", index);

    return "";
}

SpectralVerifyResult spectral_verify(int samples, int d, std::uint64_t seed, bool parallel) {
    SpectralVerifyResult res;
    res.samples = samples;
    std::vector<std::string> fails(samples);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < samples; ++i) fails[i] = spectral_verify_one(d, seed, i);
    } else
#endif
    {
        for (int i = 0; i < samples; ++i) fails[i] = spectral_verify_one(d, seed, i);
    }
    for (int i = 0; i < samples; ++i)
        if (!fails[i].empty()) {
            ++res.violations;
            if (res.first_failure.empty()) res.first_failure = fails[i];
        }
    return res;
}

}  // namespace qops
