#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Exact finite-dimensional model of effects under the spectral order.
// An effect is stored as its resolution of identity: a finite, strictly
// increasing list of jump points with strictly growing eigenspaces of the
// lower spectral projections, ending in the full space. All arithmetic is
// over the rationals.

namespace qops {

// Arbitrary-precision integers underneath: Gaussian elimination on d=3
// operator matrices overflows 64-bit intermediates.
using Rat = boost::rational<boost::multiprecision::cpp_int>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Subspace of Q^d in reduced row-echelon form; equality of subspaces is
// representation equality.
struct RationalSubspace {
    int d = 0;
    RatMat rows;  // RREF basis, possibly empty (zero subspace)

    int dim() const { return static_cast<int>(rows.size()); }
    bool operator==(const RationalSubspace&) const = default;

    static RationalSubspace zero(int d);
    static RationalSubspace full(int d);
    static RationalSubspace span(int d, RatMat vectors);

    bool contains(const RatVec& v) const;
    bool contains(const RationalSubspace& other) const;
    RationalSubspace sum(const RationalSubspace& other) const;
    RationalSubspace intersect(const RationalSubspace& other) const;
    RationalSubspace orthocomplement() const;  // w.r.t. the standard form
    RatMat projector() const;                  // d x d projection matrix
};

struct SpectralEffect {
    int d = 0;
    // (lambda_i, V_i): value of the spectral family on [lambda_i, lambda_{i+1});
    // below the first jump the family is the zero subspace.
    std::vector<std::pair<Rat, RationalSubspace>> jumps;

    bool operator==(const SpectralEffect&) const = default;

    RationalSubspace at(const Rat& lambda) const;
    RationalSubspace left_limit(const Rat& lambda) const;
    bool valid() const;

    static SpectralEffect zero_effect(int d);
    static SpectralEffect identity_effect(int d);
    // Projection with the given range.
    static SpectralEffect projection(const RationalSubspace& range);
    bool is_projection() const;

    RatMat to_operator() const;
};

// Canonical form: merges duplicate values and drops vacuous jumps.
SpectralEffect canonical(const SpectralEffect& e);

// Spectral order: a <= b iff b's family is pointwise below a's.
bool spectral_leq(const SpectralEffect& a, const SpectralEffect& b);
SpectralEffect spectral_join(const SpectralEffect& a, const SpectralEffect& b);
SpectralEffect spectral_meet(const SpectralEffect& a, const SpectralEffect& b);
SpectralEffect spectral_neg(const SpectralEffect& a);
bool spectral_sharp(const SpectralEffect& a);

// Loewner comparison of the operators (exact positive-semidefiniteness of the
// difference via principal minors; intended for d <= 3).
bool canonical_leq(const SpectralEffect& a, const SpectralEffect& b);

// Seeded random generation (deterministic across runs).
SpectralEffect random_effect(int d, std::mt19937_64& rng);
SpectralEffect random_projection_effect(int d, std::mt19937_64& rng);

std::string emit_effect(const SpectralEffect& e);
SpectralEffect parse_effect(const std::string& text);

}  // namespace qops
