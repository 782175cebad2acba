#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qops/poset.hpp"

// Partial propositions over prime-filter indices, the three-valued matrices
// they form, and the induced consequence relations.

namespace qops {

// Truth values of the three-element chain; -1 marks "index outside domain".
using TruthVal = std::int8_t;
constexpr TruthVal kOutside = -1, kFalse = 0, kHalf = 1, kTrue = 2;

struct RefProp {
    std::vector<TruthVal> vals;  // one slot per index
    bool operator==(const RefProp&) const = default;
    bool in_domain(int i) const { return vals[i] >= 0; }
};

struct RefMatrix {
    int num_indices = 0;
    std::vector<RefProp> carrier;
    std::vector<int> neg;                // carrier permutation
    std::vector<std::vector<int>> join;  // -1 = undefined; p C q iff defined
    std::vector<std::vector<int>> designated;  // per index: carrier ids, sorted
    int zero_id = -1, one_id = -1;

    // set for matrices built from a lattice
    std::vector<int> from_element;

    bool commeasurable(int p, int q) const { return join[p][q] >= 0; }
};

// Domains intersect and the first value is pointwise below the second there.
bool precsim(const RefMatrix& m, int p, int q);

// Prime filters of the distributive subuniverses, indexed per subuniverse.
struct PrimeFilterIndex {
    std::vector<Bits> sublattices;
    // (sublattice position, member set); identical member sets under
    // different ambient sublattices count as distinct indices
    std::vector<std::pair<int, Bits>> filters;
};
PrimeFilterIndex prime_filters(const Lattice& l);

RefMatrix build_refmat(const Lattice& l, PrimeFilterIndex* out_index = nullptr);

// The five-element two-index matrix with an undefined join across indices
// (the standard witness that plain entailment is not substitution-invariant).
RefMatrix example_matrix();

// Checks clauses of the matrix definition: commeasurability shape, negation
// closure, join agreement on domain overlaps, and that every commeasurable
// pair generates a Kleene sublattice. Returns a failure description or empty
// string.
std::string check_matrix_axioms(const RefMatrix& m);

// Uniqueness of joins on built matrices: among elements sharing a
// distributive subuniverse with both arguments, only the lattice join
// represents the pointwise join of the two propositions.
struct JoinUniqueness {
    bool ok = true;
    int a = -1, b = -1, c = -1;
};
JoinUniqueness join_uniqueness(const Lattice& l);

struct RepresentationReport {
    bool injective = true;
    bool forward = true;           // precsim implies <=
    bool converse = true;          // <= implies precsim (expected iff tame)
    bool orthoiso = true;          // a -> prop is an order- and neg-isomorphism
    int wx = -1, wy = -1;          // witness pair for the first failure
};
RepresentationReport representation_check(const Lattice& l);

// --- formulas ---------------------------------------------------------------

struct Formula {
    enum Kind { Var, Zero, One, Or, Neg } kind = Zero;
    std::string name;  // Var only
    std::vector<Formula> kids;

    static Formula var(std::string n) { return {Var, std::move(n), {}}; }
    static Formula zero() { return {Zero, "", {}}; }
    static Formula one() { return {One, "", {}}; }
    static Formula neg(Formula f);
    static Formula lor(Formula f, Formula g);

    std::vector<std::string> variables() const;
    std::string str() const;
};

// Grammar: or(f,g) | neg(f) | 0 | 1 | identifier
Formula parse_formula(const std::string& text);

Formula substitute(const Formula& f, const std::map<std::string, Formula>& sigma);

// Unique partial-homomorphism extension of the assignment; nullopt when the
// formula falls outside the domain.
std::optional<int> extend_partial_hom(const RefMatrix& m,
                                      const std::map<std::string, int>& assignment,
                                      const Formula& f);

// Quantifies over every total variable assignment and every index.
bool entails(const RefMatrix& m, const std::vector<Formula>& gamma, const Formula& phi);
// entails plus the variable-inclusion proviso (substitution-invariant).
bool entails_structural(const RefMatrix& m, const std::vector<Formula>& gamma,
                        const Formula& phi);

}  // namespace qops
