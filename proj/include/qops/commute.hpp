#pragma once

#include <vector>

#include "qops/poset.hpp"

// Commutation of element pairs, its equivalent formulations in modular
// pseudo-Kleene lattices, and the distributivity criteria attached to it.

namespace qops {

// Orthomodular-style commuting: x = (x&y) | (x&y'), with the partial
// operations of a poset (false when a needed meet/join is missing).
bool commutes_omp(const Poset& p, int x, int y);

struct CommutationReport {
    bool c1 = false;  // x&(y|y') = (x&y)|(x&y')
    bool c2 = false;  // y&(x|x') = (y&x)|(y&x')
    bool c3 = false;  // x&x' = ((x&x')&y)|((x&x')&y')
    bool commutes() const { return c1 && c2 && c3; }
};
CommutationReport commutation(const Lattice& l, int x, int y);

// Lattice subuniverse generated by a set under meet/join only.
Bits sublattice_closure(const Lattice& l, Bits seed);
// Subuniverse generated under meet/join/'.
Bits generated_subuniverse(const Lattice& l, Bits seed);

// In a modular pseudo-Kleene lattice: xCy iff Sg(x,y) (with ') is
// distributive. Returns the first pair breaking the biconditional.
struct PairCheck {
    bool ok = true;
    int x = -1, y = -1;
};
PairCheck commute_iff_sg_distributive(const Lattice& l);

// The equivalence pack for modular pseudo-Kleene lattices: xCy iff yCx iff
// xCy' iff x'Cy iff (xCy plus the bound-element splitting identity), plus the
// derived absorption x|(x'&y') = (x|x')&(x|y') whenever xCy.
PairCheck commutation_equivalences(const Lattice& l);

// Distributivity of the sublattice generated by pairwise commuting elements;
// false reports are legitimate (the transfer fails in general).
bool generated_distributive(const Lattice& l, const std::vector<int>& gens);

// In an sp-orthomodular lattice, meets of sharp pairs computed inside the
// sharp subposet agree with meets in the full lattice whenever the pair
// commutes there; and Sg(x,y) is distributive iff the pair commutes in Sh.
PairCheck sharp_commutation(const Lattice& l);

// Sufficient distributivity criterion: a lattice is distributive iff none of
// its {0,1}-sublattices generated by 3 elements is a diamond or pentagon.
// Used as an independent cross-check.
bool distributive_by_forbidden_sublattice(const Lattice& l);

}  // namespace qops
