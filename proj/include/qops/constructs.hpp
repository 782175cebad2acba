#pragma once

#include <vector>

#include "qops/classify.hpp"
#include "qops/poset.hpp"

// Constructions: ordinal sums, direct products, the doubling of an
// orthomodular lattice into interval pairs, interval localizers, and the two
// Sasaki-style operation pairs (total and piecewise residuated).

namespace qops {

// Fresh bottom and top glued below/under the whole structure; the new bounds
// are swapped by the extended involution.
Lattice ordinal_sum(const Lattice& l);

// Componentwise order, operations and involution on pairs; element (i,j) gets
// index i*|b|+j. Throws BudgetExceeded past 64 elements.
Lattice direct_product(const Lattice& a, const Lattice& b);

// Pairs (x,y) with x <= y ordered componentwise; (x,y)' = (y',x'). Requires an
// orthomodular input (std::invalid_argument otherwise); the result satisfies
// the strong pasting quasi-equation.
Lattice moisil_interval(const Lattice& l);

// The interval [ (x&x')|(y&y'), (x|x')&(y|y') ], closed under the inherited
// involution because the endpoints are each other's images.
struct Localizer {
    int lo, hi;
    std::vector<int> members;  // parent indices, ascending
    Lattice lat;               // restriction, standalone structure
};
Localizer localizer(const Lattice& l, int x, int y);

// (y & (x|x')) | (x&x'): projection of y into the localizer of x alone.
int localize(const Lattice& l, int x, int y);

// A groupoid with a candidate adjoint pair on the carrier of l.
struct ResidualGroupoid {
    int n = 0;
    std::vector<std::int8_t> times, arrow;  // n*n tables
    int mul(int x, int y) const { return times[x * n + y]; }
    int imp(int x, int y) const { return arrow[x * n + y]; }
};

// Total Sasaki pair: x*y = y&(x|y'), x->y = x'|(x&y).
ResidualGroupoid sasaki_total(const Lattice& l);

// Piecewise pair: x*y = 0 when x <= y', else y&(x|y');
//                 x->y = 1 when x <= y, else x'|(x&y).
ResidualGroupoid sasaki_piecewise(const Lattice& l);

// Left residuation: x*y <= z iff x <= y->z, with 1 a left unit for ->-side
// and x*1 = x. Witness = first failing triple.
struct ResiduationCheck {
    bool ok = true;
    int x = -1, y = -1, z = -1;
};
ResiduationCheck is_left_residuated(const Lattice& l, const ResidualGroupoid& g);

// For pseudo-Kleene lattices this is equivalent to the second pasting
// condition: on every comparable pair, the two projections into the localizer
// are sharp relative to it, and the relatively sharp elements of the
// localizer close under orthogonal joins.
Check localizer_sharpness_condition(const Lattice& l);

}  // namespace qops
