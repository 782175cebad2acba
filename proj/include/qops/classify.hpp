#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qops/poset.hpp"

// Class membership predicates. Each check is an exhaustive scan over the
// (small) carrier; when a predicate fails, the lexicographically first
// witnessing tuple is reported.

namespace qops {

struct Check {
    bool ok = true;
    std::array<int, 3> witness{-1, -1, -1};  // unused slots stay -1
    explicit operator bool() const { return ok; }
};

inline Check pass() { return {}; }
inline Check fail(int x, int y = -1, int z = -1) { return {false, {x, y, z}}; }

// --- poset-level predicates -------------------------------------------------

// Kleene condition x&x' <= y|y' (where both sides exist) plus the existence of
// all orthogonal joins: x <= y' implies x|y exists.
Check is_uop(const Poset& p);
// UOP whose involution is a complement: x and x' have meet 0 and join 1.
Check is_op(const Poset& p);
// x <= y and x'&y = 0 (meet defined and equal to bottom) imply x = y.
Check is_paraorthomodular(const Poset& p);
// orthoposet satisfying y = x | (y & x') for x <= y, with partial operations
Check is_orthomodular_poset(const Poset& p);

// --- lattice-level predicates -----------------------------------------------

Check is_distributive(const Lattice& l);
Check is_modular(const Lattice& l);
Check is_ortholattice(const Lattice& l);       // x&x'=0, x|x'=1
Check is_pseudo_kleene(const Lattice& l);      // Kleene condition, total ops
Check is_kleene(const Lattice& l);             // distributive pseudo-Kleene
Check is_modular_pkl(const Lattice& l);        // modular pseudo-Kleene
Check is_orthomodular_lattice(const Lattice& l);
Check is_boolean(const Lattice& l);

// First pasting condition: on x <= y, x'&y = (x&x')|(y&y') forces
// y&(x|x') = x|(y&y').
Check is_sp1(const Lattice& l);
// Second pasting condition: on x <= y, (x&x')|(y&y') = (x'&y)&(x'&y)'.
Check is_sp2(const Lattice& l);
Check is_spo(const Lattice& l);  // both
// Quasi-equational form: x <= y implies y&(x|x') = x|(x'&y).
Check is_sp(const Lattice& l);
// Equational form: (x|y)&(x|x') = x|((x|y)&x').
Check is_sp_equational(const Lattice& l);
// Alternate identity: x|((x|y)&(x|y)') = (x|y)&(x|(x|y)').
Check is_sp_equational_alt(const Lattice& l);

// x <= y' and x'&y' <= x&y imply x = y'.
Check satisfies_quasi_at(const Lattice& l);
// x&x'=0 and y&y'=0 imply (x&y)&(x&y)'=0.
Check satisfies_quasi_A(const Lattice& l);
// x not<= y implies x <= y|y' or y' <= x|y.
Check residuation_condition(const Lattice& l);
// On x <= y: y&(y'|(x&x')) = (y&y')|(x&x').
Check bound_absorption_identity(const Lattice& l);

// --- sharp elements ---------------------------------------------------------

bool is_sharp(const Lattice& l, int x);
std::vector<int> sharp_elements(const Lattice& l);
// Restriction of order and involution to the sharp elements.
Poset sh_poset(const Lattice& l);

// --- aggregate --------------------------------------------------------------

struct ClassReport {
    bool lattice = false;
    bool uop = false, op = false;
    bool pkl = false, kleene = false, mpkl = false;
    bool ortholattice = false, oml = false, boolean_algebra = false;
    bool omp = false;
    bool paraorthomodular = false, pom = false;  // pom = paraorthomodular PKL
    bool sp1 = false, sp2 = false, spo = false, sp = false;
    bool distributive = false, modular = false;
    std::string summary() const;
};

ClassReport classify(const Poset& p);

// Lazy single-flag lookup by class name (pkl, pom, spo, oml, kl, mpkl, uop,
// op, omp, ol, ba, sp1, sp2, sp, dist, mod, para). Unknown names throw.
Check check_class(const Poset& p, const std::string& cls);
std::vector<std::string> known_classes();

}  // namespace qops
