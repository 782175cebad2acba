#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qops/poset.hpp"

// Subuniverses, distributive blocks, congruences and quotients, and the
// forbidden-configuration search.

namespace qops {

// Least subuniverse (closed under meet, join, ', and containing bounds)
// containing the seed.
Bits subuniverse_closure(const Lattice& l, Bits seed);

// All subuniverses. Seeds every subset when n <= seed_cap_log2 bits allow,
// otherwise throws BudgetExceeded.
std::vector<Bits> all_subuniverses(const Lattice& l, int max_seed_bits = 20);

bool subset_distributive(const Lattice& l, Bits members);

// Maximal distributive subuniverses. Every element lies in at least one.
std::vector<Bits> kleene_blocks(const Lattice& l);

// Every comparable pair lies inside a common block.
struct TameReport {
    bool tame = true;
    int x = -1, y = -1;  // uncovered comparable pair when not tame
};
TameReport is_tame(const Lattice& l);

// --- congruences ------------------------------------------------------------

struct Congruence {
    std::vector<int> cls;  // element -> class id (ids dense, 0-based)
    int num_classes = 0;
    bool operator==(const Congruence&) const = default;
};

Congruence identity_congruence(int n);
Congruence principal_congruence(const Lattice& l, int a, int b);
Congruence congruence_join(const Lattice& l, const Congruence& a, const Congruence& b);
std::vector<Congruence> congruences(const Lattice& l);
bool is_congruence(const Lattice& l, const Congruence& th);

// Congruence from explicit classes (unlisted elements become singletons).
Congruence congruence_from_classes(int n, const std::vector<std::vector<int>>& classes);

// Induced structure on classes. Asserts well-definedness.
Lattice quotient(const Lattice& l, const Congruence& th);

// --- isomorphism ------------------------------------------------------------

// Bijection preserving order both ways and the involution.
std::optional<std::vector<int>> find_orthoisomorphism(const Poset& a, const Poset& b);

// Restriction of l to a subuniverse, with the index map recorded.
struct SubStructure {
    Lattice lat;
    std::vector<int> elems;  // position -> parent element
};
SubStructure restrict_to(const Lattice& l, Bits members);

// --- forbidden configurations -----------------------------------------------

enum class ForbiddenKind { None, B6, B8, QuotB8star, QuotB10 };

struct ForbiddenWitness {
    ForbiddenKind kind = ForbiddenKind::None;
    Bits subuniverse = 0;
    Congruence theta;           // identity for direct embeddings
    std::vector<int> mapping;   // sub(-quotient) element -> pattern element
};

// Searches for a subalgebra isomorphic to B6 or B8, then for a subalgebra
// with a quotient isomorphic to B8* or B10. none iff the lattice lies in the
// strongly pasted class.
ForbiddenWitness forbidden_configuration(const Lattice& l, int max_seed_bits = 20);

std::string forbidden_kind_name(ForbiddenKind k);

}  // namespace qops
