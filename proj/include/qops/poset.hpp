#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finite bounded posets with antitone involution, the carrier type for
// everything in this library. Elements are dense indices 0..n-1; the order is
// stored as a full reachability matrix (one bitmask row per element), so
// comparability tests are O(1) and interval/cover extraction are cheap bit
// operations. Carriers are capped at 64 elements.

namespace qops {

using Bits = std::uint64_t;

inline int popcount(Bits b) { return __builtin_popcountll(b); }
inline int lowest_bit(Bits b) { return __builtin_ctzll(b); }
inline bool has_bit(Bits b, int i) { return (b >> i) & 1u; }

enum class Axiom {
    NotAPartialOrder,
    NotAntitone,
    NotInvolutive,
    BoundsMissing,
    NotALattice,
};

std::string axiom_name(Axiom a);

// First violated axiom, with the witnessing pair.
struct ValidationError : std::runtime_error {
    Axiom axiom;
    int x, y;
    ValidationError(Axiom a, int x_, int y_);
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class Poset {
public:
    int n = 0;
    std::vector<Bits> up;   // up[i] has bit j set iff i <= j
    std::vector<int> inv;   // the antitone involution '
    int bottom = 0;
    int top = 0;
    std::vector<std::string> labels;  // optional, presentation only

    bool leq(int x, int y) const { return has_bit(up[x], y); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    bool incomparable(int x, int y) const { return !leq(x, y) && !leq(y, x); }

    Bits upset(int x) const { return up[x]; }
    Bits downset(int x) const;
    Bits full_set() const { return n == 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

    // x covered by y (y is an upper cover of x)
    bool covers(int x, int y) const;
    std::vector<std::pair<int, int>> cover_pairs() const;

    // l.u.b. / g.l.b. when they exist (partial operations of the UOP signature)
    std::optional<int> partial_join(int x, int y) const;
    std::optional<int> partial_meet(int x, int y) const;

    int height(int x) const;  // longest chain below x

    const std::string& label(int x) const;

    // Validates the axioms of a bounded poset with antitone involution.
    // Throws ValidationError on the first violation.
    static Poset validate(int n, const std::vector<Bits>& leq_matrix, const std::vector<int>& inv,
                          std::vector<std::string> labels = {});

    static std::optional<ValidationError> check(int n, const std::vector<Bits>& leq_matrix,
                                                const std::vector<int>& inv);

    // Builds the reachability matrix from a cover list, then validates.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                             const std::vector<int>& inv, std::vector<std::string> labels = {});
};

// Lattice-ordered poset with total meet/join tables.
class Lattice {
public:
    Poset base;
    std::vector<std::int8_t> meet_tab, join_tab;  // n*n tables

    int n() const { return base.n; }
    int meet(int x, int y) const { return meet_tab[x * base.n + y]; }
    int join(int x, int y) const { return join_tab[x * base.n + y]; }
    int inv(int x) const { return base.inv[x]; }
    bool leq(int x, int y) const { return base.leq(x, y); }
    int bottom() const { return base.bottom; }
    int top() const { return base.top; }
    const std::string& label(int x) const { return base.label(x); }
};

// Fills meet/join tables iff every pair has a glb and lub; otherwise reports a
// pair lacking one.
struct LatticeFailure {
    int x, y;
    bool missing_meet;  // otherwise missing join
};

std::optional<Lattice> try_lattice(const Poset& p, LatticeFailure* why = nullptr);

// Throwing convenience wrapper.
Lattice as_lattice(const Poset& p);

}  // namespace qops
