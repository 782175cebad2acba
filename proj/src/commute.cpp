#include "qops/commute.hpp"

#include "qops/classify.hpp"
#include "qops/subalg.hpp"

namespace qops {

bool commutes_omp(const Poset& p, int x, int y) {
    auto m1 = p.partial_meet(x, y);
    auto m2 = p.partial_meet(x, p.inv[y]);
    if (!m1 || !m2) return false;
    auto j = p.partial_join(*m1, *m2);
    return j && *j == x;
}

CommutationReport commutation(const Lattice& l, int x, int y) {
    CommutationReport r;
    int xp = l.inv(x), yp = l.inv(y);
    r.c1 = l.meet(x, l.join(y, yp)) == l.join(l.meet(x, y), l.meet(x, yp));
    r.c2 = l.meet(y, l.join(x, xp)) == l.join(l.meet(y, x), l.meet(y, xp));
    int b = l.meet(x, xp);
    r.c3 = b == l.join(l.meet(b, y), l.meet(b, yp));
    return r;
}

Bits sublattice_closure(const Lattice& l, Bits seed) {
    Bits s = seed;
    for (;;) {
        Bits grown = s;
        for (Bits b = s; b; b &= b - 1) {
            int x = lowest_bit(b);
            for (Bits b2 = s; b2; b2 &= b2 - 1) {
                int y = lowest_bit(b2);
                grown |= Bits{1} << l.meet(x, y);
                grown |= Bits{1} << l.join(x, y);
            }
        }
        if (grown == s) return s;
        s = grown;
    }
}

Bits generated_subuniverse(const Lattice& l, Bits seed) {
    return subuniverse_closure(l, seed);
}

PairCheck commute_iff_sg_distributive(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool c = commutation(l, x, y).commutes();
            Bits sg = generated_subuniverse(l, (Bits{1} << x) | (Bits{1} << y));
            if (c != subset_distributive(l, sg)) return {false, x, y};
        }
    return {};
}

PairCheck commutation_equivalences(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xp = l.inv(x), yp = l.inv(y);
            bool c = commutation(l, x, y).commutes();
            if (c != commutation(l, y, x).commutes()) return {false, x, y};
            if (c != commutation(l, x, yp).commutes()) return {false, x, y};
            if (c != commutation(l, xp, y).commutes()) return {false, x, y};
            int g = l.meet(l.join(x, xp), l.join(y, yp));
            bool split = g == l.join(l.meet(l.join(x, xp), y), l.meet(l.join(x, xp), yp));
            if (c != (c && split)) return {false, x, y};
            if (c && l.join(x, l.meet(xp, yp)) != l.meet(l.join(x, xp), l.join(x, yp)))
                return {false, x, y};
        }
    return {};
}

bool generated_distributive(const Lattice& l, const std::vector<int>& gens) {
    Bits seed = 0;
    for (int g : gens) seed |= Bits{1} << g;
    return subset_distributive(l, sublattice_closure(l, seed));
}

PairCheck sharp_commutation(const Lattice& l) {
    Poset sh = sh_poset(l);
    auto sharp = sharp_elements(l);
    int m = sh.n;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            bool c = commutes_omp(sh, i, j);
            if (c) {
                auto shm = sh.partial_meet(i, j);
                if (!shm || sharp[*shm] != l.meet(sharp[i], sharp[j])) return {false, i, j};
            }
            Bits sg = generated_subuniverse(
                l, (Bits{1} << sharp[i]) | (Bits{1} << sharp[j]));
            if (c != subset_distributive(l, sg)) return {false, i, j};
        }
    return {};
}

bool distributive_by_forbidden_sublattice(const Lattice& l) {
    int n = l.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!l.base.incomparable(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                // diamond: three pairwise-incomparable elements with common
                // meet and join
                if (c > b && l.base.incomparable(a, c) && l.base.incomparable(b, c)) {
                    int o = l.meet(a, b), i = l.join(a, b);
                    if (l.meet(a, c) == o && l.meet(b, c) == o && l.join(a, c) == i &&
                        l.join(b, c) == i)
                        return false;
                }
                // pentagon: a < c both incomparable with b, same meet and join
                // (and the mirror image with the roles of a and b swapped)
                if (l.base.lt(a, c) && l.base.incomparable(b, c)) {
                    if (l.meet(a, b) == l.meet(c, b) && l.join(a, b) == l.join(c, b))
                        return false;
                }
                if (l.base.lt(b, c) && l.base.incomparable(a, c)) {
                    if (l.meet(b, a) == l.meet(c, a) && l.join(b, a) == l.join(c, a))
                        return false;
                }
            }
        }
    return true;
}

}  // namespace qops
