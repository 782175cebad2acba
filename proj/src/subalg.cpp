#include "qops/subalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "qops/catalog.hpp"
#include "qops/classify.hpp"

namespace qops {

Bits subuniverse_closure(const Lattice& l, Bits seed) {
    Bits s = seed | (Bits{1} << l.bottom()) | (Bits{1} << l.top());
    for (;;) {
        Bits grown = s;
        for (Bits b = s; b; b &= b - 1) {
            int x = lowest_bit(b);
            grown |= Bits{1} << l.inv(x);
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

std::vector<Bits> all_subuniverses(const Lattice& l, int max_seed_bits) {
    const std::size_t cap = std::size_t{1} << max_seed_bits;
    std::set<Bits> seen;
    std::vector<Bits> queue{subuniverse_closure(l, 0)};
    seen.insert(queue[0]);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Bits s = queue[qi];
        for (int x = 0; x < l.n(); ++x) {
            if (has_bit(s, x)) continue;
            Bits t = subuniverse_closure(l, s | (Bits{1} << x));
            if (seen.insert(t).second) {
                if (seen.size() > cap) throw BudgetExceeded("subuniverse count exceeds cap");
                queue.push_back(t);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

bool subset_distributive(const Lattice& l, Bits members) {
    std::vector<int> e;
    for (Bits b = members; b; b &= b - 1) e.push_back(lowest_bit(b));
    for (int x : e)
        for (int y : e)
            for (int z : e)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
    return true;
}

std::vector<Bits> kleene_blocks(const Lattice& l) {
    std::vector<Bits> dist;
    for (Bits s : all_subuniverses(l))
        if (subset_distributive(l, s)) dist.push_back(s);
    std::vector<Bits> maximal;
    for (Bits s : dist) {
        bool strict_super = false;
        for (Bits t : dist)
            if (t != s && (s & t) == s) {
                strict_super = true;
                break;
            }
        if (!strict_super) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

TameReport is_tame(const Lattice& l) {
    auto blocks = kleene_blocks(l);
    for (int x = 0; x < l.n(); ++x)
        for (int y = 0; y < l.n(); ++y) {
            if (!l.leq(x, y)) continue;
            Bits pair = (Bits{1} << x) | (Bits{1} << y);
            bool covered = false;
            for (Bits b : blocks)
                if ((b & pair) == pair) {
                    covered = true;
                    break;
                }
            if (!covered) return {false, x, y};
        }
    return {};
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

Congruence normalize(UnionFind& uf, int n) {
    Congruence th;
    th.cls.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (th.cls[r] < 0) th.cls[r] = th.num_classes++;
        th.cls[i] = th.cls[r];
    }
    return th;
}

// Closes a partition under the operations: whenever x ~ y, also
// x' ~ y', x&z ~ y&z and x|z ~ y|z.
Congruence close_to_congruence(const Lattice& l, UnionFind uf) {
    int n = l.n();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (uf.find(x) != uf.find(y)) continue;
                if (uf.merge(l.inv(x), l.inv(y))) changed = true;
                for (int z = 0; z < n; ++z) {
                    if (uf.merge(l.meet(x, z), l.meet(y, z))) changed = true;
                    if (uf.merge(l.join(x, z), l.join(y, z))) changed = true;
                }
            }
    }
    return normalize(uf, n);
}

}  // namespace

Congruence identity_congruence(int n) {
    Congruence th;
    th.cls.resize(n);
    std::iota(th.cls.begin(), th.cls.end(), 0);
    th.num_classes = n;
    return th;
}

Congruence principal_congruence(const Lattice& l, int a, int b) {
    UnionFind uf(l.n());
    uf.merge(a, b);
    return close_to_congruence(l, std::move(uf));
}

Congruence congruence_join(const Lattice& l, const Congruence& a, const Congruence& b) {
    UnionFind uf(l.n());
    for (int x = 0; x < l.n(); ++x)
        for (int y = x + 1; y < l.n(); ++y)
            if (a.cls[x] == a.cls[y] || b.cls[x] == b.cls[y]) uf.merge(x, y);
    return close_to_congruence(l, std::move(uf));
}

bool is_congruence(const Lattice& l, const Congruence& th) {
    int n = l.n();
    if (static_cast<int>(th.cls.size()) != n) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (th.cls[x] != th.cls[y]) continue;
            if (th.cls[l.inv(x)] != th.cls[l.inv(y)]) return false;
            for (int z = 0; z < n; ++z) {
                if (th.cls[l.meet(x, z)] != th.cls[l.meet(y, z)]) return false;
                if (th.cls[l.join(x, z)] != th.cls[l.join(y, z)]) return false;
            }
        }
    return true;
}

std::vector<Congruence> congruences(const Lattice& l) {
    int n = l.n();
    std::set<std::vector<int>> seen;
    std::vector<Congruence> out;
    auto push = [&](const Congruence& th) {
        if (seen.insert(th.cls).second) out.push_back(th);
    };
    push(identity_congruence(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) push(principal_congruence(l, a, b));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) push(congruence_join(l, out[i], out[j]));
    return out;
}

Congruence congruence_from_classes(int n, const std::vector<std::vector<int>>& classes) {
    UnionFind uf(n);
    for (const auto& c : classes)
        for (std::size_t i = 1; i < c.size(); ++i) uf.merge(c[0], c[i]);
    return normalize(uf, n);
}

Lattice quotient(const Lattice& l, const Congruence& th) {
    assert(is_congruence(l, th));
    int m = th.num_classes;
    std::vector<int> rep(m, -1);
    for (int x = 0; x < l.n(); ++x)
        if (rep[th.cls[x]] < 0) rep[th.cls[x]] = x;
    std::vector<Bits> up(m, 0);
    std::vector<int> inv(m);
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        inv[i] = th.cls[l.inv(rep[i])];
        labels[i] = l.base.label(rep[i]);
        for (int j = 0; j < m; ++j)
            if (th.cls[l.meet(rep[i], rep[j])] == i) up[i] |= Bits{1} << j;
    }
    return as_lattice(Poset::validate(m, up, inv, labels));
}

std::optional<std::vector<int>> find_orthoisomorphism(const Poset& a, const Poset& b) {
    if (a.n != b.n) return std::nullopt;
    int n = a.n;
    // invariant per element: (height, |downset|, |upset|, fixed-point flag)
    auto sig = [](const Poset& p, int x) {
        return std::array<int, 4>{p.height(x), popcount(p.downset(x)), popcount(p.up[x]),
                                  p.inv[x] == x ? 1 : 0};
    };
    std::vector<std::array<int, 4>> sa(n), sb(n);
    for (int i = 0; i < n; ++i) sa[i] = sig(a, i), sb[i] = sig(b, i);
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return std::nullopt;
    }
    std::vector<int> f(n, -1), used(n, 0);
    auto consistent = [&](int x, int y) {
        if (sa[x] != sb[y]) return false;
        for (int z = 0; z < n; ++z) {
            if (f[z] < 0) continue;
            if (a.leq(x, z) != b.leq(y, f[z])) return false;
            if (a.leq(z, x) != b.leq(f[z], y)) return false;
        }
        if (f[a.inv[x]] >= 0 && f[a.inv[x]] != b.inv[y]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int x) -> bool {
        if (x == n) return true;
        if (f[x] >= 0) return self(self, x + 1);
        for (int y = 0; y < n; ++y) {
            if (used[y] || !consistent(x, y)) continue;
            int xi = a.inv[x], yi = b.inv[y];
            bool also_inv = f[xi] < 0 && xi != x;
            if (also_inv && (used[yi] || !consistent(xi, yi))) continue;
            f[x] = y, used[y] = 1;
            if (also_inv) f[xi] = yi, used[yi] = 1;
            if (self(self, x + 1)) return true;
            f[x] = -1, used[y] = 0;
            if (also_inv) f[xi] = -1, used[yi] = 0;
        }
        return false;
    };
    if (rec(rec, 0)) return f;
    return std::nullopt;
}

SubStructure restrict_to(const Lattice& l, Bits members) {
    SubStructure s;
    for (Bits b = members; b; b &= b - 1) s.elems.push_back(lowest_bit(b));
    int m = static_cast<int>(s.elems.size());
    std::vector<int> pos(l.n(), -1);
    for (int i = 0; i < m; ++i) pos[s.elems[i]] = i;
    std::vector<Bits> up(m, 0);
    std::vector<int> inv(m);
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        inv[i] = pos[l.inv(s.elems[i])];
        labels[i] = l.base.label(s.elems[i]);
        for (int j = 0; j < m; ++j)
            if (l.leq(s.elems[i], s.elems[j])) up[i] |= Bits{1} << j;
    }
    s.lat = as_lattice(Poset::validate(m, up, inv, labels));
    return s;
}

std::string forbidden_kind_name(ForbiddenKind k) {
    switch (k) {
        case ForbiddenKind::None: return "none";
        case ForbiddenKind::B6: return "B6";
        case ForbiddenKind::B8: return "B8";
        case ForbiddenKind::QuotB8star: return "QuotB8star";
        case ForbiddenKind::QuotB10: return "QuotB10";
    }
    return "?";
}

ForbiddenWitness forbidden_configuration(const Lattice& l, int max_seed_bits) {
    const Poset& b6 = catalog_get("B6").poset;
    const Poset& b8 = catalog_get("B8").poset;
    const Poset& b8s = catalog_get("B8star").poset;
    const Poset& b10 = catalog_get("B10").poset;

    auto subs = all_subuniverses(l, max_seed_bits);
    std::sort(subs.begin(), subs.end(),
              [](Bits a, Bits b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b)
                                                                     : a < b; });
    for (const Poset* pat : {&b6, &b8}) {
        for (Bits s : subs) {
            if (popcount(s) != pat->n) continue;
            auto sub = restrict_to(l, s);
            if (auto f = find_orthoisomorphism(sub.lat.base, *pat))
                return {pat == &b6 ? ForbiddenKind::B6 : ForbiddenKind::B8, s,
                        identity_congruence(pat->n), *f};
        }
    }
    for (Bits s : subs) {
        if (popcount(s) < b8s.n) continue;
        auto sub = restrict_to(l, s);
        for (const auto& th : congruences(sub.lat)) {
            if (th.num_classes != b8s.n && th.num_classes != b10.n) continue;
            Lattice q = quotient(sub.lat, th);
            const Poset& pat = th.num_classes == b8s.n ? b8s : b10;
            if (auto f = find_orthoisomorphism(q.base, pat))
                return {th.num_classes == b8s.n ? ForbiddenKind::QuotB8star
                                                : ForbiddenKind::QuotB10,
                        s, th, *f};
        }
    }
    return {};
}

}  // namespace qops
