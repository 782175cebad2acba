#include "qops/poset.hpp"

#include <algorithm>

namespace qops {

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::NotAPartialOrder: return "NotAPartialOrder";
        case Axiom::NotAntitone: return "NotAntitone";
        case Axiom::NotInvolutive: return "NotInvolutive";
        case Axiom::BoundsMissing: return "BoundsMissing";
        case Axiom::NotALattice: return "NotALattice";
    }
    return "?";
}

ValidationError::ValidationError(Axiom a, int x_, int y_)
    : std::runtime_error(axiom_name(a) + " at (" + std::to_string(x_) + "," + std::to_string(y_) + ")"),
      axiom(a),
      x(x_),
      y(y_) {}

Bits Poset::downset(int x) const {
    Bits d = 0;
    for (int i = 0; i < n; ++i)
        if (leq(i, x)) d |= Bits{1} << i;
    return d;
}

bool Poset::covers(int x, int y) const {
    if (!lt(x, y)) return false;
    // strict interval (x, y) must be empty
    Bits between = up[x] & downset(y) & ~(Bits{1} << x) & ~(Bits{1} << y);
    return between == 0;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (covers(x, y)) out.emplace_back(x, y);
    return out;
}

std::optional<int> Poset::partial_join(int x, int y) const {
    Bits ub = up[x] & up[y];
    // the lub is the unique upper bound below all upper bounds
    for (Bits b = ub; b; b &= b - 1) {
        int z = lowest_bit(b);
        if ((up[z] & ub) == ub) return z;
    }
    return std::nullopt;
}

std::optional<int> Poset::partial_meet(int x, int y) const {
    Bits lb = downset(x) & downset(y);
    for (Bits b = lb; b; b &= b - 1) {
        int z = lowest_bit(b);
        if ((downset(z) & lb) == lb) return z;
    }
    return std::nullopt;
}

int Poset::height(int x) const {
    std::vector<int> h(n, -1);
    // process in any linear extension order; iterate until stable (n is tiny)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            int best = 0;
            for (int u = 0; u < n; ++u)
                if (lt(u, v) && h[u] >= 0) best = std::max(best, h[u] + 1);
            if (best != h[v]) h[v] = best, changed = true;
        }
    }
    return h[x];
}

const std::string& Poset::label(int x) const {
    static const std::string empty;
    if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty()) return labels[x];
    return empty;
}

std::optional<ValidationError> Poset::check(int n, const std::vector<Bits>& m,
                                            const std::vector<int>& inv) {
    auto leq = [&](int x, int y) { return has_bit(m[x], y); };
    for (int x = 0; x < n; ++x)
        if (!leq(x, x)) return ValidationError(Axiom::NotAPartialOrder, x, x);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && leq(x, y) && leq(y, x))
                return ValidationError(Axiom::NotAPartialOrder, x, y);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (leq(x, y) && (m[y] & ~m[x]) != 0) {
                int z = lowest_bit(m[y] & ~m[x]);
                (void)z;
                return ValidationError(Axiom::NotAPartialOrder, x, y);
            }
    // bounds: a least and a greatest element must exist
    int bot = -1, top = -1;
    Bits all = n == 64 ? ~Bits{0} : (Bits{1} << n) - 1;
    for (int x = 0; x < n; ++x) {
        if (m[x] == all) bot = x;
        Bits dn = 0;
        for (int i = 0; i < n; ++i)
            if (leq(i, x)) dn |= Bits{1} << i;
        if (dn == all) top = x;
    }
    if (bot < 0 || top < 0) return ValidationError(Axiom::BoundsMissing, bot, top);
    for (int x = 0; x < n; ++x) {
        if (inv[x] < 0 || inv[x] >= n) return ValidationError(Axiom::NotInvolutive, x, inv[x]);
        if (inv[inv[x]] != x) return ValidationError(Axiom::NotInvolutive, x, inv[x]);
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (leq(x, y) && !leq(inv[y], inv[x])) return ValidationError(Axiom::NotAntitone, x, y);
    if (n > 1 && inv[bot] != top) return ValidationError(Axiom::BoundsMissing, bot, top);
    return std::nullopt;
}

Poset Poset::validate(int n, const std::vector<Bits>& m, const std::vector<int>& inv,
                      std::vector<std::string> labels) {
    if (n < 1 || n > 64) throw BudgetExceeded("carrier size must be between 1 and 64");
    if (auto err = check(n, m, inv)) throw *err;
    Poset p;
    p.n = n;
    p.up = m;
    p.inv = inv;
    p.labels = std::move(labels);
    Bits all = p.full_set();
    for (int x = 0; x < n; ++x) {
        if (p.up[x] == all) p.bottom = x;
        if (p.downset(x) == all) p.top = x;
    }
    return p;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                         const std::vector<int>& inv, std::vector<std::string> labels) {
    if (n < 1 || n > 64) throw BudgetExceeded("carrier size must be between 1 and 64");
    std::vector<Bits> m(n);
    for (int i = 0; i < n; ++i) m[i] = Bits{1} << i;
    for (auto [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError(Axiom::NotAPartialOrder, a, b);
        m[a] |= Bits{1} << b;
    }
    // transitive closure (Warshall over bitmask rows)
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (has_bit(m[i], k)) m[i] |= m[k];
    return validate(n, m, inv, std::move(labels));
}

std::optional<Lattice> try_lattice(const Poset& p, LatticeFailure* why) {
    Lattice l;
    l.base = p;
    int n = p.n;
    l.meet_tab.assign(n * n, 0);
    l.join_tab.assign(n * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            auto j = p.partial_join(x, y);
            if (!j) {
                if (why) *why = {x, y, false};
                return std::nullopt;
            }
            auto m = p.partial_meet(x, y);
            if (!m) {
                if (why) *why = {x, y, true};
                return std::nullopt;
            }
            l.join_tab[x * n + y] = l.join_tab[y * n + x] = static_cast<std::int8_t>(*j);
            l.meet_tab[x * n + y] = l.meet_tab[y * n + x] = static_cast<std::int8_t>(*m);
        }
    return l;
}

Lattice as_lattice(const Poset& p) {
    LatticeFailure why{};
    auto l = try_lattice(p, &why);
    if (!l) throw ValidationError(Axiom::NotALattice, why.x, why.y);
    return *l;
}

}  // namespace qops
