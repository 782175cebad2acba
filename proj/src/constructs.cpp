#include "qops/constructs.hpp"

#include "qops/classify.hpp"

namespace qops {

Lattice ordinal_sum(const Lattice& l) {
    int n = l.n();
    if (n + 2 > 64) throw BudgetExceeded("ordinal sum exceeds 64 elements");
    int m = n + 2;  // 0 = new bottom, 1..n = old shifted, n+1 = new top
    std::vector<Bits> up(m, 0);
    std::vector<int> inv(m);
    std::vector<std::string> labels(m);
    Bits all = m == 64 ? ~Bits{0} : (Bits{1} << m) - 1;
    up[0] = all;
    up[m - 1] = Bits{1} << (m - 1);
    inv[0] = m - 1;
    inv[m - 1] = 0;
    labels[0] = "bot";
    labels[m - 1] = "top";
    for (int i = 0; i < n; ++i) {
        up[i + 1] = (l.base.up[i] << 1) | (Bits{1} << (m - 1));
        inv[i + 1] = l.inv(i) + 1;
        labels[i + 1] = l.base.label(i);
    }
    return as_lattice(Poset::validate(m, up, inv, labels));
}

Lattice direct_product(const Lattice& a, const Lattice& b) {
    long total = static_cast<long>(a.n()) * b.n();
    if (total > 64) throw BudgetExceeded("direct product exceeds 64 elements");
    int m = static_cast<int>(total);
    std::vector<Bits> up(m, 0);
    std::vector<int> inv(m);
    std::vector<std::string> labels(m);
    auto id = [&](int i, int j) { return i * b.n() + j; };
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < b.n(); ++j) {
            int e = id(i, j);
            inv[e] = id(a.inv(i), b.inv(j));
            std::string la = a.base.label(i), lb = b.base.label(j);
            if (!la.empty() || !lb.empty())
                labels[e] = (la.empty() ? std::to_string(i) : la) + "." +
                            (lb.empty() ? std::to_string(j) : lb);
            for (int i2 = 0; i2 < a.n(); ++i2)
                for (int j2 = 0; j2 < b.n(); ++j2)
                    if (a.leq(i, i2) && b.leq(j, j2)) up[e] |= Bits{1} << id(i2, j2);
        }
    return as_lattice(Poset::validate(m, up, inv, labels));
}

Lattice moisil_interval(const Lattice& l) {
    if (auto o = is_orthomodular_lattice(l); !o)
        throw std::invalid_argument("interval doubling needs an orthomodular input; witness (" +
                                    std::to_string(o.witness[0]) + "," +
                                    std::to_string(o.witness[1]) + ")");
    std::vector<std::pair<int, int>> carrier;
    for (int x = 0; x < l.n(); ++x)
        for (int y = 0; y < l.n(); ++y)
            if (l.leq(x, y)) carrier.emplace_back(x, y);
    int m = static_cast<int>(carrier.size());
    if (m > 64) throw BudgetExceeded("interval structure exceeds 64 elements");
    std::vector<Bits> up(m, 0);
    std::vector<int> inv(m);
    std::vector<std::string> labels(m);
    auto find = [&](int x, int y) {
        for (int i = 0; i < m; ++i)
            if (carrier[i] == std::pair{x, y}) return i;
        return -1;
    };
    for (int i = 0; i < m; ++i) {
        auto [x, y] = carrier[i];
        inv[i] = find(l.inv(y), l.inv(x));
        labels[i] = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        for (int j = 0; j < m; ++j) {
            auto [x2, y2] = carrier[j];
            if (l.leq(x, x2) && l.leq(y, y2)) up[i] |= Bits{1} << j;
        }
    }
    return as_lattice(Poset::validate(m, up, inv, labels));
}

Localizer localizer(const Lattice& l, int x, int y) {
    Localizer loc;
    loc.lo = l.join(l.meet(x, l.inv(x)), l.meet(y, l.inv(y)));
    loc.hi = l.meet(l.join(x, l.inv(x)), l.join(y, l.inv(y)));
    int m = 0;
    std::vector<int> pos(l.n(), -1);
    for (int e = 0; e < l.n(); ++e)
        if (l.leq(loc.lo, e) && l.leq(e, loc.hi)) {
            pos[e] = m++;
            loc.members.push_back(e);
        }
    std::vector<Bits> up(m, 0);
    std::vector<int> inv(m);
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        int e = loc.members[i];
        // e in [lo,hi] implies e' in [hi',lo'] = [lo,hi]
        inv[i] = pos[l.inv(e)];
        labels[i] = l.base.label(e);
        for (int j = 0; j < m; ++j)
            if (l.leq(e, loc.members[j])) up[i] |= Bits{1} << j;
    }
    loc.lat = as_lattice(Poset::validate(m, up, inv, labels));
    return loc;
}

int localize(const Lattice& l, int x, int y) {
    return l.join(l.meet(y, l.join(x, l.inv(x))), l.meet(x, l.inv(x)));
}

ResidualGroupoid sasaki_total(const Lattice& l) {
    ResidualGroupoid g;
    g.n = l.n();
    g.times.resize(g.n * g.n);
    g.arrow.resize(g.n * g.n);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            g.times[x * g.n + y] = static_cast<std::int8_t>(l.meet(y, l.join(x, l.inv(y))));
            g.arrow[x * g.n + y] = static_cast<std::int8_t>(l.join(l.inv(x), l.meet(x, y)));
        }
    return g;
}

ResidualGroupoid sasaki_piecewise(const Lattice& l) {
    ResidualGroupoid g = sasaki_total(l);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            if (l.leq(x, l.inv(y))) g.times[x * g.n + y] = static_cast<std::int8_t>(l.bottom());
            if (l.leq(x, y)) g.arrow[x * g.n + y] = static_cast<std::int8_t>(l.top());
        }
    return g;
}

ResiduationCheck is_left_residuated(const Lattice& l, const ResidualGroupoid& g) {
    int n = g.n, one = l.top();
    for (int x = 0; x < n; ++x)
        if (g.mul(x, one) != x || g.mul(one, x) != x) return {false, x, one, -1};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (l.leq(g.mul(x, y), z) != l.leq(x, g.imp(y, z))) return {false, x, y, z};
    return {};
}

Check localizer_sharpness_condition(const Lattice& l) {
    for (int x = 0; x < l.n(); ++x)
        for (int y = 0; y < l.n(); ++y) {
            if (!l.leq(x, y)) continue;
            Localizer loc = localizer(l, x, y);
            auto sharp_in = [&](int z) { return l.meet(z, l.inv(z)) == loc.lo; };
            int px = l.join(x, l.meet(y, l.inv(y)));
            int py = l.meet(y, l.join(x, l.inv(x)));
            if (!sharp_in(px) || !sharp_in(py)) return fail(x, y);
            // the relatively sharp elements must close under orthogonal joins
            for (int z : loc.members) {
                if (!sharp_in(z)) continue;
                for (int u : loc.members)
                    if (sharp_in(u) && l.leq(z, l.inv(u)) && !sharp_in(l.join(z, u)))
                        return fail(z, u);
            }
        }
    return pass();
}

}  // namespace qops
