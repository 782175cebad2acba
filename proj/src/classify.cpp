#include "qops/classify.hpp"

#include <map>

namespace qops {

Check is_uop(const Poset& p) {
    for (int x = 0; x < p.n; ++x) {
        if (!p.partial_meet(x, p.inv[x])) return fail(x, p.inv[x]);
        if (!p.partial_join(x, p.inv[x])) return fail(x, p.inv[x]);
    }
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y) {
            if (p.leq(x, p.inv[y]) && !p.partial_join(x, y)) return fail(x, y);
            auto xl = p.partial_meet(x, p.inv[x]);
            auto yu = p.partial_join(y, p.inv[y]);
            if (xl && yu && !p.leq(*xl, *yu)) return fail(x, y);
        }
    return pass();
}

Check is_op(const Poset& p) {
    if (auto u = is_uop(p); !u) return u;
    for (int x = 0; x < p.n; ++x) {
        if (*p.partial_meet(x, p.inv[x]) != p.bottom) return fail(x, p.inv[x]);
        if (*p.partial_join(x, p.inv[x]) != p.top) return fail(x, p.inv[x]);
    }
    return pass();
}

Check is_paraorthomodular(const Poset& p) {
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y) {
            if (!p.leq(x, y) || x == y) continue;
            auto m = p.partial_meet(p.inv[x], y);
            if (m && *m == p.bottom) return fail(x, y);
        }
    return pass();
}

Check is_orthomodular_poset(const Poset& p) {
    if (auto o = is_op(p); !o) return o;
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y) {
            if (!p.leq(x, y)) continue;
            auto m = p.partial_meet(p.inv[x], y);
            if (!m) return fail(x, y);
            auto j = p.partial_join(x, *m);
            if (!j || *j != y) return fail(x, y);
        }
    return pass();
}

Check is_distributive(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
                    return fail(x, y, z);
    return pass();
}

Check is_modular(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
                    return fail(x, y, z);
    return pass();
}

Check is_ortholattice(const Lattice& l) {
    for (int x = 0; x < l.n(); ++x)
        if (l.meet(x, l.inv(x)) != l.bottom() || l.join(x, l.inv(x)) != l.top())
            return fail(x, l.inv(x));
    return pass();
}

Check is_pseudo_kleene(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!l.leq(l.meet(x, l.inv(x)), l.join(y, l.inv(y)))) return fail(x, y);
    return pass();
}

Check is_kleene(const Lattice& l) {
    if (auto k = is_pseudo_kleene(l); !k) return k;
    return is_distributive(l);
}

Check is_modular_pkl(const Lattice& l) {
    if (auto k = is_pseudo_kleene(l); !k) return k;
    return is_modular(l);
}

Check is_orthomodular_lattice(const Lattice& l) {
    if (auto o = is_ortholattice(l); !o) return o;
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (l.leq(x, y) && l.join(x, l.meet(l.inv(x), y)) != y) return fail(x, y);
    return pass();
}

Check is_boolean(const Lattice& l) {
    if (auto o = is_ortholattice(l); !o) return o;
    return is_distributive(l);
}

Check is_sp1(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!l.leq(x, y)) continue;
            int lhs = l.meet(l.inv(x), y);
            int bound = l.join(l.meet(x, l.inv(x)), l.meet(y, l.inv(y)));
            if (lhs == bound && l.meet(y, l.join(x, l.inv(x))) != l.join(x, l.meet(y, l.inv(y))))
                return fail(x, y);
        }
    return pass();
}

Check is_sp2(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!l.leq(x, y)) continue;
            int m = l.meet(l.inv(x), y);
            if (l.join(l.meet(x, l.inv(x)), l.meet(y, l.inv(y))) != l.meet(m, l.inv(m)))
                return fail(x, y);
        }
    return pass();
}

Check is_spo(const Lattice& l) {
    if (auto a = is_sp1(l); !a) return a;
    return is_sp2(l);
}

Check is_sp(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (l.leq(x, y) &&
                l.meet(y, l.join(x, l.inv(x))) != l.join(x, l.meet(l.inv(x), y)))
                return fail(x, y);
    return pass();
}

Check is_sp_equational(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = l.join(x, y);
            if (l.meet(xy, l.join(x, l.inv(x))) != l.join(x, l.meet(xy, l.inv(x))))
                return fail(x, y);
        }
    return pass();
}

Check is_sp_equational_alt(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = l.join(x, y);
            if (l.join(x, l.meet(xy, l.inv(xy))) != l.meet(xy, l.join(x, l.inv(xy))))
                return fail(x, y);
        }
    return pass();
}

Check satisfies_quasi_at(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (l.leq(x, l.inv(y)) && l.leq(l.meet(l.inv(x), l.inv(y)), l.meet(x, y)) &&
                x != l.inv(y))
                return fail(x, y);
    return pass();
}

Check satisfies_quasi_A(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (l.meet(x, l.inv(x)) != l.bottom() || l.meet(y, l.inv(y)) != l.bottom())
                continue;
            int m = l.meet(x, y);
            if (l.meet(m, l.inv(m)) != l.bottom()) return fail(x, y);
        }
    return pass();
}

Check residuation_condition(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (l.leq(x, y)) continue;
            if (!l.leq(x, l.join(y, l.inv(y))) && !l.leq(l.inv(y), l.join(x, y)))
                return fail(x, y);
        }
    return pass();
}

Check bound_absorption_identity(const Lattice& l) {
    int n = l.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!l.leq(x, y)) continue;
            int xx = l.meet(x, l.inv(x));
            if (l.meet(y, l.join(l.inv(y), xx)) != l.join(l.meet(y, l.inv(y)), xx))
                return fail(x, y);
        }
    return pass();
}

bool is_sharp(const Lattice& l, int x) { return l.meet(x, l.inv(x)) == l.bottom(); }

std::vector<int> sharp_elements(const Lattice& l) {
    std::vector<int> out;
    for (int x = 0; x < l.n(); ++x)
        if (is_sharp(l, x)) out.push_back(x);
    return out;
}

Poset sh_poset(const Lattice& l) {
    auto sh = sharp_elements(l);
    int m = static_cast<int>(sh.size());
    std::vector<Bits> up(m, 0);
    std::vector<int> inv(m);
    std::vector<std::string> labels(m);
    std::vector<int> pos(l.n(), -1);
    for (int i = 0; i < m; ++i) pos[sh[i]] = i;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            if (l.leq(sh[i], sh[j])) up[i] |= Bits{1} << j;
        inv[i] = pos[l.inv(sh[i])];  // x sharp implies x' sharp in a PKL
        labels[i] = l.base.label(sh[i]);
    }
    return Poset::validate(m, up, inv, labels);
}

ClassReport classify(const Poset& p) {
    ClassReport r;
    r.uop = static_cast<bool>(is_uop(p));
    r.op = static_cast<bool>(is_op(p));
    r.paraorthomodular = static_cast<bool>(is_paraorthomodular(p));
    r.omp = static_cast<bool>(is_orthomodular_poset(p));
    auto lat = try_lattice(p);
    r.lattice = lat.has_value();
    if (!lat) return r;
    const Lattice& l = *lat;
    r.distributive = static_cast<bool>(is_distributive(l));
    r.modular = static_cast<bool>(is_modular(l));
    r.pkl = static_cast<bool>(is_pseudo_kleene(l));
    r.kleene = r.pkl && r.distributive;
    r.mpkl = r.pkl && r.modular;
    r.ortholattice = static_cast<bool>(is_ortholattice(l));
    r.oml = static_cast<bool>(is_orthomodular_lattice(l));
    r.boolean_algebra = r.ortholattice && r.distributive;
    r.pom = r.pkl && r.paraorthomodular;
    r.sp1 = static_cast<bool>(is_sp1(l));
    r.sp2 = static_cast<bool>(is_sp2(l));
    r.spo = r.sp1 && r.sp2;
    r.sp = static_cast<bool>(is_sp(l));
    return r;
}

std::string ClassReport::summary() const {
    auto flag = [](const char* name, bool v) {
        return std::string(name) + "=" + (v ? "yes" : "no");
    };
    std::string s;
    const std::pair<const char*, bool> items[] = {
        {"lattice", lattice}, {"uop", uop}, {"op", op}, {"pkl", pkl},
        {"kleene", kleene}, {"mpkl", mpkl}, {"ol", ortholattice}, {"oml", oml},
        {"ba", boolean_algebra}, {"omp", omp}, {"para", paraorthomodular},
        {"pom", pom}, {"sp1", sp1}, {"sp2", sp2}, {"spo", spo}, {"sp", sp},
        {"dist", distributive}, {"mod", modular}};
    for (const auto& [k, v] : items) {
        if (!s.empty()) s += " ";
        s += flag(k, v);
    }
    return s;
}

Check check_class(const Poset& p, const std::string& cls) {
    if (cls == "uop") return is_uop(p);
    if (cls == "op") return is_op(p);
    if (cls == "para") return is_paraorthomodular(p);
    if (cls == "omp") return is_orthomodular_poset(p);
    LatticeFailure why{};
    auto lat = try_lattice(p, &why);
    if (!lat) return fail(why.x, why.y);
    const Lattice& l = *lat;
    if (cls == "lattice") return pass();
    if (cls == "dist") return is_distributive(l);
    if (cls == "mod") return is_modular(l);
    if (cls == "pkl") return is_pseudo_kleene(l);
    if (cls == "kl") return is_kleene(l);
    if (cls == "mpkl") return is_modular_pkl(l);
    if (cls == "ol") return is_ortholattice(l);
    if (cls == "oml") return is_orthomodular_lattice(l);
    if (cls == "ba") return is_boolean(l);
    if (cls == "pom") {
        if (auto k = is_pseudo_kleene(l); !k) return k;
        return is_paraorthomodular(p);
    }
    if (cls == "sp1") return is_sp1(l);
    if (cls == "sp2") return is_sp2(l);
    if (cls == "spo") return is_spo(l);
    if (cls == "sp") return is_sp(l);
    if (cls == "rescond") return residuation_condition(l);
    if (cls == "quasiA") return satisfies_quasi_A(l);
    throw std::out_of_range("unknown class: " + cls);
}

std::vector<std::string> known_classes() {
    return {"uop", "op",  "para", "omp",  "lattice", "dist", "mod",    "pkl",   "kl",
            "mpkl", "ol", "oml",  "ba",   "pom",     "sp1",  "sp2",    "spo",   "sp",
            "rescond", "quasiA"};
}

}  // namespace qops
