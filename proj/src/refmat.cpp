#include "qops/refmat.hpp"

#include <algorithm>
#include <set>

#include "qops/classify.hpp"
#include "qops/subalg.hpp"

namespace qops {

bool precsim(const RefMatrix& m, int p, int q) {
    const RefProp& f = m.carrier[p];
    const RefProp& g = m.carrier[q];
    bool overlap = false;
    for (int i = 0; i < m.num_indices; ++i) {
        if (!f.in_domain(i) || !g.in_domain(i)) continue;
        overlap = true;
        if (f.vals[i] > g.vals[i]) return false;
    }
    return overlap;
}

PrimeFilterIndex prime_filters(const Lattice& l) {
    PrimeFilterIndex out;
    for (Bits s : all_subuniverses(l))
        if (subset_distributive(l, s)) out.sublattices.push_back(s);
    std::sort(out.sublattices.begin(), out.sublattices.end());
    for (int i = 0; i < static_cast<int>(out.sublattices.size()); ++i) {
        Bits k = out.sublattices[i];
        std::vector<int> elems;
        for (Bits b = k; b; b &= b - 1) elems.push_back(lowest_bit(b));
        int m = static_cast<int>(elems.size());
        for (Bits pick = 1; pick < (Bits{1} << m); ++pick) {
            Bits f = 0;
            for (int j = 0; j < m; ++j)
                if (has_bit(pick, j)) f |= Bits{1} << elems[j];
            if (f == k) continue;  // proper
            bool ok = true;
            for (int x : elems) {
                if (!ok) break;
                for (int y : elems) {
                    bool xin = has_bit(f, x), yin = has_bit(f, y);
                    if ((xin && yin) != has_bit(f, l.meet(x, y))) { ok = false; break; }
                    if (has_bit(f, l.join(x, y)) && !xin && !yin) { ok = false; break; }
                }
            }
            if (ok) out.filters.emplace_back(i, f);
        }
    }
    return out;
}

RefMatrix build_refmat(const Lattice& l, PrimeFilterIndex* out_index) {
    PrimeFilterIndex pf = prime_filters(l);
    RefMatrix m;
    m.num_indices = static_cast<int>(pf.filters.size());
    int n = l.n();
    m.carrier.resize(n);
    m.neg.resize(n);
    m.join.assign(n, std::vector<int>(n, -1));
    m.designated.resize(m.num_indices);
    m.from_element.resize(n);
    for (int a = 0; a < n; ++a) {
        m.from_element[a] = a;
        m.neg[a] = l.inv(a);
        RefProp& p = m.carrier[a];
        p.vals.assign(m.num_indices, kOutside);
        for (int fi = 0; fi < m.num_indices; ++fi) {
            auto [si, f] = pf.filters[fi];
            if (!has_bit(pf.sublattices[si], a)) continue;
            bool in = has_bit(f, a), inp = has_bit(f, l.inv(a));
            p.vals[fi] = in && !inp ? kTrue : (inp && !in ? kFalse : kHalf);
            if (p.vals[fi] == kTrue) m.designated[fi].push_back(a);
        }
    }
    m.zero_id = l.bottom();
    m.one_id = l.top();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (std::size_t si = 0; si < pf.sublattices.size(); ++si)
                if (has_bit(pf.sublattices[si], a) && has_bit(pf.sublattices[si], b)) {
                    m.join[a][b] = l.join(a, b);
                    break;
                }
    if (out_index) *out_index = std::move(pf);
    return m;
}

RefMatrix example_matrix() {
    RefMatrix m;
    m.num_indices = 2;  // indices: 0 = r, 1 = s
    auto prop = [](TruthVal r, TruthVal s) { return RefProp{{r, s}}; };
    // carrier: 0 = one, 1 = zero, 2 = fa, 3 = f-not-a, 4 = fb
    m.carrier = {prop(kTrue, kTrue), prop(kFalse, kFalse), prop(kTrue, kOutside),
                 prop(kFalse, kOutside), prop(kOutside, kHalf)};
    m.one_id = 0;
    m.zero_id = 1;
    m.neg = {1, 0, 3, 2, 4};
    int N = 5;
    m.join.assign(N, std::vector<int>(N, -1));
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) {
            bool overlap = false;
            for (int i = 0; i < 2; ++i)
                if (m.carrier[p].in_domain(i) && m.carrier[q].in_domain(i)) overlap = true;
            if (!overlap) continue;
            if (p == 0 || q == 0) m.join[p][q] = 0;
            else if (q == 1) m.join[p][q] = p;
            else if (p == 1) m.join[p][q] = q;
            else if ((p == 2 && q == 3) || (p == 3 && q == 2)) m.join[p][q] = 0;
            else if (p == q) m.join[p][q] = p;
        }
    m.designated = {{0, 2}, {0}};
    return m;
}

std::string check_matrix_axioms(const RefMatrix& m) {
    int N = static_cast<int>(m.carrier.size());
    auto id = [](int p) { return std::to_string(p); };
    for (int p = 0; p < N; ++p) {
        if (!m.commeasurable(p, p)) return "commeasurability not reflexive at " + id(p);
        if (m.neg[m.neg[p]] != p) return "negation not involutive at " + id(p);
        for (int i = 0; i < m.num_indices; ++i) {
            TruthVal v = m.carrier[p].vals[i];
            TruthVal w = m.carrier[m.neg[p]].vals[i];
            if ((v < 0) != (w < 0)) return "negation changes domain at " + id(p);
            if (v >= 0 && w != kTrue - v) return "negation not pointwise at " + id(p);
        }
    }
    for (int i = 0; i < m.num_indices; ++i) {
        if (!m.carrier[m.one_id].in_domain(i) || m.carrier[m.one_id].vals[i] != kTrue)
            return "top is not constant true";
        if (m.carrier[m.zero_id].vals[i] != kFalse) return "bottom is not constant false";
    }
    if (m.neg[m.one_id] != m.zero_id) return "bottom is not the negation of top";
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) {
            if (m.commeasurable(p, q) != m.commeasurable(q, p))
                return "commeasurability not symmetric at " + id(p) + "," + id(q);
            if (!m.commeasurable(p, q)) continue;
            bool overlap = false;
            for (int i = 0; i < m.num_indices; ++i)
                if (m.carrier[p].in_domain(i) && m.carrier[q].in_domain(i)) overlap = true;
            if (!overlap) return "commeasurable pair with disjoint domains " + id(p) + "," + id(q);
            // the designated join must cover the overlap and agree with the
            // pointwise join there
            int z = m.join[p][q];
            for (int i = 0; i < m.num_indices; ++i) {
                TruthVal a = m.carrier[p].vals[i], b = m.carrier[q].vals[i];
                if (a < 0 || b < 0) continue;
                if (!m.carrier[z].in_domain(i) || m.carrier[z].vals[i] != std::max(a, b))
                    return "join mismatch at " + id(p) + "," + id(q);
            }
        }
    // every commeasurable pair generates a Kleene sublattice
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) {
            if (!m.commeasurable(p, q)) continue;
            std::set<int> gen{p, q, m.zero_id, m.one_id};
            for (;;) {
                std::set<int> grown = gen;
                for (int a : gen) {
                    grown.insert(m.neg[a]);
                    for (int b : gen) {
                        if (!m.commeasurable(a, b))
                            return "polynomial pair not commeasurable from " + id(p) + "," + id(q);
                        grown.insert(m.join[a][b]);
                    }
                }
                if (grown == gen) break;
                gen = std::move(grown);
            }
            std::vector<int> e(gen.begin(), gen.end());
            auto jn = [&](int a, int b) { return m.join[a][b]; };
            auto mt = [&](int a, int b) { return m.neg[m.join[m.neg[a]][m.neg[b]]]; };
            for (int a : e)
                for (int b : e) {
                    if (jn(a, b) != jn(b, a) || mt(a, b) != mt(b, a))
                        return "generated algebra not commutative";
                    if (jn(a, jn(a, b)) != jn(a, b)) return "generated join not absorptive";
                    if (jn(a, mt(a, b)) != a || mt(a, jn(a, b)) != a)
                        return "generated algebra fails absorption";
                    for (int c : e) {
                        if (jn(a, jn(b, c)) != jn(jn(a, b), c))
                            return "generated join not associative";
                        if (mt(a, jn(b, c)) != jn(mt(a, b), mt(a, c)))
                            return "generated algebra not distributive";
                    }
                }
            for (int a : e)
                for (int b : e)
                    if (jn(mt(a, m.neg[a]), jn(b, m.neg[b])) != jn(b, m.neg[b]))
                        return "generated algebra fails the Kleene condition";
        }
    return "";
}

JoinUniqueness join_uniqueness(const Lattice& l) {
    PrimeFilterIndex pf;
    RefMatrix m = build_refmat(l, &pf);
    int n = l.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!m.commeasurable(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                bool shared = false;
                for (Bits k : pf.sublattices)
                    if (has_bit(k, a) && has_bit(k, b) && has_bit(k, c)) shared = true;
                if (!shared) continue;
                bool cand = true;
                for (int i = 0; i < m.num_indices && cand; ++i) {
                    TruthVal va = m.carrier[a].vals[i], vb = m.carrier[b].vals[i];
                    if (va < 0 || vb < 0) continue;
                    if (!m.carrier[c].in_domain(i) || m.carrier[c].vals[i] != std::max(va, vb))
                        cand = false;
                }
                if (cand && c != l.join(a, b)) return {false, a, b, c};
            }
        }
    return {};
}

RepresentationReport representation_check(const Lattice& l) {
    RefMatrix m = build_refmat(l);
    RepresentationReport r;
    int n = l.n();
    for (int a = 0; a < n && r.injective; ++a)
        for (int b = a + 1; b < n; ++b)
            if (m.carrier[a] == m.carrier[b]) {
                r.injective = false;
                r.wx = a, r.wy = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool ps = precsim(m, a, b);
            bool le = l.leq(a, b);
            if (ps && !le && r.forward) {
                r.forward = false;
                if (r.wx < 0) r.wx = a, r.wy = b;
            }
            if (le && !ps && r.converse) {
                r.converse = false;
                if (r.wx < 0) r.wx = a, r.wy = b;
            }
        }
    r.orthoiso = r.injective && r.forward && r.converse;  // neg matches by construction
    return r;
}

Formula Formula::neg(Formula f) {
    Formula g;
    g.kind = Neg;
    g.kids.push_back(std::move(f));
    return g;
}

Formula Formula::lor(Formula f, Formula g) {
    Formula h;
    h.kind = Or;
    h.kids.push_back(std::move(f));
    h.kids.push_back(std::move(g));
    return h;
}

std::vector<std::string> Formula::variables() const {
    std::vector<std::string> out;
    if (kind == Var) out.push_back(name);
    for (const auto& k : kids) {
        auto sub = k.variables();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Formula::str() const {
    switch (kind) {
        case Var: return name;
        case Zero: return "0";
        case One: return "1";
        case Neg: return "neg(" + kids[0].str() + ")";
        case Or: return "or(" + kids[0].str() + "," + kids[1].str() + ")";
    }
    return "?";
}

namespace {

Formula parse_formula_at(const std::string& s, std::size_t& i) {
    auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip();
    if (i >= s.size()) throw std::runtime_error("unexpected end of formula");
    if (s[i] == '0') { ++i; return Formula::zero(); }
    if (s[i] == '1') { ++i; return Formula::one(); }
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    std::string word = s.substr(start, i - start);
    if (word.empty()) throw std::runtime_error("unexpected character in formula");
    skip();
    if (word == "or" || word == "neg") {
        if (i >= s.size() || s[i] != '(') throw std::runtime_error("expected ( after " + word);
        ++i;
        Formula a = parse_formula_at(s, i);
        if (word == "neg") {
            skip();
            if (i >= s.size() || s[i] != ')') throw std::runtime_error("expected )");
            ++i;
            return Formula::neg(std::move(a));
        }
        skip();
        if (i >= s.size() || s[i] != ',') throw std::runtime_error("expected , in or()");
        ++i;
        Formula b = parse_formula_at(s, i);
        skip();
        if (i >= s.size() || s[i] != ')') throw std::runtime_error("expected )");
        ++i;
        return Formula::lor(std::move(a), std::move(b));
    }
    return Formula::var(word);
}

}  // namespace

Formula parse_formula(const std::string& text) {
    std::size_t i = 0;
    Formula f = parse_formula_at(text, i);
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) throw std::runtime_error("trailing characters in formula");
    return f;
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& sigma) {
    if (f.kind == Formula::Var) {
        auto it = sigma.find(f.name);
        return it != sigma.end() ? it->second : f;
    }
    Formula g;
    g.kind = f.kind;
    g.name = f.name;
    for (const auto& k : f.kids) g.kids.push_back(substitute(k, sigma));
    return g;
}

std::optional<int> extend_partial_hom(const RefMatrix& m,
                                      const std::map<std::string, int>& assignment,
                                      const Formula& f) {
    switch (f.kind) {
        case Formula::Var: {
            auto it = assignment.find(f.name);
            if (it == assignment.end()) return std::nullopt;
            return it->second;
        }
        case Formula::Zero: return m.zero_id;
        case Formula::One: return m.one_id;
        case Formula::Neg: {
            auto k = extend_partial_hom(m, assignment, f.kids[0]);
            if (!k) return std::nullopt;
            return m.neg[*k];
        }
        case Formula::Or: {
            auto a = extend_partial_hom(m, assignment, f.kids[0]);
            auto b = extend_partial_hom(m, assignment, f.kids[1]);
            if (!a || !b || !m.commeasurable(*a, *b)) return std::nullopt;
            return m.join[*a][*b];
        }
    }
    return std::nullopt;
}

bool entails(const RefMatrix& m, const std::vector<Formula>& gamma, const Formula& phi) {
    std::vector<std::string> vars;
    for (const auto& g : gamma)
        for (const auto& v : g.variables()) vars.push_back(v);
    for (const auto& v : phi.variables()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    int N = static_cast<int>(m.carrier.size());
    int k = static_cast<int>(vars.size());
    std::vector<int> choice(k, 0);
    for (;;) {
        std::map<std::string, int> h;
        for (int i = 0; i < k; ++i) h[vars[i]] = choice[i];
        std::vector<std::optional<int>> gv;
        for (const auto& g : gamma) gv.push_back(extend_partial_hom(m, h, g));
        for (int i = 0; i < m.num_indices; ++i) {
            bool premises = true;
            for (std::size_t gi = 0; gi < gamma.size() && premises; ++gi) {
                if (!gv[gi] || !std::binary_search(m.designated[i].begin(),
                                                  m.designated[i].end(), *gv[gi]))
                    premises = false;
            }
            if (!premises) continue;
            auto pv = extend_partial_hom(m, h, phi);
            if (!pv || !std::binary_search(m.designated[i].begin(), m.designated[i].end(), *pv))
                return false;
        }
        int pos = k - 1;
        while (pos >= 0 && choice[pos] == N - 1) choice[pos--] = 0;
        if (pos < 0) break;
        ++choice[pos];
    }
    return true;
}

bool entails_structural(const RefMatrix& m, const std::vector<Formula>& gamma,
                        const Formula& phi) {
    std::set<std::string> gv;
    for (const auto& g : gamma)
        for (const auto& v : g.variables()) gv.insert(v);
    for (const auto& v : phi.variables())
        if (!gv.count(v)) return false;
    return entails(m, gamma, phi);
}

}  // namespace qops
