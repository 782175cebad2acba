#include "qops/spectral.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qops {

namespace {

// Mixed rational/integer comparisons in boost 1.74 recurse infinitely under
// C++20 reversed-candidate lookup, so comparisons here stay homogeneous.
inline bool is_zero(const Rat& x) { return x.numerator() == 0; }

// In-place reduced row echelon form; drops zero rows.
void rref(RatMat& m, int d) {
    int lead = 0;
    int rows = static_cast<int>(m.size());
    for (int r = 0; r < rows && lead < d; ++r) {
        int i = r;
        while (i < rows && is_zero(m[i][lead])) ++i;
        if (i == rows) {
            --r;
            ++lead;
            continue;
        }
        std::swap(m[i], m[r]);
        Rat p = m[r][lead];
        for (int c = 0; c < d; ++c) m[r][c] /= p;
        for (int j = 0; j < rows; ++j) {
            if (j == r || is_zero(m[j][lead])) continue;
            Rat f = m[j][lead];
            for (int c = 0; c < d; ++c) m[j][c] -= f * m[r][c];
        }
        ++lead;
    }
    m.erase(std::remove_if(m.begin(), m.end(),
                           [](const RatVec& row) {
                               return std::all_of(row.begin(), row.end(),
                                                  [](const Rat& x) { return is_zero(x); });
                           }),
            m.end());
}

}  // namespace

RationalSubspace RationalSubspace::zero(int d) { return {d, {}}; }

RationalSubspace RationalSubspace::full(int d) {
    RationalSubspace s{d, RatMat(d, RatVec(d, 0))};
    for (int i = 0; i < d; ++i) s.rows[i][i] = 1;
    return s;
}

RationalSubspace RationalSubspace::span(int d, RatMat vectors) {
    rref(vectors, d);
    return {d, std::move(vectors)};
}

bool RationalSubspace::contains(const RatVec& v) const {
    RatVec w = v;
    for (const auto& row : rows) {
        int lead = 0;
        while (lead < d && is_zero(row[lead])) ++lead;
        if (lead == d) continue;
        Rat f = w[lead];
        for (int c = 0; c < d; ++c) w[c] -= f * row[c];
    }
    return std::all_of(w.begin(), w.end(), [](const Rat& x) { return is_zero(x); });
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
    for (const auto& row : other.rows)
        if (!contains(row)) return false;
    return true;
}

RationalSubspace RationalSubspace::sum(const RationalSubspace& other) const {
    RatMat m = rows;
    m.insert(m.end(), other.rows.begin(), other.rows.end());
    return span(d, std::move(m));
}

RationalSubspace RationalSubspace::orthocomplement() const {
    // null space of the basis matrix: free columns parameterize it
    RatMat m = rows;  // already RREF
    std::vector<int> lead_col;
    std::vector<bool> is_lead(d, false);
    for (const auto& row : m) {
        int c = 0;
        while (c < d && is_zero(row[c])) ++c;
        lead_col.push_back(c);
        if (c < d) is_lead[c] = true;
    }
    RatMat basis;
    for (int free = 0; free < d; ++free) {
        if (is_lead[free]) continue;
        RatVec v(d, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < m.size(); ++r) v[lead_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return span(d, std::move(basis));
}

RationalSubspace RationalSubspace::intersect(const RationalSubspace& other) const {
    return orthocomplement().sum(other.orthocomplement()).orthocomplement();
}

RatMat RationalSubspace::projector() const {
    // P = B^T (B B^T)^-1 B for the RREF basis B
    int k = dim();
    RatMat g(k, RatVec(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int c = 0; c < d; ++c) g[i][j] += rows[i][c] * rows[j][c];
    // invert g by Gauss-Jordan
    RatMat inv(k, RatVec(k, 0));
    for (int i = 0; i < k; ++i) inv[i][i] = 1;
    for (int col = 0; col < k; ++col) {
        int piv = col;
        while (piv < k && is_zero(g[piv][col])) ++piv;
        std::swap(g[piv], g[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = g[col][col];
        for (int c = 0; c < k; ++c) g[col][c] /= p, inv[col][c] /= p;
        for (int r = 0; r < k; ++r) {
            if (r == col || is_zero(g[r][col])) continue;
            Rat f = g[r][col];
            for (int c = 0; c < k; ++c) g[r][c] -= f * g[col][c], inv[r][c] -= f * inv[col][c];
        }
    }
    RatMat p(d, RatVec(d, 0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) p[a][b] += rows[i][a] * inv[i][j] * rows[j][b];
    return p;
}

RationalSubspace SpectralEffect::at(const Rat& lambda) const {
    RationalSubspace v = RationalSubspace::zero(d);
    for (const auto& [l, s] : jumps) {
        if (l > lambda) break;
        v = s;
    }
    return v;
}

RationalSubspace SpectralEffect::left_limit(const Rat& lambda) const {
    RationalSubspace v = RationalSubspace::zero(d);
    for (const auto& [l, s] : jumps) {
        if (l >= lambda) break;
        v = s;
    }
    return v;
}

bool SpectralEffect::valid() const {
    if (jumps.empty()) return false;
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        const auto& [l, s] = jumps[i];
        if (l < Rat(0) || l > Rat(1) || s.d != d) return false;
        if (i > 0) {
            if (!(jumps[i - 1].first < l)) return false;
            if (!(s.contains(jumps[i - 1].second) && s.dim() > jumps[i - 1].second.dim()))
                return false;
        }
    }
    return jumps.back().second == RationalSubspace::full(d);
}

SpectralEffect SpectralEffect::zero_effect(int d) {
    return {d, {{Rat(0), RationalSubspace::full(d)}}};
}

SpectralEffect SpectralEffect::identity_effect(int d) {
    return {d, {{Rat(1), RationalSubspace::full(d)}}};
}

SpectralEffect SpectralEffect::projection(const RationalSubspace& range) {
    int d = range.d;
    if (range.dim() == d) return identity_effect(d);
    if (range.dim() == 0) return zero_effect(d);
    return {d, {{Rat(0), range.orthocomplement()}, {Rat(1), RationalSubspace::full(d)}}};
}

bool SpectralEffect::is_projection() const {
    for (const auto& [l, s] : jumps)
        if (l != Rat(0) && l != Rat(1)) return false;
    return true;
}

RatMat SpectralEffect::to_operator() const {
    RatMat op(d, RatVec(d, 0));
    RationalSubspace prev = RationalSubspace::zero(d);
    for (const auto& [l, s] : jumps) {
        if (!is_zero(l)) {
            // eigenspace of eigenvalue l = s minus prev; its projector is
            // P(s) - P(prev)
            RatMat ps = s.projector(), pp = prev.projector();
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) op[a][b] += l * (ps[a][b] - pp[a][b]);
        }
        prev = s;
    }
    return op;
}

SpectralEffect canonical(const SpectralEffect& e) {
    SpectralEffect out;
    out.d = e.d;
    RationalSubspace prev = RationalSubspace::zero(e.d);
    for (const auto& [l, s] : e.jumps) {
        if (s == prev) continue;
        if (!out.jumps.empty() && out.jumps.back().first == l)
            out.jumps.back().second = s;
        else
            out.jumps.emplace_back(l, s);
        prev = s;
    }
    return out;
}

namespace {

std::vector<Rat> merged_points(const SpectralEffect& a, const SpectralEffect& b) {
    std::vector<Rat> pts;
    for (const auto& [l, s] : a.jumps) pts.push_back(l);
    for (const auto& [l, s] : b.jumps) pts.push_back(l);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

bool spectral_leq(const SpectralEffect& a, const SpectralEffect& b) {
    for (const Rat& l : merged_points(a, b))
        if (!a.at(l).contains(b.at(l))) return false;
    return true;
}

SpectralEffect spectral_join(const SpectralEffect& a, const SpectralEffect& b) {
    SpectralEffect out;
    out.d = a.d;
    for (const Rat& l : merged_points(a, b)) out.jumps.emplace_back(l, a.at(l).intersect(b.at(l)));
    return canonical(out);
}

SpectralEffect spectral_meet(const SpectralEffect& a, const SpectralEffect& b) {
    SpectralEffect out;
    out.d = a.d;
    for (const Rat& l : merged_points(a, b)) out.jumps.emplace_back(l, a.at(l).sum(b.at(l)));
    return canonical(out);
}

SpectralEffect spectral_neg(const SpectralEffect& a) {
    // the family of 1-A jumps exactly at 1 - (jump points of A), where it
    // takes the orthocomplement of the space just below the mirrored point
    SpectralEffect out;
    out.d = a.d;
    RationalSubspace prev = RationalSubspace::zero(a.d);
    std::vector<std::pair<Rat, RationalSubspace>> rev;
    for (const auto& [l, s] : a.jumps) {
        rev.emplace_back(Rat(1) - l, prev.orthocomplement());
        prev = s;
    }
    std::reverse(rev.begin(), rev.end());
    out.jumps = std::move(rev);
    return canonical(out);
}

bool spectral_sharp(const SpectralEffect& a) {
    SpectralEffect m = spectral_meet(a, spectral_neg(a));
    return m == SpectralEffect::zero_effect(a.d);
}

bool canonical_leq(const SpectralEffect& a, const SpectralEffect& b) {
    RatMat ma = a.to_operator(), mb = b.to_operator();
    int d = a.d;
    RatMat diff(d, RatVec(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) diff[i][j] = mb[i][j] - ma[i][j];
    // PSD iff every principal minor is nonnegative
    for (int mask = 1; mask < (1 << d); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < d; ++i)
            if (mask & (1 << i)) idx.push_back(i);
        int k = static_cast<int>(idx.size());
        RatMat m(k, RatVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = diff[idx[i]][idx[j]];
        // determinant by fraction-free-ish Gaussian elimination
        Rat det = 1;
        for (int col = 0; col < k; ++col) {
            int piv = col;
            while (piv < k && is_zero(m[piv][col])) ++piv;
            if (piv == k) {
                det = 0;
                break;
            }
            if (piv != col) {
                std::swap(m[piv], m[col]);
                det = -det;
            }
            det *= m[col][col];
            for (int r = col + 1; r < k; ++r) {
                Rat f = m[r][col] / m[col][col];
                for (int c = col; c < k; ++c) m[r][c] -= f * m[col][c];
            }
        }
        if (det < Rat(0)) return false;
    }
    return true;
}

SpectralEffect random_effect(int d, std::mt19937_64& rng) {
    auto rnd_int = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };
    // random strictly nested chain of subspaces ending in the full space
    int k = rnd_int(1, d);
    std::vector<int> dims;
    {
        std::vector<int> pool;
        for (int i = 1; i < d; ++i) pool.push_back(i);
        std::shuffle(pool.begin(), pool.end(), rng);
        dims.assign(pool.begin(), pool.begin() + (k - 1));
        dims.push_back(d);
        std::sort(dims.begin(), dims.end());
    }
    RatMat chain_basis;
    auto rank_of = [&](RatMat m) {
        rref(m, d);
        return static_cast<int>(m.size());
    };
    while (static_cast<int>(chain_basis.size()) < d) {
        RatVec v(d);
        for (int c = 0; c < d; ++c) v[c] = Rat(rnd_int(-3, 3), rnd_int(1, 3));
        RatMat test = chain_basis;
        test.push_back(v);
        if (rank_of(test) > rank_of(chain_basis)) chain_basis.push_back(std::move(v));
    }
    // random distinct thresholds in [0,1] with small denominators
    std::vector<Rat> ls;
    while (static_cast<int>(ls.size()) < k) {
        int den = rnd_int(1, 8);
        Rat l(rnd_int(0, den), den);
        if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
    }
    std::sort(ls.begin(), ls.end());
    SpectralEffect e;
    e.d = d;
    for (int i = 0; i < k; ++i) {
        RatMat rows(chain_basis.begin(), chain_basis.begin() + dims[i]);
        e.jumps.emplace_back(ls[i], RationalSubspace::span(d, std::move(rows)));
    }
    return canonical(e);
}

SpectralEffect random_projection_effect(int d, std::mt19937_64& rng) {
    auto rnd_int = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };
    int dim = rnd_int(0, d);
    RatMat rows;
    while (static_cast<int>(rows.size()) < dim) {
        RatVec v(d);
        for (int c = 0; c < d; ++c) v[c] = Rat(rnd_int(-3, 3), rnd_int(1, 3));
        RatMat test = rows;
        test.push_back(v);
        rref(test, d);
        if (static_cast<int>(test.size()) > static_cast<int>(rows.size()))
            rows.push_back(std::move(v));
    }
    return SpectralEffect::projection(RationalSubspace::span(d, std::move(rows)));
}

std::string emit_effect(const SpectralEffect& e) {
    std::ostringstream out;
    out << "effect " << e.d << " " << e.jumps.size() << "\n";
    for (const auto& [l, s] : e.jumps) {
        out << l.numerator() << "/" << l.denominator() << " ; " << s.dim();
        for (const auto& row : s.rows)
            for (const auto& x : row) out << " " << x.numerator() << "/" << x.denominator();
        out << "\n";
    }
    return out.str();
}

namespace {

Rat parse_rat(const std::string& tok) {
    auto slash = tok.find('/');
    using Int = boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return Rat(Int(tok));
    return Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
}

}  // namespace

SpectralEffect parse_effect(const std::string& text) {
    std::istringstream in(text);
    std::string kw;
    int d, k;
    if (!(in >> kw >> d >> k) || kw != "effect")
        throw std::runtime_error("expected 'effect <d> <k>' header");
    SpectralEffect e;
    e.d = d;
    for (int i = 0; i < k; ++i) {
        std::string ltok, semi;
        int dim;
        if (!(in >> ltok >> semi >> dim) || semi != ";")
            throw std::runtime_error("bad jump line");
        RatMat rows(dim, RatVec(d));
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < d; ++c) {
                std::string t;
                if (!(in >> t)) throw std::runtime_error("truncated basis row");
                rows[r][c] = parse_rat(t);
            }
        e.jumps.emplace_back(parse_rat(ltok), RationalSubspace::span(d, std::move(rows)));
    }
    if (!e.valid()) throw std::runtime_error("effect fails validation");
    return e;
}

}  // namespace qops
