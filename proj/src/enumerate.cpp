#include "qops/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qops/classify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qops {

namespace {

std::string encode_perm(const Poset& p, const std::vector<int>& perm) {
    int n = p.n;
    std::string s(n * n + n, '0');
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) s[perm[i] * n + perm[j]] = '1';
        s[n * n + perm[i]] = static_cast<char>('a' + perm[p.inv[i]]);
    }
    return s;
}

// Labeled bounded lattices on n elements whose index order extends the
// partial order (bottom = 0, top = n-1).
std::vector<std::vector<Bits>> labeled_lattices(int n) {
    std::vector<std::vector<Bits>> out;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i + 1 < n; ++i)
        for (int j = i + 1; j + 1 < n; ++j) pairs.emplace_back(i, j);
    std::vector<Bits> up(n);
    auto base = [&] {
        for (int i = 0; i < n; ++i) up[i] = (Bits{1} << i) | (Bits{1} << (n - 1));
        up[0] = (Bits{1} << n) - 1;
        up[n - 1] = Bits{1} << (n - 1);
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == pairs.size()) {
            // transitivity, then the lattice property
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (has_bit(up[i], j) && (up[j] & ~up[i]) != 0) return;
            std::vector<int> ident(n);
            std::iota(ident.begin(), ident.end(), 0);
            Poset p;
            p.n = n;
            p.up = up;
            p.inv = ident;  // placeholder, not used by try_lattice
            p.bottom = 0;
            p.top = n - 1;
            if (!try_lattice(p)) return;
            out.push_back(up);
            return;
        }
        auto [i, j] = pairs[k];
        self(self, k + 1);
        up[i] |= Bits{1} << j;
        // early transitivity pruning: everything below i must reach j
        bool ok = true;
        for (int x = 0; x < i && ok; ++x)
            if (has_bit(up[x], i) && !has_bit(up[x], j)) ok = false;
        if (ok) self(self, k + 1);
        up[i] &= ~(Bits{1} << j);
    };
    base();
    rec(rec, 0);
    return out;
}

std::vector<std::vector<int>> antitone_involutions(const Poset& p) {
    int n = p.n;
    std::vector<std::vector<int>> out;
    std::vector<int> inv(n, -1);
    inv[0] = n - 1;
    inv[n - 1] = 0;
    auto rec = [&](auto&& self, int x) -> void {
        if (x == n - 1) {
            out.push_back(inv);
            return;
        }
        if (inv[x] >= 0) {
            self(self, x + 1);
            return;
        }
        for (int y = x; y + 1 < n; ++y) {
            if (y != x && inv[y] >= 0) continue;
            // antitone against already-fixed images
            bool ok = true;
            for (int z = 0; z < n && ok; ++z) {
                if (inv[z] < 0) continue;
                if (p.leq(x, z) && !p.leq(inv[z], y)) ok = false;
                if (p.leq(z, x) && !p.leq(y, inv[z])) ok = false;
            }
            if (!ok) continue;
            inv[x] = y;
            inv[y] = x;
            self(self, x + 1);
            inv[x] = inv[y] = -1;
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

std::string canonical_encoding(const Poset& p) {
    int n = p.n;
    // relabelings must fix bottom and top; permute the rest
    std::vector<int> mid;
    for (int i = 0; i < n; ++i)
        if (i != p.bottom && i != p.top) mid.push_back(i);
    std::vector<int> target = mid;
    std::string best;
    std::sort(target.begin(), target.end());
    do {
        std::vector<int> full(n);
        full[p.bottom] = 0;
        if (n > 1) full[p.top] = n - 1;
        for (std::size_t i = 0; i < mid.size(); ++i) full[target[i]] = 1 + static_cast<int>(i);
        std::string s = encode_perm(p, full);
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(target.begin(), target.end()));
    return best;
}

std::vector<Poset> enumerate_models(int n, const EnumerateOptions& opts) {
    std::vector<Poset> out;
    if (n < 2 || n > 10) {
        if (n != 1) throw BudgetExceeded("enumeration supported for n in 1..10");
        return out;
    }
    auto lattices = labeled_lattices(n);
    // candidate (order, involution) pairs
    std::vector<Poset> candidates;
    for (const auto& up : lattices) {
        Poset base;
        base.n = n;
        base.up = up;
        base.bottom = 0;
        base.top = n - 1;
        base.inv.assign(n, 0);
        for (const auto& inv : antitone_involutions(base)) {
            Poset p = base;
            p.inv = inv;
            if (!Poset::check(n, p.up, inv)) candidates.push_back(std::move(p));
        }
    }
    std::vector<std::string> keys(candidates.size());
#ifdef _OPENMP
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < candidates.size(); ++i)
            keys[i] = canonical_encoding(candidates[i]);
    } else
#endif
    {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            keys[i] = canonical_encoding(candidates[i]);
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (seen.insert(keys[i]).second)
            if (!opts.keep || opts.keep(candidates[i])) out.push_back(std::move(candidates[i]));
    return out;
}

std::string census_tsv(int max_n) {
    std::ostringstream out;
    out << "n\tindex\tlattice\tpkl\tkl\tmpkl\tol\toml\tba\tpara\tpom\tsp1\tsp2\tspo\tsp\tdist\tmod\n";
    for (int n = 2; n <= max_n; ++n) {
        auto models = enumerate_models(n);
        int idx = 0;
        for (const auto& p : models) {
            ClassReport r = classify(p);
            auto b = [](bool v) { return v ? "1" : "0"; };
            out << n << "\t" << idx++ << "\t" << b(r.lattice) << "\t" << b(r.pkl) << "\t"
                << b(r.kleene) << "\t" << b(r.mpkl) << "\t" << b(r.ortholattice) << "\t"
                << b(r.oml) << "\t" << b(r.boolean_algebra) << "\t" << b(r.paraorthomodular)
                << "\t" << b(r.pom) << "\t" << b(r.sp1) << "\t" << b(r.sp2) << "\t" << b(r.spo)
                << "\t" << b(r.sp) << "\t" << b(r.distributive) << "\t" << b(r.modular) << "\n";
        }
    }
    return out.str();
}

}  // namespace qops
