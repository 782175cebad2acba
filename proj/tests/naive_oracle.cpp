#include "naive_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace qops::testing {

namespace {

std::string encode(const Poset& p, const std::vector<int>& perm) {
    // perm maps old index -> new index
    int n = p.n;
    std::string s(n * n + n, '0');
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) s[perm[i] * n + perm[j]] = '1';
        s[n * n + perm[i]] = static_cast<char>('a' + perm[p.inv[i]]);
    }
    return s;
}

std::string canonical(const Poset& p) {
    int n = p.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s = encode(p, perm);
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Poset> naive_enumerate(int n) {
    std::vector<Poset> out;
    if (n < 2) return out;
    int m = n - 2;  // indices 1..n-2 are the middle, 0 = bottom, n-1 = top
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);
    long long total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;

    std::set<std::string> seen;
    for (long long code = 0; code < total; ++code) {
        std::vector<Bits> up(n);
        for (int i = 0; i < n; ++i) up[i] = Bits{1} << i;
        for (int i = 0; i < n; ++i) up[0] |= Bits{1} << i;  // bottom below all
        for (int i = 0; i < n; ++i) up[i] |= Bits{1} << (n - 1);  // top above all
        long long c = code;
        for (auto [i, j] : pairs) {
            switch (c % 3) {
                case 1: up[i] |= Bits{1} << j; break;
                case 2: up[j] |= Bits{1} << i; break;
                default: break;
            }
            c /= 3;
        }
        // transitivity must already hold (no closure: reject non-transitive)
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j)
                if (has_bit(up[i], j) && (up[j] & ~up[i]) != 0) transitive = false;
        if (!transitive) continue;
        bool antisym = true;
        for (int i = 0; i < n && antisym; ++i)
            for (int j = i + 1; j < n && antisym; ++j)
                if (has_bit(up[i], j) && has_bit(up[j], i)) antisym = false;
        if (!antisym) continue;

        // every involution: permutations with p*p = id
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool inv_ok = true;
            for (int i = 0; i < n && inv_ok; ++i)
                if (perm[perm[i]] != i) inv_ok = false;
            if (!inv_ok) continue;
            if (auto err = Poset::check(n, up, perm)) continue;
            Poset p = Poset::validate(n, up, perm);
            if (!try_lattice(p)) continue;
            if (seen.insert(canonical(p)).second) out.push_back(p);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

}  // namespace qops::testing
