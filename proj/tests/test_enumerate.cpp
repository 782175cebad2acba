#include <doctest.h>

#include <algorithm>
#include <random>

#include "naive_oracle.hpp"
#include "qops/catalog.hpp"
#include "qops/classify.hpp"
#include "qops/enumerate.hpp"
#include "qops/subalg.hpp"

using namespace qops;

TEST_CASE("model counts match the independent naive enumerator up to n = 6") {
    for (int n = 2; n <= 6; ++n) {
        auto fast = enumerate_models(n);
        auto slow = testing::naive_enumerate(n);
        CHECK_MESSAGE(fast.size() == slow.size(), "n=", n, " fast=", fast.size(),
                      " slow=", slow.size());
        // and the classes themselves match, not just the counts
        for (const Poset& p : fast) {
            bool found = false;
            for (const Poset& q : slow) found |= find_orthoisomorphism(p, q).has_value();
            CHECK_MESSAGE(found, "n=", n);
        }
    }
}

TEST_CASE("canonical encoding is invariant under relabeling") {
    std::mt19937_64 rng(5);
    for (const char* name : {"B6", "B8", "B", "dmnd_fixpoint"}) {
        const Poset& p = catalog_get(name).poset;
        std::string enc = canonical_encoding(p);
        for (int trial = 0; trial < 10; ++trial) {
            // random permutation of the middle elements
            std::vector<int> perm(p.n);
            for (int i = 0; i < p.n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::swap(perm[std::find(perm.begin(), perm.end(), p.bottom) - perm.begin()],
                      perm[p.bottom]);
            std::swap(perm[std::find(perm.begin(), perm.end(), p.top) - perm.begin()],
                      perm[p.top]);
            std::vector<Bits> up(p.n, 0);
            std::vector<int> inv(p.n, 0);
            for (int i = 0; i < p.n; ++i) {
                for (int j = 0; j < p.n; ++j)
                    if (p.leq(i, j)) up[perm[i]] |= Bits{1} << perm[j];
                inv[perm[i]] = perm[p.inv[i]];
            }
            Poset q = Poset::validate(p.n, up, inv);
            CHECK(canonical_encoding(q) == enc);
        }
    }
}

TEST_CASE("parallel and serial enumeration agree") {
    for (int n = 2; n <= 7; ++n) {
        EnumerateOptions ser, par;
        ser.parallel = false;
        par.parallel = true;
        CHECK(enumerate_models(n, ser).size() == enumerate_models(n, par).size());
    }
}

TEST_CASE("class filters restrict the stream") {
    EnumerateOptions oml_only;
    oml_only.keep = [](const Poset& p) { return check_class(p, "oml").ok; };
    auto all = enumerate_models(6);
    auto omls = enumerate_models(6, oml_only);
    CHECK(omls.size() < all.size());
    for (const Poset& p : omls) CHECK(check_class(p, "oml").ok);
}

TEST_CASE("census output has one line per class plus a header") {
    std::string tsv = census_tsv(4);
    std::size_t lines = std::count(tsv.begin(), tsv.end(), '\n');
    std::size_t classes = 0;
    for (int n = 2; n <= 4; ++n) classes += enumerate_models(n).size();
    CHECK(lines == classes + 1);
}
