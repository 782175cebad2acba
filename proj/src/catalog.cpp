#include "qops/catalog.hpp"

#include <map>
#include <stdexcept>

namespace qops {
namespace {

using LPair = std::pair<const char*, const char*>;

Poset build(const std::vector<std::string>& labels, const std::vector<LPair>& covers,
            const std::vector<LPair>& swaps) {
    int n = static_cast<int>(labels.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[labels[i]] = i;
    std::vector<std::pair<int, int>> cv;
    for (auto [a, b] : covers) cv.emplace_back(idx.at(a), idx.at(b));
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = i;
    for (auto [a, b] : swaps) {
        inv[idx.at(a)] = idx.at(b);
        inv[idx.at(b)] = idx.at(a);
    }
    return Poset::from_covers(n, cv, inv, labels);
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> c;
    auto add = [&](std::string name, std::string note, std::vector<std::string> labels,
                   std::vector<LPair> covers, std::vector<LPair> swaps) {
        c.push_back({std::move(name), std::move(note), build(labels, covers, swaps)});
    };

    add("B2", "two-element Boolean lattice", {"0", "1"}, {{"0", "1"}}, {{"0", "1"}});

    add("K3", "three-element Kleene chain, midpoint fixed by '", {"0", "h", "1"},
        {{"0", "h"}, {"h", "1"}}, {{"0", "1"}});

    add("B4", "four-element Boolean lattice", {"0", "p", "q", "1"},
        {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}}, {{"0", "1"}, {"p", "q"}});

    add("MO2", "modular ortholattice of two incomparable complemented pairs",
        {"0", "a", "ap", "b", "bp", "1"},
        {{"0", "a"}, {"0", "ap"}, {"0", "b"}, {"0", "bp"},
         {"a", "1"}, {"ap", "1"}, {"b", "1"}, {"bp", "1"}},
        {{"0", "1"}, {"a", "ap"}, {"b", "bp"}});

    add("B6", "benzene ring: ortholattice that is not paraorthomodular",
        {"0", "x", "y", "yp", "xp", "1"},
        {{"0", "x"}, {"0", "yp"}, {"x", "y"}, {"yp", "xp"}, {"y", "1"}, {"xp", "1"}},
        {{"0", "1"}, {"x", "xp"}, {"y", "yp"}});

    add("B8", "paraorthomodular, not tame, fails the strong pasting condition",
        {"0", "zp", "x", "yp", "y", "xp", "z", "1"},
        {{"0", "zp"}, {"zp", "x"}, {"zp", "yp"}, {"x", "y"}, {"yp", "xp"},
         {"y", "z"}, {"xp", "z"}, {"z", "1"}},
        {{"0", "1"}, {"z", "zp"}, {"x", "xp"}, {"y", "yp"}});

    add("B8star", "quotient-forbidden configuration failing the second pasting equation",
        {"0", "x", "y", "z", "zp", "yp", "xp", "1"},
        {{"0", "x"}, {"0", "y"}, {"x", "z"}, {"z", "zp"}, {"z", "yp"}, {"y", "zp"},
         {"zp", "xp"}, {"xp", "1"}, {"yp", "1"}},
        {{"0", "1"}, {"x", "xp"}, {"y", "yp"}, {"z", "zp"}});

    add("B10", "ten-element quotient-forbidden configuration",
        {"0", "yp", "m", "x", "p", "q", "xp", "xyp", "y", "1"},
        {{"0", "yp"}, {"0", "m"}, {"0", "x"}, {"yp", "p"}, {"m", "p"}, {"m", "q"},
         {"x", "q"}, {"p", "xp"}, {"p", "xyp"}, {"q", "y"}, {"q", "xyp"},
         {"xp", "1"}, {"xyp", "1"}, {"y", "1"}},
        {{"0", "1"}, {"m", "xyp"}, {"p", "q"}, {"x", "xp"}, {"y", "yp"}});

    add("B", "sharp elements a,b whose meet is not sharp",
        {"0", "bp", "cp", "ap", "a", "b", "c", "1"},
        {{"0", "bp"}, {"0", "cp"}, {"0", "ap"}, {"cp", "a"}, {"cp", "b"},
         {"bp", "c"}, {"cp", "c"}, {"ap", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
        {{"0", "1"}, {"a", "ap"}, {"b", "bp"}, {"c", "cp"}});

    add("C", "satisfies the sharp-meet quasi-equation while a quotient of it does not",
        {"0", "dp", "bp", "cp", "ap", "a", "b", "c", "d", "1"},
        {{"0", "dp"}, {"dp", "bp"}, {"dp", "cp"}, {"dp", "ap"}, {"cp", "a"}, {"cp", "b"},
         {"bp", "c"}, {"cp", "c"}, {"ap", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"},
         {"d", "1"}},
        {{"0", "1"}, {"a", "ap"}, {"b", "bp"}, {"c", "cp"}, {"d", "dp"}});

    add("dmnd_fixpoint", "diamond with a fixed point: C1 and C3 hold for (a,b) but C2 fails",
        {"0", "a", "b", "ap", "1"},
        {{"0", "a"}, {"0", "b"}, {"0", "ap"}, {"a", "1"}, {"b", "1"}, {"ap", "1"}},
        {{"0", "1"}, {"a", "ap"}});

    add("failureFH", "pairwise commuting triple generating a non-distributive sublattice",
        {"0", "a", "b", "c", "d", "ap", "bp", "cp", "1"},
        {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"},
         {"d", "ap"}, {"d", "bp"}, {"d", "cp"}, {"ap", "1"}, {"bp", "1"}, {"cp", "1"}},
        {{"0", "1"}, {"a", "ap"}, {"b", "bp"}, {"c", "cp"}});

    // F1-F11: the twelve-element (and one sixteen-element) separating witnesses.
    // Labels follow the generating terms: yy = y&y', g = top of the generated
    // interval, m = xp&y, p/q/s/t/u/w/e intermediate terms, suffix p marks '.

    add("F1", "ten-element witness collapsing onto B8star",
        {"0", "yy", "s", "yp", "m", "p", "q", "y", "g", "1"},
        {{"0", "yy"}, {"yy", "s"}, {"yy", "yp"}, {"s", "m"}, {"m", "p"}, {"m", "y"},
         {"yp", "p"}, {"p", "q"}, {"q", "g"}, {"y", "g"}, {"g", "1"}},
        {{"0", "1"}, {"y", "yp"}, {"yy", "g"}, {"m", "p"}, {"s", "q"}});

    add("F2", "twelve-element witness, first pasting-failure shape",
        {"0", "yy", "s", "yp", "w", "m", "p", "t", "q", "y", "g", "1"},
        {{"0", "yy"}, {"yy", "yp"}, {"yy", "s"}, {"s", "w"}, {"yp", "p"}, {"w", "p"},
         {"w", "m"}, {"p", "t"}, {"m", "t"}, {"m", "y"}, {"t", "q"}, {"q", "g"},
         {"y", "g"}, {"g", "1"}},
        {{"0", "1"}, {"m", "p"}, {"w", "t"}, {"s", "q"}, {"y", "yp"}, {"yy", "g"}});

    add("F3", "twelve-element witness, second pasting-failure shape",
        {"0", "yy", "z", "yp", "m", "e", "w", "p", "g2", "y", "yyT", "1"},
        {{"0", "yy"}, {"yy", "z"}, {"yy", "yp"}, {"z", "m"}, {"m", "e"}, {"m", "w"},
         {"yp", "e"}, {"e", "p"}, {"w", "p"}, {"w", "y"}, {"p", "g2"}, {"g2", "yyT"},
         {"y", "yyT"}, {"yyT", "1"}},
        {{"0", "1"}, {"z", "g2"}, {"m", "p"}, {"e", "w"}, {"y", "yp"}, {"yy", "yyT"}});

    add("F4", "x-side mirror of F3",
        {"0", "xx", "z", "x", "m", "s", "u", "p", "g", "xp", "xX", "1"},
        {{"0", "xx"}, {"xx", "x"}, {"xx", "z"}, {"z", "m"}, {"m", "s"}, {"m", "u"},
         {"x", "s"}, {"s", "p"}, {"u", "p"}, {"u", "xp"}, {"p", "g"}, {"g", "xX"},
         {"xp", "xX"}, {"xX", "1"}},
        {{"0", "1"}, {"z", "g"}, {"m", "p"}, {"s", "u"}, {"x", "xp"}, {"xx", "xX"}});

    add("F5", "twelve-element witness collapsing onto B10",
        {"0", "c", "yp", "m", "x", "t", "s", "xyp", "xp", "y", "g", "1"},
        {{"0", "c"}, {"c", "yp"}, {"c", "m"}, {"c", "x"}, {"yp", "t"}, {"m", "t"},
         {"m", "s"}, {"x", "s"}, {"t", "xp"}, {"t", "xyp"}, {"s", "xyp"}, {"s", "y"},
         {"xp", "g"}, {"xyp", "g"}, {"y", "g"}, {"g", "1"}},
        {{"0", "1"}, {"c", "g"}, {"m", "xyp"}, {"t", "s"}, {"x", "xp"}, {"y", "yp"}});

    add("F6", "twelve-element witness with both bound terms collapsed on the x side",
        {"0", "xx", "yy", "x", "k", "s", "u", "r", "g", "xp", "xX", "1"},
        {{"0", "xx"}, {"xx", "x"}, {"xx", "yy"}, {"yy", "k"}, {"k", "s"}, {"k", "u"},
         {"x", "s"}, {"s", "r"}, {"u", "r"}, {"u", "xp"}, {"r", "g"}, {"g", "xX"},
         {"xp", "xX"}, {"xX", "1"}},
        {{"0", "1"}, {"yy", "g"}, {"k", "r"}, {"s", "u"}, {"x", "xp"}, {"xx", "xX"}});

    add("F7", "twelve-element witness with x&x' = y&y' at the bottom of the core",
        {"0", "yy", "yp", "m", "s", "t", "q", "u", "xyp", "y", "g", "1"},
        {{"0", "yy"}, {"yy", "yp"}, {"yy", "m"}, {"yy", "s"}, {"yp", "t"}, {"m", "t"},
         {"m", "q"}, {"s", "q"}, {"t", "u"}, {"t", "xyp"}, {"q", "xyp"}, {"q", "y"},
         {"u", "g"}, {"xyp", "g"}, {"y", "g"}, {"g", "1"}},
        {{"0", "1"}, {"yy", "g"}, {"m", "xyp"}, {"s", "u"}, {"t", "q"}, {"y", "yp"}});

    add("F8", "twelve-element witness, y-side interval shape",
        {"0", "yy", "c", "yp", "h", "e", "w", "t", "g", "y", "yY", "1"},
        {{"0", "yy"}, {"yy", "yp"}, {"yy", "c"}, {"c", "h"}, {"h", "e"}, {"h", "w"},
         {"yp", "e"}, {"e", "t"}, {"w", "t"}, {"w", "y"}, {"t", "g"}, {"g", "yY"},
         {"y", "yY"}, {"yY", "1"}},
        {{"0", "1"}, {"yy", "yY"}, {"c", "g"}, {"e", "w"}, {"h", "t"}, {"y", "yp"}});

    add("F8star", "x-side variant of F8",
        {"0", "xx", "c", "x", "k", "s", "u", "r", "g", "xp", "xX", "1"},
        {{"0", "xx"}, {"xx", "x"}, {"xx", "c"}, {"c", "k"}, {"k", "s"}, {"k", "u"},
         {"x", "s"}, {"s", "r"}, {"u", "r"}, {"u", "xp"}, {"r", "g"}, {"g", "xX"},
         {"xp", "xX"}, {"xX", "1"}},
        {{"0", "1"}, {"c", "g"}, {"k", "r"}, {"s", "u"}, {"x", "xp"}, {"xx", "xX"}});

    add("F9", "twelve-element witness with all four bound terms collapsed",
        {"0", "c", "e", "m", "s", "t", "q", "u", "xyp", "w", "g", "1"},
        {{"0", "c"}, {"c", "e"}, {"c", "m"}, {"c", "s"}, {"e", "t"}, {"m", "t"},
         {"m", "q"}, {"s", "q"}, {"t", "u"}, {"t", "xyp"}, {"q", "xyp"}, {"q", "w"},
         {"u", "g"}, {"xyp", "g"}, {"w", "g"}, {"g", "1"}},
        {{"0", "1"}, {"c", "g"}, {"m", "xyp"}, {"e", "w"}, {"s", "u"}, {"t", "q"}});

    add("F10", "twelve-element witness built from a commuting-pair relativization",
        {"0", "yy", "c", "yp", "ap", "e2", "w", "a", "g", "y", "yY", "1"},
        {{"0", "yy"}, {"yy", "yp"}, {"yy", "c"}, {"c", "ap"}, {"ap", "e2"}, {"ap", "w"},
         {"yp", "e2"}, {"e2", "a"}, {"w", "a"}, {"w", "y"}, {"a", "g"}, {"g", "yY"},
         {"y", "yY"}, {"yY", "1"}},
        {{"0", "1"}, {"yy", "yY"}, {"c", "g"}, {"a", "ap"}, {"e2", "w"}, {"y", "yp"}});

    add("F11", "sixteen-element witness collapsing onto B10",
        {"0", "c", "p1", "ap", "p2", "e1", "e2", "m", "j", "u1", "u2", "a", "q1", "q2",
         "g", "1"},
        {{"0", "c"}, {"c", "p1"}, {"c", "ap"}, {"c", "p2"}, {"p1", "e1"}, {"p2", "e2"},
         {"ap", "e1"}, {"ap", "e2"}, {"ap", "m"}, {"m", "u1"}, {"m", "u2"},
         {"e1", "u1"}, {"e1", "j"}, {"e2", "u2"}, {"e2", "j"}, {"u1", "q1"},
         {"u1", "a"}, {"u2", "q2"}, {"u2", "a"}, {"j", "a"}, {"q1", "g"}, {"q2", "g"},
         {"a", "g"}, {"g", "1"}},
        {{"0", "1"}, {"c", "g"}, {"a", "ap"}, {"m", "j"}, {"p1", "q2"}, {"p2", "q1"},
         {"e1", "u2"}, {"e2", "u1"}});

    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = make_catalog();
    return c;
}

const CatalogEntry& catalog_get(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw std::out_of_range("unknown catalog name: " + name);
}

bool catalog_has(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return true;
    return false;
}

}  // namespace qops
