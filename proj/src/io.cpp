#include "qops/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qops {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

}  // namespace

Poset parse_ilat(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::vector<std::string>& tok) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            tok = tokens(line);
            if (!tok.empty() && tok[0][0] != '#') return true;
        }
        return false;
    };

    std::vector<std::string> tok;
    if (!next_line(tok) || tok.size() != 2 || tok[0] != "ilat")
        throw ParseError(lineno, "expected header 'ilat <n>'");
    int n = 0;
    try {
        n = std::stoi(tok[1]);
    } catch (...) {
        throw ParseError(lineno, "bad element count");
    }
    if (n < 1 || n > 64) throw ParseError(lineno, "element count must be in 1..64");

    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    std::vector<int> inv;
    bool saw_covers = false, saw_inv = false;
    int bottom = -1, top = -1;

    auto parse_index = [&](const std::string& s) {
        int v;
        try {
            v = std::stoi(s);
        } catch (...) {
            throw ParseError(lineno, "expected element index, got '" + s + "'");
        }
        if (v < 0 || v >= n) throw ParseError(lineno, "index out of range: " + s);
        return v;
    };

    while (next_line(tok)) {
        if (tok[0] == "names") {
            if (static_cast<int>(tok.size()) != n + 1)
                throw ParseError(lineno, "names line must list exactly n tokens");
            labels.assign(tok.begin() + 1, tok.end());
        } else if (tok[0] == "covers") {
            saw_covers = true;
            while (next_line(tok)) {
                if (tok[0] == "end") break;
                if (tok.size() != 2) throw ParseError(lineno, "cover lines are '<i> <j>'");
                covers.emplace_back(parse_index(tok[0]), parse_index(tok[1]));
            }
        } else if (tok[0] == "inv") {
            if (static_cast<int>(tok.size()) != n + 1)
                throw ParseError(lineno, "inv line must list a permutation of 0..n-1");
            saw_inv = true;
            inv.clear();
            for (int i = 1; i <= n; ++i) inv.push_back(parse_index(tok[i]));
        } else if (tok[0] == "bottom") {
            if (tok.size() != 2) throw ParseError(lineno, "bottom line is 'bottom <i>'");
            bottom = parse_index(tok[1]);
        } else if (tok[0] == "top") {
            if (tok.size() != 2) throw ParseError(lineno, "top line is 'top <i>'");
            top = parse_index(tok[1]);
        } else {
            throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!saw_covers) throw ParseError(lineno, "missing covers block");
    if (!saw_inv) throw ParseError(lineno, "missing inv line");

    Poset p = Poset::from_covers(n, covers, inv, labels);
    if (bottom >= 0 && bottom != p.bottom) throw ParseError(lineno, "declared bottom is wrong");
    if (top >= 0 && top != p.top) throw ParseError(lineno, "declared top is wrong");
    return p;
}

Poset load_ilat(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_ilat(buf.str());
}

std::string emit_ilat(const Poset& p) {
    std::ostringstream out;
    out << "ilat " << p.n << "\n";
    bool named = false;
    for (int i = 0; i < p.n; ++i)
        if (!p.label(i).empty()) named = true;
    if (named) {
        out << "names";
        for (int i = 0; i < p.n; ++i) {
            std::string l = p.label(i);
            if (l.empty()) l = "e" + std::to_string(i);
            out << " " << l;
        }
        out << "\n";
    }
    out << "covers\n";
    auto cv = p.cover_pairs();
    std::sort(cv.begin(), cv.end());
    for (auto [a, b] : cv) out << a << " " << b << "\n";
    out << "end\n";
    out << "inv";
    for (int i = 0; i < p.n; ++i) out << " " << p.inv[i];
    out << "\n";
    out << "bottom " << p.bottom << "\n";
    out << "top " << p.top << "\n";
    return out.str();
}

std::string to_dot(const Poset& p) {
    std::ostringstream out;
    out << "graph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int i = 0; i < p.n; ++i) {
        std::string l = p.label(i);
        if (l.empty()) l = std::to_string(i);
        out << "  n" << i << " [label=\"" << l << "\"];\n";
    }
    auto cv = p.cover_pairs();
    std::sort(cv.begin(), cv.end());
    for (auto [a, b] : cv) out << "  n" << a << " -- n" << b << ";\n";
    for (int i = 0; i < p.n; ++i)
        if (p.inv[i] >= i && !(i == p.bottom && p.inv[i] == p.top))
            out << "  n" << i << " -- n" << p.inv[i] << " [style=dashed, constraint=false];\n";
    out << "}\n";
    return out.str();
}

}  // namespace qops
