#pragma once

#include <stdexcept>
#include <string>

#include "qops/poset.hpp"

// Textual structure files ("ilat" format):
//
//   ilat <n>
//   names a b c ...          (optional, n whitespace-free tokens)
//   covers
//   <i> <j>                  (i covered by j, repeated)
//   end
//   inv p0 p1 ... p(n-1)
//   bottom <i>
//   top <i>
//
// emit() produces a canonical form (sorted cover pairs) that re-parses to the
// same structure and round-trips byte-identically.

namespace qops {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

Poset parse_ilat(const std::string& text);
Poset load_ilat(const std::string& path);
std::string emit_ilat(const Poset& p);

// Hasse diagram in Graphviz syntax; involution shown as dashed edges.
std::string to_dot(const Poset& p);

}  // namespace qops
