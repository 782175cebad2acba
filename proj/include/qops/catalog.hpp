#pragma once

#include <string>
#include <vector>

#include "qops/poset.hpp"

// Built-in library of small named structures: the standard generators
// (chains, Boolean cubes, the three-element Kleene chain, MO2), the forbidden
// configurations used by the classification theorems, and the twelve-or-so
// witnesses that separate nearby classes.

namespace qops {

struct CatalogEntry {
    std::string name;
    std::string note;  // one-line description of what the structure witnesses
    Poset poset;
};

const std::vector<CatalogEntry>& catalog();

// Lookup by name; throws std::out_of_range on unknown names.
const CatalogEntry& catalog_get(const std::string& name);

bool catalog_has(const std::string& name);

}  // namespace qops
