#pragma once

#include <unordered_map>
#include <vector>

#include "casbound/root_system.hpp"

namespace casbound {

// A W-invariant character recorded on dominant weights only; the multiplicity
// of any other weight is that of its dominant representative.
using DomChar = std::unordered_map<Weight, long long, WeightHash>;

// Multiplicity decomposition of a (virtual) module, sorted by descending
// (raw casimir, lex) of the highest weight.
using Decomposition = std::vector<std::pair<Weight, long long>>;

// Freudenthal's recursion; memoized, thread safe.
const DomChar& dominant_character(const RootSystem& rs, const Weight& hw);

Int char_dim(const RootSystem& rs, const DomChar& ch);

// Stream the full weight multiset of V_hw as (weight, multiplicity) with each
// Weyl orbit expanded.
void for_each_weight(const RootSystem& rs, const Weight& hw,
                     const std::function<void(const Weight&, long long)>& fn);

// Iterated highest-weight extraction.  Throws on a negative residue (the
// input was not a genuine character).
Decomposition decompose_character(const RootSystem& rs, DomChar ch);

// Klimyk's formula; expands the smaller factor.
Decomposition tensor_decompose(const RootSystem& rs, const Weight& a, const Weight& b);

// Adams-operation split of V_hw (x) V_hw.
struct Sym2Alt2 {
    Decomposition sym;
    Decomposition alt;
};
Sym2Alt2 sym2_alt2(const RootSystem& rs, const Weight& hw);

// Sym^2 of a completely reducible module given by its decomposition.
Decomposition sym2_of_module(const RootSystem& rs, const Decomposition& mod);

}  // namespace casbound
