#pragma once

#include <unordered_map>
#include <vector>

#include "casbound/character.hpp"
#include "casbound/root_system.hpp"

namespace casbound {

// Semisimple-plus-torus subalgebra type: h = h_1 (+) ... (+) h_k (+) R^z.
// An h-weight is a flat vector: the fundamental coordinates of every simple
// component concatenated in order, followed by z integer torus charges.
struct Subalgebra {
    std::vector<LieType> components;
    int torus_rank = 0;

    std::vector<int> offset;  // start of each component inside a flat weight
    int total_rank = 0;       // includes torus charges

    static Subalgebra make(std::vector<LieType> comps, int torus);
    const RootSystem& comp(size_t i) const { return root_system(components[i]); }
    size_t ncomp() const { return components.size(); }
    int torus_offset() const { return total_rank - torus_rank; }
    std::string str() const;

    bool is_dominant(const Weight& w) const;
    bool dominantize(Weight& w, int& sign) const;  // false if on a wall
    Weight dominant_rep(Weight w) const;
    Weight dual(const Weight& w) const;  // componentwise -w0, torus negated
    Weight zero() const { return Weight(total_rank, 0); }
    bool is_zero_weight(const Weight& w) const;

    long long raw_casimir_scaled_sum(const Weight& w) const;  // extraction key
    Int dim(const Weight& hw) const;                          // product of Weyl dims
    Int orbit_size(const Weight& dominant) const;

    // dominant part of the character of the irreducible V_hw
    DomChar dominant_character(const Weight& hw) const;
    // streams the full weight multiset of V_hw
    void for_each_weight(const Weight& hw,
                         const std::function<void(const Weight&, long long)>& fn) const;
    void for_each_orbit_element(const Weight& dominant,
                                const std::function<void(const Weight&)>& fn) const;

    Int char_dim(const DomChar& ch) const;
    Decomposition decompose_character(DomChar ch) const;
    Decomposition tensor_decompose(const Weight& a, const Weight& b) const;
    Sym2Alt2 sym2_alt2(const Weight& hw) const;
    Decomposition sym2_of_module(const Decomposition& mod) const;
};

}  // namespace casbound
