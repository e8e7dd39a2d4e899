#pragma once

#include <memory>
#include <vector>

#include "casbound/types.hpp"

namespace casbound {

// Immutable data of a simple root system in Bourbaki numbering.  All vectors
// live in fundamental-weight coordinates: the simple root alpha_i equals row i
// of the Cartan matrix (cartan[i][j] = <alpha_i, alpha_j^vee>).  The invariant
// form is normalised so that short roots have (alpha, alpha) = 2; its Gram
// matrix on fundamental weights is gram = cartan^{-1} * diag(d), d_i =
// (alpha_i, alpha_i)/2.
struct RootSystem {
    LieType type;
    int rank;
    std::vector<std::vector<int>> cartan;
    std::vector<int> d;                       // half squared root lengths
    std::vector<std::vector<Rat>> gram;       // symmetric, rational
    std::vector<std::vector<Rat>> cartan_inv;
    long gram_den;                            // lcm of gram denominators
    std::vector<std::vector<long>> gram_num;  // gram * gram_den, integral

    std::vector<Weight> positive_roots;       // fundamental coords
    // coroot_pairing[k] = v with v.a = <a, alpha_k^vee> for positive root k
    std::vector<Weight> coroot_pairing;
    std::vector<int> root_d;                  // (alpha_k, alpha_k)/2
    Weight highest_root;                      // = adjoint highest weight
    Rat adjoint_raw;                          // <theta, theta + 2 delta>
    Int weyl_order;

    // (x, alpha_k) in the short-root-=2 normalisation; exact integer.
    long long pairing_with_root(const Weight& x, int k) const;
    // <x + 2 delta, x> * gram_den, exact integer (delta = sum of fund weights)
    long long raw_casimir_scaled(const Weight& x) const;
    Rat raw_casimir(const Weight& x) const;       // <x, x + 2 delta>
    Rat casimir_normalized(const Weight& x) const;   // raw / adjoint_raw
    Rat inner(const Weight& x, const Weight& y) const;

    bool is_dominant(const Weight& w) const;
    // Reflect w into the dominant chamber; sign accumulates (-1) per
    // reflection.  Returns false iff w is fixed by some reflection (a zero
    // coordinate is reached), in which case sign is meaningless.
    bool dominantize(Weight& w, int& sign) const;
    Weight dominant_rep(Weight w) const;

    Weight dual_weight(const Weight& w) const;    // -w0 * w
    Int orbit_size(const Weight& dominant) const; // |W| / |W_stab|

    Int weyl_dim(const Weight& hw) const;
    Weight zero() const { return Weight(rank, 0); }
};

// Cached, thread-safe accessor.
const RootSystem& root_system(LieType t);

Int weyl_group_order(LieType t);

// All dominant weights w with casimir_normalized(w) <= bound, sorted by
// (raw casimir, lex).  Includes 0.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, const Rat& bound);

}  // namespace casbound
