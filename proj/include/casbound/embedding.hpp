#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "casbound/subalgebra.hpp"

namespace casbound {

// An embedding h -> g described by the restriction matrix R acting on
// fundamental-weight coordinates: an integral g-weight w restricts to the
// h-weight R*w.  R may have denominator 2 on spinor columns; a weight whose
// image is non-integral does not occur in any module of the corresponding
// group pair and branches to zero.
//
// killing_index[i] relates the Killing form of g restricted to the i-th
// simple component to that component's own Killing form; torus_c and
// torus_aux do the same for the central torus.  Together they give the
// Casimir of an h-module with respect to -B_g via casimir_h().
class Embedding {
  public:
    const RootSystem* g = nullptr;
    Subalgebra h;
    std::vector<std::vector<int>> R_num;  // (h.total_rank) x (g->rank)
    int R_den = 1;

    std::vector<Rat> killing_index;
    Rat torus_c = 0;
    std::vector<std::vector<Rat>> torus_aux;

    Decomposition ad_branch;  // decomposition of ad(g) restricted to h
    Decomposition isotropy;   // ad_branch minus ad(h)

    std::optional<Weight> map_weight(const Weight& gw) const;
    Rat casimir_h(const Weight& hw) const;  // Casimir w.r.t. -B_g
    std::string key() const;                // stable identity for caching

    mutable std::mutex cache_mu;
    mutable std::unordered_map<Weight, Decomposition, WeightHash> branch_cache;
};

using EmbeddingPtr = std::shared_ptr<Embedding>;

// Finalize an embedding given its restriction matrix: computes the adjoint
// branching, checks that each simple component's adjoint occurs, and derives
// killing indices and torus constants.
EmbeddingPtr make_embedding(LieType g, Subalgebra h, std::vector<std::vector<int>> R_num,
                            int R_den = 1);

// R from the h-decomposition of the defining module of a classical g
// (A: su, B/D: so, C: sp).  Each entry is an h-weight with multiplicity; the
// multiset must be closed under negation for B/C/D and sum to zero for A.
EmbeddingPtr restriction_from_defining(LieType g, Subalgebra h,
                                       const std::vector<std::pair<Weight, int>>& defining);

// Regular subalgebra: the i-th flat coordinate of h corresponds to a root
// beta_i of g given in fundamental coordinates; torus rows are explicit
// integer rows annihilating the chosen roots.
EmbeddingPtr regular_subalgebra(LieType g, Subalgebra h, const std::vector<Weight>& h_simple_roots,
                                const std::vector<Weight>& torus_rows = {});

// Composite g > k > h from outer: k -> g and one inner embedding per simple
// component of outer.h (nullptr keeps a component as it is).  Torus charges
// of the outer embedding are appended after the inner tori.
EmbeddingPtr compose(const EmbeddingPtr& outer, const std::vector<EmbeddingPtr>& inner);

// Restriction of V_gamma to h; memoized per embedding, exact.
const Decomposition& branch(const Embedding& emb, const Weight& gamma);

long long trivial_multiplicity(const Embedding& emb, const Weight& gamma);

// dim Hom_H(V_gamma|_h, M) for a completely reducible M
long long hom_dim(const Embedding& emb, const Weight& gamma, const Decomposition& M);

}  // namespace casbound
