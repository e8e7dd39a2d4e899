#pragma once

#include <functional>
#include <string>

#include "casbound/embedding.hpp"

namespace casbound {

// A homogeneous space G/H from the catalog or a user config.  The embedding
// is resolved lazily: building one involves branching the full adjoint
// representation, which is costly for the largest catalog entries.
struct SpaceSpec {
    std::string name;
    std::string family;           // "I".."XIX", "exceptional" or "config"
    std::vector<int> parameters;  // family parameters, empty for exceptions
    bool sphere = false;          // round sphere: tt-check does not apply
    bool reconstructed = false;   // provenance: enumerated from a table row group
    LieType g{Series::A, 1};
    std::string h_label;          // human-readable description of h

    std::function<EmbeddingPtr()> make;
    mutable EmbeddingPtr emb;

    // Resolve (and memoize) the embedding; thread safe.
    const Embedding& embedding() const;
};

struct EinsteinData {
    Decomposition isotropy;  // complexified isotropy module m
    Rat common_casimir;      // Casimir eigenvalue c on every summand
    Rat einstein_constant;   // E = 1/4 + c/2
    Int dim_m;
};

struct NotEinstein : CasboundError {
    std::vector<Rat> values;  // the distinct Casimir eigenvalues found
    explicit NotEinstein(std::vector<Rat> vals);
};

// Verifies that all isotropy summands share one Casimir eigenvalue and
// returns the Einstein data of the standard metric.
EinsteinData einstein_check(const SpaceSpec& space);

// Parse a JSON space config.  Schema (unknown keys are rejected):
//   {
//     "name": "so7_g2",
//     "g": "B3",
//     "h": {
//       "simple": ["G2"],              // simple component types, in order
//       "torus_rank": 0,               // optional, default 0
//       // exactly one of:
//       "defining": [{"weight": [1,0], "mult": 1}, ...],
//       "restriction_matrix": {"num": [[..]], "den": 1}
//     },
//     "sphere": false                  // optional
//   }
// "defining" lists the highest weights of the defining module of g as flat
// h-weights (component coordinates concatenated, then torus charges).
SpaceSpec load_space(const std::string& config_text);

// The shipped catalog (immutable after first call; thread safe).
const std::vector<SpaceSpec>& catalog();

// Lookup by name; throws UnknownSpace.
struct UnknownSpace : CasboundError {
    using CasboundError::CasboundError;
};
const SpaceSpec& find_space(const std::string& name);

}  // namespace casbound
