#pragma once

#include <optional>
#include <string>

#include "casbound/space.hpp"

namespace casbound {

// Sym²₀m as an h-module and Sym²₀g as a g-module: the full symmetric squares
// with one trivial summand removed on each side (the invariant metric and the
// Killing form respectively).
struct Sym2Isotypes {
    Decomposition m_isotypes;  // h-isotypes v_i of Sym²₀m, with multiplicity
    Decomposition g_isotypes;  // g-isotypes w_j of Sym²₀g
};

// Per-isotype operator bounds on Sym²₀m.  A*A is the nonnegative zeroth-order
// torsion term of the canonical connection; on the isotype v it is bounded
// through the Casimirs of the g-isotypes w_j branching onto v:
//   A*A = Cas^g_{Sym²g} − Cas^h_{Sym²m} − 4E + 1   (restricted to v),
// and the curvature term satisfies K(R) ≥ cas_h + aa_min/4.
struct IsotypeBounds {
    Weight v;                // h-isotype of Sym²₀m
    Rat cas_h;               // Cas^h on v, normalised to -B_g
    std::vector<Weight> J;   // g-isotypes of Sym²₀g whose branching contains v
    Rat aa_min;              // max(0, min_j Cas^g(w_j) − cas_h − 4E + 1)
    Rat aa_max;              // max_j Cas^g(w_j) − cas_h − 4E + 1
    Rat kr_min;              // cas_h + aa_min/4
    bool curvature_safe;     // kr_min > E
};

enum class Verdict {
    RuledOutEmpty,         // hom_sym = 0: the mode does not appear in Sym²₀m
    RuledOutCurvature,     // every isotype met by the mode has K(R) > E
    RuledOutNoTT,          // no tt-tensors in the mode (divergence sequence)
    StableBound,           // refined (or exact crude) bound exceeds 2E
    SemistableBound,       // refined bound equals 2E exactly
    PotentialInstability,  // refined bound below 2E
};

std::string verdict_str(Verdict v);

// The four Casimir extrema entering the refined estimate
//   (3/2)cas_gamma − (1/2)u_max + w_min − (3/2)v_max − 2E + 1/2.
struct RefinedTerms {
    Rat cas_gamma;  // Cas^g on V_γ
    Rat u_max;      // λ_max[Cas^g on V_γ ⊗ Sym²g restricted to 𝒰]
    Rat w_min;      // λ_min[Cas^g on Sym²g restricted to 𝒲]
    Rat v_max;      // λ_max[Cas^h on Sym²m restricted to 𝒱]
};

struct ModeReport {
    Weight gamma;
    Rat cas_g;
    long long hom_m = 0;    // dim Hom_H(V_γ, m)
    long long hom_sym = 0;  // dim Hom_H(V_γ, Sym²₀m)
    Verdict verdict = Verdict::RuledOutEmpty;
    std::optional<Rat> bound;  // refined lower bound for Δ_L|_γ − nothing
    std::optional<RefinedTerms> refined_terms;
};

enum class Summary {
    StableByCurvature,       // SC
    StableByFourier,         // SF
    SemistableByFourier,     // SF₀
    PotentialInstabilities,  // unresolved modes remain
};

std::string summary_str(Summary s);

struct StabilityReport {
    std::string space;
    Rat einstein_constant;
    Rat cutoff;  // crude cutoff C: modes with Cas > C are stable
    std::vector<IsotypeBounds> isotypes;
    std::vector<ModeReport> modes;  // ascending Cas^g order
    Summary summary = Summary::StableByFourier;
    bool partial = false;  // truncated by max_modes

    // modes with verdict PotentialInstability or SemistableBound, in order
    std::vector<const ModeReport*> unresolved() const;
};

// Step 3: isotype decompositions of Sym²₀m and Sym²₀g.
Sym2Isotypes sym2_isotypes(const SpaceSpec& space);

// Steps 4-5: A*A and curvature bounds per h-isotype of Sym²₀m.
std::vector<IsotypeBounds> aa_and_curvature_bounds(const SpaceSpec& space);

// Step 7: the crude cutoff C.  With a = ½·min of the formal (unclamped)
// per-isotype A*A lower bound, b = max aa_max and c = min cas_h, C is the
// smallest rational (after outward rounding of the square root, denominator
// ≤ 10⁶) such that x + a − sqrt(b·max(0,x−c)) > 2E whenever x > C.  The
// clamped aa_min enters only the curvature bound kr_min; using the formal
// value here widens the candidate window so boundary modes stay in play for
// the exact per-mode analysis.
Rat crude_cutoff(const SpaceSpec& space, const std::vector<IsotypeBounds>& bounds);

// Step 8: all dominant g-weights with Cas ≤ C, ascending.
std::vector<Weight> candidate_modes(const SpaceSpec& space, const Rat& cutoff);

// tt check of §5: true iff the mode carries no tt-tensors, i.e.
// hom_sym − hom_m equals 0 (γ ≠ λ_ad) or −1 (γ = λ_ad).  Not applicable to
// round spheres.
bool tt_check(const SpaceSpec& space, const Weight& gamma);

// Steps 9(c)-(h): the refined lower bound for Δ_L|_γ − nothing; requires
// hom_sym(γ) > 0.  Optionally reports the four extrema.
Rat refined_bound(const SpaceSpec& space, const Weight& gamma, RefinedTerms* terms = nullptr);

struct AnalyzeOptions {
    int jobs = 1;
    long long max_modes = -1;  // cap on analysed modes, -1 = no cap
};

// The full algorithm.  Per mode the elimination cascade is: hom_sym = 0 →
// RuledOutEmpty; all met isotypes curvature safe → RuledOutCurvature; tt
// check → RuledOutNoTT; then the refined bound against 2E.  Summary is SC
// when every isotype is curvature safe (no mode enumeration), SF when all
// modes are eliminated or stable, SF₀ when the only unresolved modes sit at
// exactly 2E.
StabilityReport analyze(const SpaceSpec& space, const AnalyzeOptions& opts = {});

}  // namespace casbound
