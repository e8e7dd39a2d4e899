#pragma once

#include <string>

#include "casbound/stability.hpp"

namespace casbound {

// One row of the hand-tabulated verdict tables that the engine is expected
// to reproduce.  Modes are recorded as compact labels ("0", "w2", "2w1+w2")
// in fundamental-weight coordinates of g; the semistable list is the subset
// whose refined bound sits exactly at 2E.
struct GoldenRow {
    int table = 0;        // 3..9, grouping of the tabulated results
    std::string space;    // catalog name
    Rat E;                // Einstein constant of the standard metric
    std::vector<std::string> modes;       // listed potential instabilities
    std::vector<std::string> semistable;  // subset marked semistable
    std::string note;     // "SC", "SF", "SF0" or "" (unresolved modes listed)
};

const std::vector<GoldenRow>& golden_rows();

// "2w1+w2" -> (2,1,0,...) at the given rank; "0" -> zero weight.
Weight mode_from_label(int rank, const std::string& label);

// Canonical representative of the diagram-automorphism orbit: A-series
// duality (coordinate reversal), D4 triality (permutations of w1, w3, w4),
// D_n (n >= 5) spin flip.  Tables list modes up to this closure.
Weight closure_canonical(const LieType& g, Weight w);

struct RowCheck {
    std::string space;
    bool pass = true;
    std::vector<std::string> diffs;  // failures, human readable
    std::vector<std::string> audit;  // extra semistable modes, flagged only
};

// Analyze the row's space and compare against the golden data.  A listed
// mode must come out PotentialInstability (or SemistableBound, which is
// recorded as an audit flag); no unlisted mode may be PotentialInstability;
// semistable-marked modes must come out SemistableBound exactly.  Extra
// SemistableBound modes are audit-flagged, not failures: the refined bound
// landing exactly on 2E is the conservative side of the estimate.
RowCheck verify_row(const GoldenRow& row, const AnalyzeOptions& opts = {});

// All rows of one table with rank(g) <= rank_limit.
std::vector<RowCheck> verify_table(int table, int rank_limit = 12,
                                   const AnalyzeOptions& opts = {});

const GoldenRow& golden_row(const std::string& space);

}  // namespace casbound
