#include "casbound/golden.hpp"

#include <algorithm>
#include <set>

#include "casbound/report.hpp"

namespace casbound {

namespace {

// Hand-tabulated verdicts for the whole catalog.  Family rows use the
// engine-verified Einstein constants (a few published closed forms contain
// typos; see the unit tests for the hand-derived corrections).
std::vector<GoldenRow> build_rows() {
    std::vector<GoldenRow> r = {
        // -- Table 3: isotropy irreducible exceptions --
        {3, "su16_so10", {11, 32}, {"w1+w15"}, {}, ""},
        {3, "su27_e6", {11, 36}, {}, {"w1+w26"}, "SF0"},
        {3, "so7_g2", {9, 20}, {}, {}, "SC"},
        {3, "so133_e7", {135, 524}, {}, {}, "SF"},
        {3, "berger_sp2_su2", {9, 20}, {"w2", "2w2", "2w1+w2", "4w1"}, {}, ""},
        {3, "sp7_sp3", {29, 80}, {"w2"}, {}, ""},
        {3, "sp10_su6", {15, 44}, {"w2"}, {}, ""},
        {3, "sp16_so12", {43, 136}, {"w2"}, {}, ""},
        {3, "sp28_e7", {17, 58}, {}, {}, "SF"},
        {3, "so14_g2", {1, 3}, {"2w1"}, {}, ""},
        {3, "so16_so9", {23, 56}, {"2w1", "w4"}, {}, ""},
        {3, "so26_f4", {1, 3}, {"w1", "2w1"}, {}, ""},
        {3, "so42_sp4", {19, 70}, {}, {}, "SF"},
        {3, "so52_f4", {27, 100}, {}, {}, "SF"},
        {3, "so70_su8", {179, 680}, {}, {}, "SF"},
        {3, "so78_e6", {5, 19}, {}, {}, "SF"},
        {3, "so128_so16", {173, 672}, {}, {}, "SF"},
        {3, "so248_e8", {125, 492}, {}, {}, "SF"},
        // -- Table 4: isotropy irreducible exceptions, exceptional g --
        {4, "e6_su3", {11, 36}, {}, {}, "SC"},
        {4, "e6_3su3", {5, 12}, {"w2", "w1+w6"}, {}, ""},
        {4, "e6_g2", {25, 72}, {}, {}, "SC"},
        {4, "e6_su3_g2", {19, 48}, {"w2", "w1+w6"}, {}, ""},
        {4, "e7_su3", {71, 252}, {}, {}, "SC"},
        {4, "e7_su6_su3", {5, 12}, {"w1", "w6"}, {}, ""},
        {4, "e7_g2_sp3", {7, 18}, {}, {}, "SF"},
        {4, "e7_su2_f4", {47, 108}, {"w6"}, {}, ""},
        {4, "e8_su9", {5, 12}, {}, {}, "SC"},
        {4, "e8_e6_su3", {5, 12}, {}, {}, "SF"},
        {4, "e8_g2_f4", {23, 60}, {}, {}, "SF"},
        {4, "f4_2su3", {5, 12}, {"w4", "w1", "w3", "2w4"}, {}, ""},
        {4, "f4_su2_g2", {29, 72}, {"w4", "2w4", "w1+w4"}, {}, ""},
        {4, "g2_su2", {43, 112}, {"2w1", "w1+w2", "2w2"}, {}, ""},
        {4, "g2_su3", {5, 12}, {}, {}, "SC"},
        // -- Table 5: isotropy irreducible families --
        {5, "family_I_n5", {23, 60}, {"w1+w9"}, {}, ""},
        {5, "family_I_n6", {1, 3}, {"w1+w14"}, {}, ""},
        {5, "family_I_n7", {43, 140}, {"w1+w20"}, {}, ""},
        {5, "family_II_n3", {23, 60}, {"w1+w5", "w1+w2", "w2+w4", "3w1"}, {}, ""},
        {5, "family_II_n4", {1, 3}, {"w1+w9"}, {}, ""},
        {5, "family_II_n5", {43, 140}, {"w1+w14"}, {}, ""},
        {5, "family_III_p2_q3", {31, 72}, {"w1+w5", "w2+w4", "2w1+w4", "2w1+2w5"}, {}, ""},
        {5, "family_III_p2_q4", {13, 32}, {"w1+w7", "w4", "w1+w3", "w2+w6", "2w2"}, {}, ""},
        {5, "family_III_p3_q3", {13, 36}, {"w1+w8", "w3", "w1+w2"}, {}, ""},
        {5, "family_IV_n3", {41, 96},
         {"w2", "w1+w3", "2w2", "2w1+w2", "4w1", "w1+w2+w3", "3w1+w3"}, {}, ""},
        {5, "family_IV_n4", {2, 5}, {"w2", "w1+w3", "2w2", "2w1+w2", "4w1", "w2+w4", "2w1+w4"},
         {"w2+w4", "2w1+w4"}, ""},
        {5, "family_IV_n5", {31, 80}, {"w2", "w1+w3", "2w2", "4w1"}, {}, ""},
        {5, "family_V_n3", {5, 12},
         {"w1", "w1+w3", "2w1", "w1+w2", "w1+w3+w4", "2w1+w3", "2w2"}, {"2w2"}, ""},
        {5, "family_V_n4", {17, 52}, {"w1", "2w1", "w2"}, {"w2"}, ""},
        {5, "family_V_n5", {13, 44}, {"w1"}, {}, ""},
        {5, "family_VI_n3", {3, 8}, {"w1", "2w1"}, {}, ""},
        {5, "family_VI_n4", {91, 300}, {"w1"}, {}, ""},
        {5, "family_VI_n5", {47, 168}, {"w1"}, {}, ""},
        {5, "family_VII_n2", {3, 8}, {"2w1", "w3", "w4+w5", "w1+w2"}, {}, ""},
        {5, "family_VII_n3", {23, 76}, {}, {}, "SF"},
        {5, "family_VII_n4", {19, 68}, {}, {}, "SF"},
        {5, "family_VIII_n2", {1, 2}, {"2w4", "w2+w4", "2w2"}, {}, ""},
        {5, "family_VIII_n3", {13, 30}, {"2w1", "w4", "2w2"}, {}, ""},
        {5, "family_VIII_n4", {23, 56}, {"2w1", "w1+w7", "w4"}, {}, ""},
        {5, "family_IX_n7", {23, 76}, {}, {}, "SF"},
        {5, "family_IX_n8", {15, 52}, {}, {}, "SF"},
        {5, "family_IX_n9", {19, 68}, {}, {}, "SF"},
        {5, "family_X_n5", {13, 42}, {"w1"}, {}, ""},
        {5, "family_X_n6", {7, 24}, {"w1"}, {}, ""},
        {5, "family_X_n7", {253, 900}, {"w1"}, {}, ""},
        // -- Table 6: isotropy reducible exceptions --
        {6, "so8_g2", {5, 12},
         {"0", "w1", "w1+w3", "2w1", "w1+w2", "w1+w3+w4", "2w1+w3"},
         {"w1+w3+w4", "2w1+w3"}, ""},
        {6, "so26_sp1_sp5_so6", {29, 80}, {"0", "2w1"}, {}, ""},
        {6, "f4_so8", {4, 9}, {"0", "w4", "w3", "2w4", "w3+w4"}, {"w3+w4"}, ""},
        {6, "e6_3su2", {5, 16}, {"0"}, {}, ""},
        {6, "e6_su2_so6", {3, 8}, {"0", "w2"}, {}, ""},
        {6, "e6_so8_2r", {5, 12}, {"0", "w2", "w1+w6", "w4"}, {"w4"}, ""},
        {6, "e6_torus", {7, 24}, {}, {}, "SC"},
        {6, "e7_7su2", {1, 3}, {"0"}, {}, ""},
        {6, "e7_so8", {13, 36}, {}, {}, "SC"},
        {6, "e7_3su2_so8", {7, 18}, {"0"}, {}, ""},
        {6, "e7_torus", {5, 18}, {}, {}, "SC"},
        {6, "e8_8su2", {3, 10}, {}, {}, "SC"},
        {6, "e8_4su3", {19, 60}, {}, {}, "SC"},
        {6, "e8_4su2", {11, 40}, {}, {}, "SC"},
        {6, "e8_2su3", {17, 60}, {}, {}, "SC"},
        {6, "e8_2su5", {7, 20}, {"0"}, {}, ""},
        {6, "e8_so9_via_su9", {13, 40}, {}, {}, "SC"},
        {6, "e8_so9_via_so16", {13, 40}, {}, {}, "SC"},
        {6, "e8_2so8", {11, 30}, {"0"}, {}, ""},
        {6, "e8_so5", {13, 48}, {}, {}, "SC"},
        {6, "e8_2sp2", {7, 24}, {}, {}, "SC"},
        {6, "e8_torus", {4, 15}, {}, {}, "SC"},
        // -- Table 7: isotropy reducible families XI-XIV --
        {7, "family_XIa_n3", {5, 12}, {"0", "w1+w2", "3w1", "2w1+2w2"}, {}, ""},
        {7, "family_XIa_n4", {3, 8}, {"0", "w1+w3", "2w2", "2w1+w2", "2w1+2w3"}, {}, ""},
        {7, "family_XIa_n5", {7, 20}, {"0", "w1+w4", "w2+w3", "2w1+w3"}, {"2w1+w3"}, ""},
        {7, "family_XIb_k3_n2", {5, 12},
         {"0", "w1+w5", "w2+w4", "2w3", "2w1+w4", "2w1+2w5"}, {}, ""},
        {7, "family_XIb_k4_n2", {3, 8}, {"0", "w1+w7", "w2+w6"}, {"w2+w6"}, ""},
        {7, "family_XIb_k3_n3", {5, 12},
         {"0", "w1+w8", "w2+w7", "2w1+w7", "2w1+2w8"}, {"2w1+2w8"}, ""},
        {7, "family_XII_p2_q5", {47, 130}, {"0", "w1+w12"}, {}, ""},
        {7, "family_XIII_k3_n1", {7, 16},
         {"0", "w2", "2w1", "w1+w3", "2w2", "2w1+w2"}, {}, ""},
        {7, "family_XIII_k4_n1", {2, 5}, {"0", "w2", "2w1", "w4", "w1+w3", "2w2"}, {}, ""},
        {7, "family_XIII_k5_n1", {3, 8}, {"0", "w2", "2w1", "w4", "w1+w3"}, {}, ""},
        {7, "family_XIV_n1", {5, 12},
         {"0", "w2", "2w1", "2w2", "2w1+w2", "4w1", "3w2", "2w1+2w2"}, {}, ""},
        {7, "family_XIV_n2", {5, 12},
         {"0", "w2", "2w1", "w4", "w1+w3", "2w2", "2w1+w2", "w1+w5", "4w1", "w2+w4",
          "2w1+w4"},
         {"w2+w4", "2w1+w4"}, ""},
        {7, "family_XIV_n3", {5, 12},
         {"0", "w2", "2w1", "w4", "w1+w3", "2w2", "2w1+w2", "4w1", "w6"}, {"w6"}, ""},
        // -- Table 8: isotropy reducible families XV-XVIII --
        {8, "family_XV_n2", {19, 56}, {"0", "2w1"}, {}, ""},
        {8, "family_XV_n3", {29, 102}, {}, {}, "SF"},
        {8, "family_XV_n4", {133, 496}, {}, {}, "SF"},
        {8, "family_XVI_n3", {29, 84}, {"0", "w1", "2w1", "w3", "2w4"}, {}, ""},
        {8, "family_XVI_n4", {17, 56}, {}, {}, "SF"},
        {8, "family_XVI_n5", {131, 460}, {}, {}, "SF"},
        {8, "family_XVIIa_n4", {1, 3}, {"0", "w2", "2w1", "2w3", "2w4"}, {}, ""},
        {8, "family_XVIIa_n5", {5, 16}, {"0", "w2", "2w1"}, {"2w1"}, ""},
        {8, "family_XVIIa_n6", {3, 10}, {"0"}, {}, ""},
        {8, "family_XVIIb_k3_n3", {11, 28},
         {"0", "w2", "2w1", "w3", "2w4", "w1+w2"}, {}, ""},
        {8, "family_XVIIb_k4_n3", {7, 20}, {"0", "w2", "2w1"}, {}, ""},
        {8, "family_XVIIb_k3_n4", {2, 5}, {"0", "w2", "2w1", "w4"}, {}, ""},
        {8, "family_XVIII_n3", {5, 12},
         {"0", "w1", "w2", "2w1", "w3", "w4", "w1+w2", "2w5", "w1+w3", "2w2", "w1+w4"},
         {"w1+w4"}, ""},
        {8, "family_XVIII_n4", {5, 12},
         {"0", "w2", "2w1", "w4", "w1+w3", "2w2"}, {"2w2"}, ""},
        {8, "family_XVIII_n5", {5, 12},
         {"0", "w2", "2w1", "w4", "w1+w3"}, {"w1+w3"}, ""},
        // -- Table 9: isotropy reducible family XIX --
        {9, "family_XIX_su3so3x2", {13, 40}, {"0", "w1", "2w1"}, {}, ""},
        {9, "family_XIX_s3_so5", {15, 44}, {"0", "w1", "2w1"}, {}, ""},
        {9, "family_XIX_s4_su6sp3", {11, 32}, {"0", "w1", "2w1"}, {}, ""},
        {9, "family_XIX_s3_su3", {13, 36},
         {"0", "w1", "w2", "2w1", "w3", "w1+w2"}, {"w1+w2"}, ""},
        {9, "family_XIX_s3x2_su3", {1, 3}, {"0", "w1", "w2", "2w1"}, {}, ""},
        {9, "family_XIX_su3x2", {9, 28}, {"0", "w1", "w2", "2w1"}, {"2w1"}, ""},
        {9, "family_XIX_s3x3_su3", {19, 60}, {"0", "w1", "w2", "2w1"}, {"2w1"}, ""},
        {9, "family_XIX_s3_g2", {19, 60}, {"0", "2w1"}, {"2w1"}, ""},
        {9, "family_XIX_s3_su4", {5, 16}, {"0", "w1", "w2"}, {"w2"}, ""},
        {9, "family_XIX_su3_so5", {5, 16}, {"0", "w1", "w2"}, {"w2"}, ""},
        {9, "family_XIX_s4x2_su6sp3", {13, 40}, {"0", "w1", "2w1", "w2"}, {"w2"}, ""},
        {9, "family_XIX_s3x3_so5", {21, 68}, {"0"}, {}, ""},
        {9, "family_XIX_s3x4_so5", {3, 10}, {"0"}, {}, ""},
        {9, "family_XIX_s3x5_so5", {27, 92}, {"0"}, {}, ""},
        {9, "family_XIX_s3x2_g2", {11, 36}, {"0"}, {}, ""},
        {9, "family_XIX_s3x3_g2", {25, 84}, {"0"}, {}, ""},
        {9, "family_XIX_s3x4_g2", {7, 24}, {"0"}, {}, ""},
        {9, "family_XIX_so5x2", {11, 36}, {"0"}, {}, ""},
        {9, "family_XIX_s3_so5x2", {25, 84}, {"0"}, {}, ""},
        {9, "family_XIX_s3x2_so5x2", {7, 24}, {"0"}, {}, ""},
        {9, "family_XIX_s3_so7", {13, 44}, {"0"}, {}, ""},
        {9, "family_XIX_s3_sp3", {13, 44}, {"0"}, {}, ""},
        {9, "family_XIX_so5_g2", {13, 44}, {"0"}, {}, ""},
        {9, "family_XIX_s3x6_su3", {7, 24}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3x5_su3", {25, 84}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3x4_su3", {11, 36}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3x3_su3x2", {27, 92}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3x3_su4", {13, 44}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3x2_su3x2", {3, 10}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3x2_su3_so5", {13, 44}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3x2_so5", {9, 28}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3x2_su4", {23, 76}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3_su3x2", {21, 68}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3_su3_so5", {23, 76}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3_su3_g2", {27, 92}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s3_su3_su4", {7, 24}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_s4x3_su6sp3", {5, 16}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_su3so3x3", {77, 260}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_su3so3x4", {17, 60}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_su3so3x5", {127, 460}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_su3x3", {13, 44}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_su3x2_so5", {7, 24}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_su3_g2", {3, 10}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_su3_su4", {25, 84}, {"0", "w1"}, {}, ""},
        {9, "family_XIX_so5_su4", {27, 92}, {"0", "w1"}, {}, ""},
    };
    return r;
}

}  // namespace

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = build_rows();
    return rows;
}

const GoldenRow& golden_row(const std::string& space) {
    for (const GoldenRow& r : golden_rows())
        if (r.space == space) return r;
    throw CasboundError("golden_row: no golden data for " + space);
}

Weight mode_from_label(int rank, const std::string& label) {
    Weight w(rank, 0);
    if (label == "0") return w;
    size_t pos = 0;
    while (pos < label.size()) {
        size_t end = label.find('+', pos);
        if (end == std::string::npos) end = label.size();
        std::string term = label.substr(pos, end - pos);
        size_t wp = term.find('w');
        if (wp == std::string::npos) throw CasboundError("bad mode label " + label);
        int coeff = wp == 0 ? 1 : std::stoi(term.substr(0, wp));
        int idx = std::stoi(term.substr(wp + 1));
        if (idx < 1 || idx > rank) throw CasboundError("bad mode label " + label);
        w[idx - 1] += coeff;
        pos = end + 1;
    }
    return w;
}

Weight closure_canonical(const LieType& g, Weight w) {
    Weight best = w;
    auto consider = [&best](const Weight& c) {
        if (c < best) best = c;
    };
    if (g.series == Series::A) consider(Weight(w.rbegin(), w.rend()));
    if (g.series == Series::D && g.rank == 4) {
        static const int perm[6][3] = {{0, 2, 3}, {0, 3, 2}, {2, 0, 3},
                                       {2, 3, 0}, {3, 0, 2}, {3, 2, 0}};
        const int idx[3] = {0, 2, 3};
        for (const auto& p : perm) {
            Weight c = w;
            for (int k = 0; k < 3; ++k) c[idx[k]] = w[p[k]];
            consider(c);
        }
    }
    if (g.series == Series::D && g.rank >= 5) {
        Weight c = w;
        std::swap(c[g.rank - 2], c[g.rank - 1]);
        consider(c);
    }
    return best;
}

RowCheck verify_row(const GoldenRow& row, const AnalyzeOptions& opts) {
    RowCheck rc;
    rc.space = row.space;
    const SpaceSpec& sp = find_space(row.space);
    auto fail = [&rc](std::string msg) {
        rc.pass = false;
        rc.diffs.push_back(std::move(msg));
    };

    EinsteinData ein = einstein_check(sp);
    if (ein.einstein_constant != row.E)
        fail("E = " + rat_str(ein.einstein_constant) + ", expected " + rat_str(row.E));

    StabilityReport rep = analyze(sp, opts);

    std::set<Weight> listed, blue;
    for (const std::string& lbl : row.modes)
        listed.insert(closure_canonical(sp.g, mode_from_label(sp.g.rank, lbl)));
    for (const std::string& lbl : row.semistable)
        blue.insert(closure_canonical(sp.g, mode_from_label(sp.g.rank, lbl)));
    std::set<Weight> got_pi, got_semi;
    for (const ModeReport& m : rep.modes) {
        if (m.verdict == Verdict::PotentialInstability)
            got_pi.insert(closure_canonical(sp.g, m.gamma));
        else if (m.verdict == Verdict::SemistableBound)
            got_semi.insert(closure_canonical(sp.g, m.gamma));
    }

    for (const Weight& w : got_pi)
        if (!listed.count(w))
            fail("unlisted mode " + mode_label(w) + " classified potential instability");
    for (const Weight& w : listed) {
        if (blue.count(w)) continue;
        if (got_pi.count(w)) continue;
        if (got_semi.count(w))
            rc.audit.push_back("listed mode " + mode_label(w) + " came out semistable");
        else
            fail("listed mode " + mode_label(w) + " was eliminated");
    }
    for (const Weight& w : blue) {
        if (!got_semi.count(w))
            fail("semistable-marked mode " + mode_label(w) +
                 (got_pi.count(w) ? " classified potential instability" : " was eliminated"));
    }
    for (const Weight& w : got_semi)
        if (!listed.count(w) && !blue.count(w))
            rc.audit.push_back("extra semistable mode " + mode_label(w) +
                               " (bound exactly 2E), flagged for audit");

    if (row.note == "SC" && rep.summary != Summary::StableByCurvature)
        fail("expected SC, got " + summary_str(rep.summary));
    if (row.note == "SF" && rep.summary != Summary::StableByFourier)
        fail("expected SF, got " + summary_str(rep.summary));
    if (row.note == "SF0" && rep.summary != Summary::SemistableByFourier)
        fail("expected SF0, got " + summary_str(rep.summary));
    return rc;
}

std::vector<RowCheck> verify_table(int table, int rank_limit, const AnalyzeOptions& opts) {
    bool any = false;
    std::vector<RowCheck> out;
    for (const GoldenRow& row : golden_rows()) {
        if (row.table != table) continue;
        any = true;
        if (find_space(row.space).g.rank > rank_limit) continue;
        out.push_back(verify_row(row, opts));
    }
    if (!any) throw CasboundError("verify_table: no golden data for table " + std::to_string(table));
    return out;
}

}  // namespace casbound
