#include "casbound/report.hpp"

#include "casbound/golden.hpp"
#include "doctest.h"

using namespace casbound;

TEST_CASE("mode labels") {
    CHECK(mode_label({0, 0}) == "0");
    CHECK(mode_label({0, 1}) == "ω2");
    CHECK(mode_label({2, 0, 1}) == "2ω1+ω3");
    CHECK(mode_from_label(3, "2w1+w3") == Weight{2, 0, 1});
    CHECK(mode_from_label(2, "0") == Weight{0, 0});
    CHECK(mode_from_label(4, "3w2") == Weight{0, 3, 0, 0});
}

TEST_CASE("closure canonicalization") {
    CHECK(closure_canonical({Series::A, 3}, {2, 0, 1}) == Weight{1, 0, 2});
    CHECK(closure_canonical({Series::A, 3}, {1, 0, 2}) == Weight{1, 0, 2});
    // D4 triality permutes coordinates 1, 3, 4
    CHECK(closure_canonical({Series::D, 4}, {2, 0, 1, 0}) == Weight{0, 0, 1, 2});
    CHECK(closure_canonical({Series::D, 4}, {0, 2, 0, 0}) == Weight{0, 2, 0, 0});
    // D_n spin flip
    CHECK(closure_canonical({Series::D, 5}, {0, 0, 0, 1, 0}) == Weight{0, 0, 0, 0, 1});
    // no closure on B/C/E/F/G
    CHECK(closure_canonical({Series::C, 3}, {2, 0, 1}) == Weight{2, 0, 1});
}

TEST_CASE("report JSON round-trips losslessly") {
    const SpaceSpec& sp = find_space("berger_sp2_su2");
    EinsteinData ein = einstein_check(sp);
    StabilityReport rep = analyze(sp);
    ReportDocument doc = make_report(sp, ein, std::move(rep), 1.5);
    std::string text = report_json(doc);
    ReportDocument back = report_parse(text);

    CHECK(back.space == doc.space);
    CHECK(back.family == doc.family);
    CHECK(back.g == doc.g);
    CHECK(back.sphere == doc.sphere);
    CHECK(back.einstein.isotropy == doc.einstein.isotropy);
    CHECK(back.einstein.common_casimir == doc.einstein.common_casimir);
    CHECK(back.einstein.einstein_constant == doc.einstein.einstein_constant);
    CHECK(back.einstein.dim_m == doc.einstein.dim_m);
    CHECK(back.result.cutoff == doc.result.cutoff);
    CHECK(back.result.summary == doc.result.summary);
    CHECK(back.result.partial == doc.result.partial);
    REQUIRE(back.result.isotypes.size() == doc.result.isotypes.size());
    for (size_t i = 0; i < doc.result.isotypes.size(); ++i) {
        CHECK(back.result.isotypes[i].v == doc.result.isotypes[i].v);
        CHECK(back.result.isotypes[i].cas_h == doc.result.isotypes[i].cas_h);
        CHECK(back.result.isotypes[i].J == doc.result.isotypes[i].J);
        CHECK(back.result.isotypes[i].aa_min == doc.result.isotypes[i].aa_min);
        CHECK(back.result.isotypes[i].aa_max == doc.result.isotypes[i].aa_max);
        CHECK(back.result.isotypes[i].kr_min == doc.result.isotypes[i].kr_min);
        CHECK(back.result.isotypes[i].curvature_safe == doc.result.isotypes[i].curvature_safe);
    }
    REQUIRE(back.result.modes.size() == doc.result.modes.size());
    for (size_t i = 0; i < doc.result.modes.size(); ++i) {
        const ModeReport& a = back.result.modes[i];
        const ModeReport& b = doc.result.modes[i];
        CHECK(a.gamma == b.gamma);
        CHECK(a.cas_g == b.cas_g);
        CHECK(a.hom_m == b.hom_m);
        CHECK(a.hom_sym == b.hom_sym);
        CHECK(a.verdict == b.verdict);
        CHECK(a.bound.has_value() == b.bound.has_value());
        if (a.bound) CHECK(*a.bound == *b.bound);
        CHECK(a.refined_terms.has_value() == b.refined_terms.has_value());
        if (a.refined_terms) {
            CHECK(a.refined_terms->cas_gamma == b.refined_terms->cas_gamma);
            CHECK(a.refined_terms->u_max == b.refined_terms->u_max);
            CHECK(a.refined_terms->w_min == b.refined_terms->w_min);
            CHECK(a.refined_terms->v_max == b.refined_terms->v_max);
        }
    }
    // serialization is deterministic
    ReportDocument doc2 = make_report(sp, ein, analyze(sp), 99.0);
    std::string text2 = report_json(doc2);
    auto strip_timing = [](std::string s) {
        size_t p = s.find("\"timing\"");
        return s.substr(0, p);
    };
    CHECK(strip_timing(text) == strip_timing(text2));
}

TEST_CASE("markdown report mirrors the table columns") {
    const SpaceSpec& sp = find_space("g2_su3");
    EinsteinData ein = einstein_check(sp);
    ReportDocument doc = make_report(sp, ein, analyze(sp), 0);
    std::string md = report_markdown(doc);
    CHECK(md.find("g2_su3") != std::string::npos);
    CHECK(md.find("5/12") != std::string::npos);
    CHECK(md.find("SC") != std::string::npos);
}
