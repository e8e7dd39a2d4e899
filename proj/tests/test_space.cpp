#include "casbound/space.hpp"

#include <map>

#include "doctest.h"

using namespace casbound;

namespace {

// Hand-computed Einstein constants for the catalog (E = 1/4 + c/2 where c is
// the common isotropy Casimir w.r.t. -B_g).
const std::map<std::string, Rat>& expected_e() {
    static const std::map<std::string, Rat> m = {
        {"family_I_n5", {23, 60}},
        {"family_I_n6", {1, 3}},
        {"family_I_n7", {43, 140}},
        {"family_II_n3", {23, 60}},
        {"family_II_n4", {1, 3}},
        {"family_II_n5", {43, 140}},
        {"family_III_p2_q3", {31, 72}},
        {"family_III_p2_q4", {13, 32}},
        {"family_III_p3_q3", {13, 36}},
        {"family_IV_n3", {41, 96}},
        {"family_IV_n4", {2, 5}},
        {"family_IV_n5", {31, 80}},
        {"family_V_n3", {5, 12}},
        {"family_V_n4", {17, 52}},
        {"family_V_n5", {13, 44}},
        {"family_VI_n3", {3, 8}},
        {"family_VI_n4", {91, 300}},
        {"family_VI_n5", {47, 168}},
        {"family_VII_n2", {3, 8}},
        {"family_VII_n3", {23, 76}},
        {"family_VII_n4", {19, 68}},
        {"family_VIII_n2", {1, 2}},
        {"family_VIII_n3", {13, 30}},
        {"family_VIII_n4", {23, 56}},
        {"family_IX_n7", {23, 76}},
        {"family_IX_n8", {15, 52}},
        {"family_IX_n9", {19, 68}},
        {"family_X_n5", {13, 42}},
        {"family_X_n6", {7, 24}},
        {"family_X_n7", {253, 900}},
        {"family_XIa_n3", {5, 12}},
        {"family_XIa_n4", {3, 8}},
        {"family_XIa_n5", {7, 20}},
        {"family_XIb_k3_n2", {5, 12}},
        {"family_XIb_k4_n2", {3, 8}},
        {"family_XIb_k3_n3", {5, 12}},
        {"family_XII_p2_q5", {47, 130}},
        {"family_XIII_k3_n1", {7, 16}},
        {"family_XIII_k4_n1", {2, 5}},
        {"family_XIII_k5_n1", {3, 8}},
        {"family_XIV_n1", {5, 12}},
        {"family_XIV_n2", {5, 12}},
        {"family_XIV_n3", {5, 12}},
        {"family_XV_n2", {19, 56}},
        {"family_XV_n3", {29, 102}},
        {"family_XV_n4", {133, 496}},
        {"family_XVI_n3", {29, 84}},
        {"family_XVI_n4", {17, 56}},
        {"family_XVI_n5", {131, 460}},
        {"family_XVIIa_n4", {1, 3}},
        {"family_XVIIa_n5", {5, 16}},
        {"family_XVIIa_n6", {3, 10}},
        {"family_XVIIb_k3_n3", {11, 28}},
        {"family_XVIIb_k4_n3", {7, 20}},
        {"family_XVIIb_k3_n4", {2, 5}},
        {"family_XVIII_n3", {5, 12}},
        {"family_XVIII_n4", {5, 12}},
        {"family_XVIII_n5", {5, 12}},
        {"family_XIX_su3so3x2", {13, 40}},
        {"family_XIX_s3_so5", {15, 44}},
        {"family_XIX_s4_su6sp3", {11, 32}},
        {"family_XIX_s3_su3", {13, 36}},
        {"family_XIX_s3x2_su3", {1, 3}},
        {"family_XIX_su3x2", {9, 28}},
        {"family_XIX_s3x3_su3", {19, 60}},
        {"family_XIX_s3_g2", {19, 60}},
        {"family_XIX_s3_su4", {5, 16}},
        {"family_XIX_su3_so5", {5, 16}},
        {"family_XIX_s4x2_su6sp3", {13, 40}},
        {"family_XIX_s3_sp3", {13, 44}},
        {"family_XIX_s3_so7", {13, 44}},
        {"family_XIX_so5_g2", {13, 44}},
        {"so7_g2", {9, 20}},
        {"su16_so10", {11, 32}},
        {"su27_e6", {11, 36}},
        {"so133_e7", {135, 524}},
        {"berger_sp2_su2", {9, 20}},
        {"sp7_sp3", {29, 80}},
        {"sp10_su6", {15, 44}},
        {"sp16_so12", {43, 136}},
        {"sp28_e7", {17, 58}},
        {"so14_g2", {1, 3}},
        {"so16_so9", {23, 56}},
        {"so26_f4", {1, 3}},
        {"so42_sp4", {19, 70}},
        {"so52_f4", {27, 100}},
        {"so70_su8", {179, 680}},
        {"so78_e6", {5, 19}},
        {"so128_so16", {173, 672}},
        {"so248_e8", {125, 492}},
        {"e6_su3", {11, 36}},
        {"e6_g2", {25, 72}},
        {"e6_su3_g2", {19, 48}},
        {"e7_su3", {71, 252}},
        {"e7_g2_sp3", {7, 18}},
        {"e7_su2_f4", {47, 108}},
        {"e8_g2_f4", {23, 60}},
        {"e8_so5", {13, 48}},
        {"f4_su2_g2", {29, 72}},
        {"e6_3su3", {5, 12}},
        {"e7_su6_su3", {5, 12}},
        {"e8_su9", {5, 12}},
        {"e8_e6_su3", {5, 12}},
        {"f4_2su3", {5, 12}},
        {"g2_su2", {43, 112}},
        {"g2_su3", {5, 12}},
        {"so8_g2", {5, 12}},
        {"so26_sp1_sp5_so6", {29, 80}},
        {"f4_so8", {4, 9}},
        {"e6_3su2", {5, 16}},
        {"e6_su2_so6", {3, 8}},
        {"e6_so8_2r", {5, 12}},
        {"e6_torus", {7, 24}},
        {"e7_7su2", {1, 3}},
        {"e7_so8", {13, 36}},
        {"e7_3su2_so8", {7, 18}},
        {"e7_torus", {5, 18}},
        {"e8_8su2", {3, 10}},
        {"e8_4su3", {19, 60}},
        {"e8_4su2", {11, 40}},
        {"e8_2su3", {17, 60}},
        {"e8_2su5", {7, 20}},
        {"e8_so9_via_su9", {13, 40}},
        {"e8_so9_via_so16", {13, 40}},
        {"e8_2so8", {11, 30}},
        {"e8_2sp2", {7, 24}},
        {"e8_torus", {4, 15}},
    };
    return m;
}

}  // namespace

TEST_CASE("catalog Einstein constants (g of rank <= 16)") {
    int checked = 0;
    for (const SpaceSpec& s : catalog()) {
        if (s.g.rank > 16) continue;  // the huge orthogonal groups run separately
        auto it = expected_e().find(s.name);
        CAPTURE(s.name);
        EinsteinData ed = einstein_check(s);
        CHECK(ed.einstein_constant == Rat(1, 4) + ed.common_casimir / 2);
        CHECK(ed.einstein_constant > Rat(1, 4));
        if (it != expected_e().end()) {
            CHECK(ed.einstein_constant == it->second);
            ++checked;
        }
    }
    CHECK(checked >= 90);
}

TEST_CASE("catalog Einstein constants (large orthogonal g)") {
    for (const SpaceSpec& s : catalog()) {
        if (s.g.rank <= 16) continue;
        auto it = expected_e().find(s.name);
        REQUIRE(it != expected_e().end());
        CAPTURE(s.name);
        EinsteinData ed = einstein_check(s);
        CHECK(ed.einstein_constant == it->second);
    }
}

TEST_CASE("catalog names are unique and findable") {
    std::map<std::string, int> seen;
    for (const SpaceSpec& s : catalog()) seen[s.name]++;
    for (auto& [n, c] : seen) {
        CAPTURE(n);
        CHECK(c == 1);
        CHECK(&find_space(n) != nullptr);
    }
    CHECK_THROWS_AS(find_space("no_such_space"), UnknownSpace);
}

TEST_CASE("sphere flags") {
    CHECK(find_space("so7_g2").sphere);
    CHECK(find_space("g2_su3").sphere);
    CHECK_FALSE(find_space("berger_sp2_su2").sphere);
}

TEST_CASE("non-Einstein isotropy is rejected") {
    // su(3)/su(2): the isotropy 4 (+) 1 has two distinct Casimirs
    SpaceSpec s;
    s.name = "su3_su2";
    s.g = {Series::A, 2};
    s.make = [] {
        return restriction_from_defining({Series::A, 2}, Subalgebra::make({{Series::A, 1}}, 0),
                                         {{{1}, 1}, {{0}, 1}});  // 3 = 2 (+) 1
    };
    CHECK_THROWS_AS(einstein_check(s), NotEinstein);
}

TEST_CASE("config files load") {
    const char* cfg = R"({
        "name": "my_so7_g2",
        "g": "B3",
        "h": {
            "simple": ["G2"],
            "defining": [{"weight": [1, 0], "mult": 1}]
        },
        "sphere": true
    })";
    SpaceSpec s = load_space(cfg);
    CHECK(s.name == "my_so7_g2");
    CHECK(s.sphere);
    EinsteinData ed = einstein_check(s);
    CHECK(ed.einstein_constant == Rat(9, 20));
    CHECK(ed.dim_m == 7);
}

TEST_CASE("config rejects unknown keys") {
    CHECK_THROWS_AS(load_space(R"({"name":"x","g":"B3","h":{"simple":["G2"],
        "defining":[{"weight":[1,0],"mult":1}]},"frobnicate":1})"),
                    CasboundError);
    CHECK_THROWS_AS(load_space(R"({"name":"x","g":"B3","h":{"simple":["G2"],
        "defining":[{"weight":[1,0],"mult":1,"color":"blue"}]}})"),
                    CasboundError);
}

TEST_CASE("config with explicit restriction matrix") {
    const char* cfg = R"({
        "name": "my_g2_su2",
        "g": "G2",
        "h": {"simple": ["A1"], "restriction_matrix": {"num": [[6, 10]], "den": 1}}
    })";
    SpaceSpec s = load_space(cfg);
    EinsteinData ed = einstein_check(s);
    CHECK(ed.einstein_constant == Rat(43, 112));
}
