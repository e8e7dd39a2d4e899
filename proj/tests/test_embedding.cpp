#include "casbound/embedding.hpp"

#include "doctest.h"

using namespace casbound;

TEST_CASE("so(7) > g2 from the defining 7") {
    Subalgebra g2 = Subalgebra::make({{Series::G, 2}}, 0);
    auto emb = restriction_from_defining({Series::B, 3}, g2, {{{1, 0}, 1}});
    // ad so(7) = ad g2 (+) 7
    REQUIRE(emb->ad_branch.size() == 2);
    std::unordered_map<Weight, long long, WeightHash> am(emb->ad_branch.begin(),
                                                         emb->ad_branch.end());
    CHECK(am.at({0, 1}) == 1);
    CHECK(am.at({1, 0}) == 1);
    REQUIRE(emb->isotropy.size() == 1);
    CHECK(emb->isotropy[0] == std::pair<Weight, long long>{{1, 0}, 1});
    // killing index: 1 + 7*(1/2)/14
    CHECK(emb->killing_index[0] == Rat(5, 4));
    CHECK(emb->casimir_h({1, 0}) == Rat(2, 5));
    CHECK(emb->casimir_h({2, 0}) == Rat(14, 15));

    // spinor 8 restricts to 7 + 1
    std::unordered_map<Weight, long long, WeightHash> sp;
    for (auto& [w, m] : branch(*emb, {0, 0, 1})) sp[w] = m;
    CHECK(sp.at({1, 0}) == 1);
    CHECK(sp.at({0, 0}) == 1);
    CHECK(trivial_multiplicity(*emb, {0, 0, 1}) == 1);
}

TEST_CASE("g2 > su(3) of long roots") {
    Subalgebra a2 = Subalgebra::make({{Series::A, 2}}, 0);
    // simple roots: alpha_2 and -theta
    auto emb = regular_subalgebra({Series::G, 2}, a2, {{-3, 2}, {0, -1}});
    // ad g2 = 8 (+) 3 (+) 3bar
    Int iso_dim = 0;
    for (auto& [w, m] : emb->isotropy) iso_dim += emb->h.dim(w) * make_int(m);
    CHECK(iso_dim == 6);
    CHECK(emb->killing_index[0] == Rat(4, 3));
    // Casimir of the fundamental w.r.t. -B_g2: (4/9)/(4/3) = 1/3
    CHECK(emb->casimir_h({1, 0}) == Rat(1, 3));
}

TEST_CASE("principal su(2) in g2") {
    Subalgebra a1 = Subalgebra::make({{Series::A, 1}}, 0);
    auto emb = make_embedding({Series::G, 2}, a1, {{6, 10}});
    // ad g2 = V(2) (+) V(10) under the principal su(2)
    std::unordered_map<Weight, long long, WeightHash> am(emb->ad_branch.begin(),
                                                         emb->ad_branch.end());
    CHECK(am.at({2}) == 1);
    CHECK(am.at({10}) == 1);
    // b = 1 + 11 * Cas(V10) / 3, Cas(V10) = (10*12/2)/4 = 15
    CHECK(emb->killing_index[0] == Rat(56));
}

TEST_CASE("su(3) > su(2) + torus (flag manifold CP^2 pair)") {
    Subalgebra h = Subalgebra::make({{Series::A, 1}}, 1);
    // defining 3 = (2, charge 1) + (1, charge -2)
    auto emb = restriction_from_defining({Series::A, 2}, h, {{{1, 1}, 1}, {{0, -2}, 1}});
    // ad su(3) = ad su(2) + R + (2 x charge 3) + (2 x charge -3)
    Int iso_dim = 0;
    for (auto& [w, m] : emb->isotropy) iso_dim += emb->h.dim(w) * make_int(m);
    CHECK(iso_dim == 4);
    for (auto& [w, m] : emb->isotropy) CHECK(std::abs(w[1]) == 3);
    // killing index of su(2): 1 + 4 * (3/8) / 3 = 3/2
    CHECK(emb->killing_index[0] == Rat(3, 2));
}

TEST_CASE("composition so(7) > g2 > su(3)") {
    Subalgebra g2 = Subalgebra::make({{Series::G, 2}}, 0);
    auto outer = restriction_from_defining({Series::B, 3}, g2, {{{1, 0}, 1}});
    Subalgebra a2 = Subalgebra::make({{Series::A, 2}}, 0);
    auto inner = regular_subalgebra({Series::G, 2}, a2, {{-3, 2}, {0, -1}});
    auto emb = compose(outer, {inner});
    CHECK(emb->g->type == LieType{Series::B, 3});
    CHECK(emb->h.components == std::vector<LieType>{{Series::A, 2}});
    // ad so(7) = 8 + 3 + 3bar + 3 + 3bar + 1:  21 - 8 = 13 in the isotropy
    Int iso_dim = 0;
    long long trivials = 0;
    for (auto& [w, m] : emb->isotropy) {
        iso_dim += emb->h.dim(w) * make_int(m);
        if (emb->h.is_zero_weight(w)) trivials = m;
    }
    CHECK(iso_dim == 13);
    CHECK(trivials == 1);
    // multiplicativity of the killing index: b(su3 in so7) = (4/3)*(5/4) = 5/3
    CHECK(emb->killing_index[0] == Rat(5, 3));
}

TEST_CASE("hom_dim pairs branch multiplicities") {
    Subalgebra g2 = Subalgebra::make({{Series::G, 2}}, 0);
    auto emb = restriction_from_defining({Series::B, 3}, g2, {{{1, 0}, 1}});
    Decomposition target{{{1, 0}, 1}};
    CHECK(hom_dim(*emb, {0, 0, 1}, target) == 1);   // 8 = 7 + 1
    CHECK(hom_dim(*emb, {1, 0, 0}, target) == 1);   // 7 = 7
    CHECK(hom_dim(*emb, {0, 1, 0}, target) == 1);   // ad
    CHECK(hom_dim(*emb, {0, 0, 2}, target) == 1);   // 35 = 27 + 7 + 1
}
