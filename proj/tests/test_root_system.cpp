#include "casbound/root_system.hpp"

#include <set>

#include "casbound/orbit.hpp"
#include "doctest.h"

using namespace casbound;

TEST_CASE("cartan matrices and root lengths") {
    const RootSystem& g2 = root_system({Series::G, 2});
    CHECK(g2.cartan == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
    CHECK(g2.d == std::vector<int>{1, 3});
    CHECK(g2.gram[0][0] == Rat(2));
    CHECK(g2.gram[0][1] == Rat(3));
    CHECK(g2.gram[1][1] == Rat(6));

    const RootSystem& b2 = root_system({Series::B, 2});
    CHECK(b2.cartan == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
    // hand-inverted: C^{-1} = [[1,1],[1/2,1]], gram = C^{-1} diag(2,1)
    CHECK(b2.gram[0][0] == Rat(2));
    CHECK(b2.gram[0][1] == Rat(1));
    CHECK(b2.gram[1][0] == Rat(1));
    CHECK(b2.gram[1][1] == Rat(1));

    const RootSystem& a1 = root_system({Series::A, 1});
    CHECK(a1.gram[0][0] == Rat(1, 2));

    const RootSystem& f4 = root_system({Series::F, 4});
    CHECK(f4.d == std::vector<int>{2, 2, 1, 1});
    CHECK(f4.cartan[1][2] == -2);
    CHECK(f4.cartan[2][1] == -1);
}

TEST_CASE("positive roots and highest root") {
    CHECK(root_system({Series::A, 2}).positive_roots.size() == 3);
    CHECK(root_system({Series::B, 3}).positive_roots.size() == 9);
    CHECK(root_system({Series::G, 2}).positive_roots.size() == 6);
    CHECK(root_system({Series::F, 4}).positive_roots.size() == 24);
    CHECK(root_system({Series::E, 8}).positive_roots.size() == 120);
    CHECK(root_system({Series::D, 5}).positive_roots.size() == 20);

    CHECK(root_system({Series::B, 3}).highest_root == Weight{0, 1, 0});
    CHECK(root_system({Series::A, 2}).highest_root == Weight{1, 1});
    CHECK(root_system({Series::C, 3}).highest_root == Weight{2, 0, 0});
    CHECK(root_system({Series::G, 2}).highest_root == Weight{0, 1});
    CHECK(root_system({Series::E, 8}).highest_root == Weight{0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("casimir eigenvalues") {
    const RootSystem& a1 = root_system({Series::A, 1});
    // raw((1)) = 3/2, raw(adjoint (2)) = 4, hand-computed
    CHECK(a1.raw_casimir({1}) == Rat(3, 2));
    CHECK(a1.casimir_normalized({1}) == Rat(3, 8));
    CHECK(a1.casimir_normalized({2}) == Rat(1));

    const RootSystem& g2 = root_system({Series::G, 2});
    CHECK(g2.casimir_normalized({1, 0}) == Rat(1, 2));
    CHECK(g2.casimir_normalized({0, 1}) == Rat(1));

    // su(3): Cas(fundamental) = 4/9
    const RootSystem& a2 = root_system({Series::A, 2});
    CHECK(a2.casimir_normalized({1, 0}) == Rat(4, 9));
}

TEST_CASE("weyl dimension formula") {
    CHECK(root_system({Series::A, 2}).weyl_dim({1, 1}) == 8);
    CHECK(root_system({Series::A, 2}).weyl_dim({1, 0}) == 3);
    CHECK(root_system({Series::G, 2}).weyl_dim({0, 1}) == 14);
    CHECK(root_system({Series::G, 2}).weyl_dim({1, 0}) == 7);
    CHECK(root_system({Series::B, 3}).weyl_dim({0, 0, 1}) == 8);
    CHECK(root_system({Series::D, 4}).weyl_dim({0, 1, 0, 0}) == 28);
    CHECK(root_system({Series::F, 4}).weyl_dim({0, 0, 0, 1}) == 26);
    CHECK(root_system({Series::E, 6}).weyl_dim({1, 0, 0, 0, 0, 0}) == 27);
    CHECK(root_system({Series::E, 7}).weyl_dim({0, 0, 0, 0, 0, 0, 1}) == 56);
    CHECK(root_system({Series::E, 8}).weyl_dim({0, 0, 0, 0, 0, 0, 0, 1}) == 248);
    CHECK(root_system({Series::C, 3}).weyl_dim({2, 0, 0}) == 21);
}

TEST_CASE("dual weights") {
    CHECK(root_system({Series::A, 2}).dual_weight({1, 0}) == Weight{0, 1});
    CHECK(root_system({Series::A, 3}).dual_weight({2, 1, 0}) == Weight{0, 1, 2});
    CHECK(root_system({Series::D, 5}).dual_weight({0, 0, 0, 1, 0}) == Weight{0, 0, 0, 0, 1});
    CHECK(root_system({Series::D, 4}).dual_weight({0, 0, 1, 0}) == Weight{0, 0, 1, 0});
    CHECK(root_system({Series::E, 6}).dual_weight({1, 0, 0, 0, 0, 0}) == Weight{0, 0, 0, 0, 0, 1});
    CHECK(root_system({Series::B, 3}).dual_weight({1, 2, 3}) == Weight{1, 2, 3});
}

TEST_CASE("orbit sizes and streaming") {
    for (LieType t : {LieType{Series::A, 3}, {Series::B, 3}, {Series::C, 3}, {Series::D, 4},
                      {Series::G, 2}, {Series::F, 4}}) {
        const RootSystem& rs = root_system(t);
        std::vector<Weight> probes{rs.highest_root, Weight(rs.rank, 1), rs.zero()};
        Weight mixed(rs.rank, 0);
        mixed[0] = 2;
        if (rs.rank > 2) mixed[2] = 1;
        probes.push_back(mixed);
        for (const Weight& w : probes) {
            std::set<Weight> seen;
            for_each_orbit_element(rs, w, [&](const Weight& x) {
                CHECK(seen.insert(x).second);  // no repeats
                CHECK(rs.dominant_rep(x) == w);
            });
            CHECK(Int(static_cast<long>(seen.size())) == rs.orbit_size(w));
        }
    }
    // D124 adjoint orbit: 2 * 124 * 123 * 2 / 2 elements (all long roots)
    const RootSystem& d124 = root_system({Series::D, 124});
    CHECK(d124.orbit_size(d124.highest_root) == 30504);
}

TEST_CASE("weyl group orders") {
    CHECK(weyl_group_order({Series::E, 6}) == 51840);
    CHECK(weyl_group_order({Series::F, 4}) == 1152);
    CHECK(weyl_group_order({Series::D, 4}) == 192);
    CHECK(weyl_group_order({Series::B, 4}) == 384);
}

TEST_CASE("dominant weight enumeration by casimir bound") {
    const RootSystem& a1 = root_system({Series::A, 1});
    auto w1 = dominant_weights_up_to(a1, 1);
    CHECK(w1 == std::vector<Weight>{{0}, {1}, {2}});

    const RootSystem& g2 = root_system({Series::G, 2});
    auto w2 = dominant_weights_up_to(g2, Rat(1, 2));
    CHECK(w2 == std::vector<Weight>{{0, 0}, {1, 0}});

    // box oracle on A2: every dominant weight with coords <= 6 and casimir
    // below the bound must be found
    const RootSystem& a2 = root_system({Series::A, 2});
    Rat bound(7, 3);
    auto got = dominant_weights_up_to(a2, bound);
    std::set<Weight> got_set(got.begin(), got.end());
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            Weight w{i, j};
            bool in_range = a2.casimir_normalized(w) <= bound;
            CHECK(got_set.count(w) == (in_range ? 1u : 0u));
        }
}

TEST_CASE("dominantize tracks reflection parity") {
    const RootSystem& a2 = root_system({Series::A, 2});
    Weight w{-1, 2};
    int sign;
    CHECK(a2.dominantize(w, sign));
    CHECK(a2.is_dominant(w));
    // s_1 applied once
    CHECK(sign == -1);
    CHECK(w == Weight{1, 1});
}

TEST_CASE("parse lie type") {
    CHECK(parse_lie_type("A5") == LieType{Series::A, 5});
    CHECK(parse_lie_type("e6") == LieType{Series::E, 6});
    CHECK_THROWS(parse_lie_type("D2"));
    CHECK_THROWS(parse_lie_type("H4"));
}
