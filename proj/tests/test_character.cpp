#include "casbound/character.hpp"

#include <random>

#include "casbound/subalgebra.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casbound;

TEST_CASE("dominant characters match hand-known modules") {
    const RootSystem& a2 = root_system({Series::A, 2});
    const DomChar& adj = dominant_character(a2, {1, 1});
    CHECK(adj.size() == 2);
    CHECK(adj.at({1, 1}) == 1);
    CHECK(adj.at({0, 0}) == 2);
    CHECK(char_dim(a2, adj) == 8);

    const RootSystem& g2 = root_system({Series::G, 2});
    const DomChar& seven = dominant_character(g2, {1, 0});
    CHECK(seven.at({1, 0}) == 1);
    CHECK(seven.at({0, 0}) == 1);
    CHECK(char_dim(g2, seven) == 7);
    const DomChar& g2adj = dominant_character(g2, {0, 1});
    CHECK(g2adj.at({1, 0}) == 1);
    CHECK(g2adj.at({0, 0}) == 2);
    CHECK(char_dim(g2, g2adj) == 14);
}

TEST_CASE("freudenthal agrees with kostant multiplicity oracle") {
    std::mt19937 rng(20240817);
    for (LieType t : {LieType{Series::A, 1}, {Series::A, 2}, {Series::B, 2}, {Series::G, 2}}) {
        const RootSystem& rs = root_system(t);
        int checked = 0;
        for (int a = 0; a <= 4 && checked < 60; ++a) {
            for (int b = 0; b <= 4 && checked < 60; ++b) {
                Weight hw = t.rank == 1 ? Weight{a + 2 * b} : Weight{a, b};
                if (rs.weyl_dim(hw) > 200) continue;
                const DomChar& ch = dominant_character(rs, hw);
                Int total = 0;
                for (const auto& [mu, m] : ch) {
                    CHECK(m == oracles::weight_mult_oracle(rs, hw, mu));
                    total += rs.orbit_size(mu) * make_int(m);
                    ++checked;
                }
                CHECK(total == rs.weyl_dim(hw));
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("character dimension conservation for random tensor products") {
    std::mt19937 rng(7);
    std::vector<LieType> types{{Series::A, 2}, {Series::B, 2}, {Series::C, 3}, {Series::G, 2},
                               {Series::A, 3}, {Series::D, 4}};
    for (int it = 0; it < 60; ++it) {
        const RootSystem& rs = root_system(types[it % types.size()]);
        Weight a(rs.rank), b(rs.rank);
        for (int i = 0; i < rs.rank; ++i) {
            a[i] = static_cast<int>(rng() % 3);
            b[i] = static_cast<int>(rng() % 3);
        }
        Int expect = rs.weyl_dim(a) * rs.weyl_dim(b);
        Int got = 0;
        for (const auto& [w, m] : tensor_decompose(rs, a, b)) got += rs.weyl_dim(w) * make_int(m);
        CHECK(got == expect);
    }
}

TEST_CASE("klimyk on hand-checked su(3) products") {
    const RootSystem& a2 = root_system({Series::A, 2});
    auto d1 = tensor_decompose(a2, {1, 0}, {0, 1});
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == std::pair<Weight, long long>{{1, 1}, 1});
    CHECK(d1[1] == std::pair<Weight, long long>{{0, 0}, 1});
    auto d2 = tensor_decompose(a2, {1, 1}, {1, 1});
    // 8 x 8 = 27 + 10 + 10bar + 8 + 8 + 1
    Int total = 0;
    long long eights = 0;
    for (auto& [w, m] : d2) {
        total += a2.weyl_dim(w) * make_int(m);
        if (w == Weight{1, 1}) eights = m;
    }
    CHECK(total == 64);
    CHECK(eights == 2);
}

TEST_CASE("adams split of the tensor square") {
    const RootSystem& a1 = root_system({Series::A, 1});
    auto sa = sym2_alt2(a1, {1});
    REQUIRE(sa.sym.size() == 1);
    CHECK(sa.sym[0].first == Weight{2});
    REQUIRE(sa.alt.size() == 1);
    CHECK(sa.alt[0].first == Weight{0});

    const RootSystem& a2 = root_system({Series::A, 2});
    auto s8 = sym2_alt2(a2, {1, 1});
    // Sym^2(8) = 27 + 8 + 1, Alt^2(8) = 10 + 10bar + 8
    DomChar sym_map(s8.sym.begin(), s8.sym.end());
    CHECK(sym_map.at({2, 2}) == 1);
    CHECK(sym_map.at({1, 1}) == 1);
    CHECK(sym_map.at({0, 0}) == 1);
    DomChar alt_map(s8.alt.begin(), s8.alt.end());
    CHECK(alt_map.at({3, 0}) == 1);
    CHECK(alt_map.at({0, 3}) == 1);
    CHECK(alt_map.at({1, 1}) == 1);
}

TEST_CASE("sym2 (+) alt2 equals the full tensor square") {
    std::mt19937 rng(99);
    std::vector<LieType> types{{Series::A, 2}, {Series::B, 2}, {Series::C, 3}, {Series::G, 2}};
    for (int it = 0; it < 30; ++it) {
        const RootSystem& rs = root_system(types[it % types.size()]);
        Weight a(rs.rank);
        for (int i = 0; i < rs.rank; ++i) a[i] = static_cast<int>(rng() % 3);
        if (rs.weyl_dim(a) > 400) continue;
        DomChar sum;
        auto sa = sym2_alt2(rs, a);
        for (auto& [w, m] : sa.sym) sum[w] += m;
        for (auto& [w, m] : sa.alt) sum[w] += m;
        DomChar sq;
        for (auto& [w, m] : tensor_decompose(rs, a, a)) sq[w] += m;
        CHECK(sum == sq);
    }
}

TEST_CASE("decompose_character rejects non-characters") {
    const RootSystem& a2 = root_system({Series::A, 2});
    DomChar bogus;
    bogus[{1, 1}] = 1;
    bogus[{0, 0}] = -3;  // adjoint needs +2 on the zero weight
    CHECK_THROWS_AS(decompose_character(a2, bogus), CasboundError);
}

TEST_CASE("product subalgebra characters") {
    Subalgebra h = Subalgebra::make({{Series::A, 1}, {Series::A, 1}}, 1);
    CHECK(h.total_rank == 3);
    Weight w{2, 1, 5};  // (adjoint, fund) with torus charge 5
    CHECK(h.dim(w) == 6);
    CHECK(h.dual(w) == Weight{2, 1, -5});
    Int total = 0;
    for (auto& [u, m] : h.tensor_decompose({1, 0, 1}, {1, 1, 2})) {
        total += h.dim(u) * make_int(m);
        CHECK(u[2] == 3);  // torus charges add
    }
    CHECK(total == 8);

    // Sym^2 of the (2,2) rep of so(4) = so(3)+so(3)
    auto sa = h.sym2_alt2({1, 1, 0});
    Int sdim = 0, adim = 0;
    for (auto& [u, m] : sa.sym) sdim += h.dim(u) * make_int(m);
    for (auto& [u, m] : sa.alt) adim += h.dim(u) * make_int(m);
    CHECK(sdim == 10);
    CHECK(adim == 6);
}
