#pragma once

// Independent brute-force oracles used to pin down expected values in tests.
// These deliberately avoid the library's Freudenthal/Klimyk code paths.

#include <map>
#include <optional>
#include <unordered_map>

#include "casbound/root_system.hpp"

namespace casbound::oracles {

// root-basis coordinates of v (fundamental coords), or nullopt if not integral
inline std::optional<std::vector<long>> root_coords(const RootSystem& rs, const Weight& v) {
    std::vector<long> c(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        Rat x = 0;
        for (int j = 0; j < rs.rank; ++j) x += v[j] * rs.cartan_inv[j][i];
        x.canonicalize();
        if (x.get_den() != 1) return std::nullopt;
        c[i] = x.get_num().get_si();
    }
    return c;
}

// Kostant partition function: number of ways to write v as a nonnegative
// integer combination of positive roots.
inline long long kostant_partition(const RootSystem& rs, std::vector<long> c) {
    for (long x : c)
        if (x < 0) return 0;
    struct Key {
        size_t idx;
        std::vector<long> rem;
        bool operator<(const Key& o) const { return std::tie(idx, rem) < std::tie(o.idx, o.rem); }
    };
    static std::map<std::pair<LieType, Key>, long long> memo;
    std::function<long long(size_t, std::vector<long>&)> rec = [&](size_t idx,
                                                                   std::vector<long>& rem) -> long long {
        bool zero = true;
        for (long x : rem)
            if (x) zero = false;
        if (zero) return 1;
        if (idx == rs.positive_roots.size()) return 0;
        auto key = std::make_pair(rs.type, Key{idx, rem});
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto rc = *root_coords(rs, rs.positive_roots[idx]);
        long long total = 0;
        std::vector<long> r = rem;
        for (;;) {
            total += rec(idx + 1, r);
            bool ok = true;
            for (int i = 0; i < rs.rank; ++i) {
                r[i] -= rc[i];
                if (r[i] < 0) ok = false;
            }
            if (!ok) break;
        }
        memo[key] = total;
        return total;
    };
    return rec(0, c);
}

// Weight multiplicity by Kostant's formula: sum over the Weyl group of
// sgn(w) * P(w(lambda+delta) - (mu+delta)).
inline long long weight_mult_oracle(const RootSystem& rs, const Weight& lam, const Weight& mu) {
    Weight start(rs.rank);
    for (int i = 0; i < rs.rank; ++i) start[i] = lam[i] + 1;
    std::unordered_map<Weight, int, WeightHash> signs;
    std::vector<Weight> stack{start};
    signs[start] = 1;
    while (!stack.empty()) {
        Weight x = stack.back();
        stack.pop_back();
        int s = signs[x];
        for (int i = 0; i < rs.rank; ++i) {
            if (x[i] <= 0) continue;
            Weight y = x;
            for (int j = 0; j < rs.rank; ++j) y[j] -= x[i] * rs.cartan[i][j];
            if (!signs.count(y)) {
                signs[y] = -s;
                stack.push_back(y);
            }
        }
    }
    long long total = 0;
    for (const auto& [wx, s] : signs) {
        Weight v(rs.rank);
        for (int i = 0; i < rs.rank; ++i) v[i] = wx[i] - (mu[i] + 1);
        auto c = root_coords(rs, v);
        if (!c) continue;
        total += s * kostant_partition(rs, *c);
    }
    return total;
}

}  // namespace casbound::oracles
