#include "casbound/character.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_set>

#include "casbound/orbit.hpp"

namespace casbound {

namespace {

// coefficients of diff in the simple-root basis, or nullopt if diff is not a
// nonnegative integral combination of simple roots
std::optional<std::vector<long>> pos_root_coords(const RootSystem& rs, const Weight& diff) {
    std::vector<long> c(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        Rat v = 0;
        for (int j = 0; j < rs.rank; ++j) v += diff[j] * rs.cartan_inv[j][i];
        v.canonicalize();
        if (v.get_den() != 1 || v < 0) return std::nullopt;
        c[i] = v.get_num().get_si();
    }
    return c;
}

Decomposition sorted_decomp(const RootSystem& rs, const DomChar& m) {
    Decomposition out;
    for (const auto& [w, c] : m)
        if (c != 0) out.emplace_back(w, c);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        long long ca = rs.raw_casimir_scaled(a.first), cb = rs.raw_casimir_scaled(b.first);
        if (ca != cb) return ca > cb;
        return a.first > b.first;
    });
    return out;
}

}  // namespace

const DomChar& dominant_character(const RootSystem& rs, const Weight& hw) {
    static std::mutex mu;
    static std::map<std::pair<LieType, Weight>, std::unique_ptr<DomChar>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find({rs.type, hw});
        if (it != cache.end()) return *it->second;
    }
    if (!rs.is_dominant(hw)) throw CasboundError("dominant_character: non-dominant weight");

    // dominant weights of V_hw = dominant mu with hw - mu in the root cone
    std::vector<std::pair<long, Weight>> levels;  // (height of hw - mu, mu)
    {
        std::unordered_set<Weight, WeightHash> seen{hw};
        std::vector<Weight> frontier{hw};
        levels.push_back({0, hw});
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const Weight& x : frontier) {
                for (const Weight& alpha : rs.positive_roots) {
                    Weight y(rs.rank);
                    for (int j = 0; j < rs.rank; ++j) y[j] = x[j] - alpha[j];
                    y = rs.dominant_rep(std::move(y));
                    if (seen.count(y)) continue;
                    Weight diff(rs.rank);
                    for (int j = 0; j < rs.rank; ++j) diff[j] = hw[j] - y[j];
                    auto c = pos_root_coords(rs, diff);
                    if (!c) continue;
                    seen.insert(y);
                    long ht = 0;
                    for (long v : *c) ht += v;
                    levels.push_back({ht, y});
                    next.push_back(y);
                }
            }
            frontier = std::move(next);
        }
    }
    std::sort(levels.begin(), levels.end());

    auto ch = std::make_unique<DomChar>();
    long long raw_top = rs.raw_casimir_scaled(hw);
    for (const auto& [ht, mu] : levels) {
        if (ht == 0) {
            (*ch)[mu] = 1;
            continue;
        }
        __int128 rhs = 0;
        for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
            const Weight& alpha = rs.positive_roots[k];
            Weight w = mu;
            for (;;) {
                for (int j = 0; j < rs.rank; ++j) w[j] += alpha[j];
                Weight rep = rs.dominant_rep(w);
                auto it = ch->find(rep);
                if (it == ch->end()) break;
                rhs += static_cast<__int128>(it->second) * rs.pairing_with_root(w, static_cast<int>(k));
            }
        }
        __int128 num = 2 * rhs * rs.gram_den;
        long long den = raw_top - rs.raw_casimir_scaled(mu);
        if (den <= 0 || num % den != 0) throw CasboundError("freudenthal: bad division");
        (*ch)[mu] = static_cast<long long>(num / den);
    }

    std::lock_guard<std::mutex> lk(mu);
    auto [it, inserted] = cache.emplace(std::make_pair(rs.type, hw), std::move(ch));
    return *it->second;
}

Int char_dim(const RootSystem& rs, const DomChar& ch) {
    Int d = 0;
    for (const auto& [w, m] : ch) d += rs.orbit_size(w) * make_int(m);
    return d;
}

void for_each_weight(const RootSystem& rs, const Weight& hw,
                     const std::function<void(const Weight&, long long)>& fn) {
    for (const auto& [mu, m] : dominant_character(rs, hw))
        for_each_orbit_element(rs, mu, [&](const Weight& w) { fn(w, m); });
}

Decomposition decompose_character(const RootSystem& rs, DomChar ch) {
    Decomposition out;
    for (;;) {
        const Weight* top = nullptr;
        long long top_raw = 0;
        for (const auto& [w, m] : ch) {
            if (m == 0) continue;
            long long r = rs.raw_casimir_scaled(w);
            if (!top || r > top_raw || (r == top_raw && w > *top)) {
                top = &w;
                top_raw = r;
            }
        }
        if (!top) break;
        Weight hw = *top;
        long long mult = ch.at(hw);
        if (mult < 0) throw CasboundError("decompose_character: negative residue at " + weight_str(hw));
        for (const auto& [w, m] : dominant_character(rs, hw)) {
            auto it = ch.find(w);
            long long v = (it == ch.end() ? 0 : it->second) - mult * m;
            if (v == 0) {
                if (it != ch.end()) ch.erase(it);
            } else {
                ch[w] = v;
            }
        }
        out.emplace_back(std::move(hw), mult);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        long long ca = rs.raw_casimir_scaled(a.first), cb = rs.raw_casimir_scaled(b.first);
        if (ca != cb) return ca > cb;
        return a.first > b.first;
    });
    return out;
}

Decomposition tensor_decompose(const RootSystem& rs, const Weight& a, const Weight& b) {
    const Weight* big = &a;
    const Weight* small = &b;
    if (rs.weyl_dim(a) < rs.weyl_dim(b)) std::swap(big, small);
    DomChar res;
    for_each_weight(rs, *small, [&](const Weight& nu, long long m) {
        Weight x(rs.rank);
        for (int j = 0; j < rs.rank; ++j) x[j] = (*big)[j] + nu[j] + 1;
        int sign;
        if (!rs.dominantize(x, sign)) return;
        for (int j = 0; j < rs.rank; ++j) x[j] -= 1;
        res[x] += sign * m;
    });
    Decomposition out = sorted_decomp(rs, res);
    for (const auto& [w, m] : out)
        if (m < 0) throw CasboundError("tensor_decompose: negative multiplicity");
    return out;
}

Sym2Alt2 sym2_alt2(const RootSystem& rs, const Weight& hw) {
    Int dim = rs.weyl_dim(hw);
    if (dim > 20000) throw CasboundError("sym2_alt2: module too large: " + dim.get_str());
    std::vector<std::pair<Weight, long long>> full;
    for_each_weight(rs, hw, [&](const Weight& w, long long m) { full.emplace_back(w, m); });
    DomChar sq;
    Weight s(rs.rank);
    for (const auto& [w1, m1] : full)
        for (const auto& [w2, m2] : full) {
            bool dom = true;
            for (int j = 0; j < rs.rank; ++j) {
                s[j] = w1[j] + w2[j];
                if (s[j] < 0) dom = false;
            }
            if (dom) sq[s] += m1 * m2;
        }
    DomChar psi2;
    for (const auto& [w, m] : dominant_character(rs, hw)) {
        Weight dw(rs.rank);
        for (int j = 0; j < rs.rank; ++j) dw[j] = 2 * w[j];
        psi2[dw] += m;
    }
    DomChar symc, altc;
    for (const auto& [w, m] : sq) {
        long long p = 0;
        auto it = psi2.find(w);
        if (it != psi2.end()) p = it->second;
        if ((m + p) % 2 != 0) throw CasboundError("sym2_alt2: parity violation");
        if (m + p) symc[w] = (m + p) / 2;
        if (m - p) altc[w] = (m - p) / 2;
    }
    return {decompose_character(rs, std::move(symc)), decompose_character(rs, std::move(altc))};
}

Decomposition sym2_of_module(const RootSystem& rs, const Decomposition& mod) {
    DomChar acc;
    auto add = [&](const Decomposition& d, long long f) {
        for (const auto& [w, m] : d) acc[w] += f * m;
    };
    for (size_t i = 0; i < mod.size(); ++i) {
        auto [wi, mi] = mod[i];
        Sym2Alt2 sa = sym2_alt2(rs, wi);
        add(sa.sym, mi * (mi + 1) / 2);
        add(sa.alt, mi * (mi - 1) / 2);
        for (size_t j = i + 1; j < mod.size(); ++j) {
            auto [wj, mj] = mod[j];
            add(tensor_decompose(rs, wi, wj), mi * mj);
        }
    }
    return sorted_decomp(rs, acc);
}

}  // namespace casbound
