#include <algorithm>

#include "casbound/cache.hpp"
#include "casbound/embedding.hpp"
#include "casbound/orbit.hpp"

namespace casbound {

namespace {

// Modules up to this dimension restrict by direct weight-pushforward; larger
// ones go through the tensor-factorisation recursion.
constexpr long kDirectThreshold = 60'000'000;

Decomposition branch_direct(const Embedding& emb, const Weight& gamma) {
    const RootSystem& g = *emb.g;
    const Subalgebra& h = emb.h;
    DomChar acc;
    int hr = h.total_rank, gr = g.rank, den = emb.R_den;
    Weight img(hr);
    for (const auto& [mu, mult] : dominant_character(g, gamma)) {
        for_each_orbit_element(g, mu, [&](const Weight& w) {
            for (int r = 0; r < hr; ++r) {
                long long s = 0;
                const auto& row = emb.R_num[r];
                for (int j = 0; j < gr; ++j) s += static_cast<long long>(row[j]) * w[j];
                img[r] = static_cast<int>(s / den);
            }
            if (h.is_dominant(img)) acc[img] += mult;
        });
    }
    return h.decompose_character(std::move(acc));
}

Decomposition branch_recursive(const Embedding& emb, const Weight& gamma) {
    const RootSystem& g = *emb.g;
    const Subalgebra& h = emb.h;
    // split off the cheapest available fundamental weight
    int split = -1;
    Int best = 0;
    for (int i = 0; i < g.rank; ++i) {
        if (gamma[i] == 0) continue;
        Weight wi = g.zero();
        wi[i] = 1;
        Int d = g.weyl_dim(wi);
        if (split < 0 || d < best) { split = i; best = d; }
    }
    if (split < 0 || best > kDirectThreshold)
        throw CasboundError("branch: no usable tensor split for " + weight_str(gamma));
    Weight omega = g.zero();
    omega[split] = 1;
    Weight nu = gamma;
    nu[split] -= 1;

    const Decomposition& b_small = branch(emb, omega);
    const Decomposition& b_big = branch(emb, nu);

    // dominant part of the product character
    std::vector<std::pair<Weight, long long>> small_list;
    for (const auto& [delta, m] : b_small)
        h.for_each_weight(delta, [&](const Weight& w, long long mw) {
            small_list.emplace_back(w, m * mw);
        });
    DomChar acc;
    int hr = h.total_rank;
    Weight s(hr);
    for (const auto& [delta, m] : b_big) {
        h.for_each_weight(delta, [&](const Weight& w2, long long m2) {
            long long f = m * m2;
            for (const auto& [w1, m1] : small_list) {
                for (int j = 0; j < hr; ++j) s[j] = w1[j] + w2[j];
                if (h.is_dominant(s)) acc[s] += f * m1;
            }
        });
    }
    // remove the lower Klimyk components
    for (const auto& [u, mu] : tensor_decompose(g, omega, nu)) {
        if (u == gamma) continue;
        for (const auto& [delta, md] : branch(emb, u))
            for (const auto& [w, mc] : h.dominant_character(delta)) acc[w] -= mu * md * mc;
    }
    return h.decompose_character(std::move(acc));
}

}  // namespace

const Decomposition& branch(const Embedding& emb, const Weight& gamma) {
    {
        std::lock_guard<std::mutex> lk(emb.cache_mu);
        auto it = emb.branch_cache.find(gamma);
        if (it != emb.branch_cache.end()) return it->second;
    }
    Decomposition result;
    bool computed = false;
    if (!emb.map_weight(gamma)) {
        computed = true;  // weight lattice of the pair excludes gamma
    } else if (disk_cache_load(emb.key(), gamma, emb.h.total_rank, result)) {
        computed = true;
    }
    if (!computed) {
        Int dim = emb.g->weyl_dim(gamma);
        result = dim <= kDirectThreshold ? branch_direct(emb, gamma) : branch_recursive(emb, gamma);
        Int check = 0;
        for (const auto& [w, m] : result) check += emb.h.dim(w) * make_int(m);
        if (check != dim)
            throw CasboundError("branch: dimension mismatch for " + weight_str(gamma) + ": " +
                                check.get_str() + " vs " + dim.get_str());
        disk_cache_store(emb.key(), gamma, result);
    }
    std::lock_guard<std::mutex> lk(emb.cache_mu);
    auto [it, ins] = emb.branch_cache.emplace(gamma, std::move(result));
    return it->second;
}

}  // namespace casbound
