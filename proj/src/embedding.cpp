#include "casbound/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "casbound/orbit.hpp"

namespace casbound {

namespace {

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw CasboundError("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = m[col][col];
        for (int j = 0; j < n; ++j) { m[col][j] /= p; inv[col][j] /= p; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

std::optional<Weight> Embedding::map_weight(const Weight& gw) const {
    Weight out(h.total_rank);
    for (int r = 0; r < h.total_rank; ++r) {
        long long s = 0;
        for (int j = 0; j < g->rank; ++j) s += static_cast<long long>(R_num[r][j]) * gw[j];
        if (s % R_den != 0) return std::nullopt;
        out[r] = static_cast<int>(s / R_den);
    }
    return out;
}

Rat Embedding::casimir_h(const Weight& hw) const {
    Rat total = 0;
    for (size_t c = 0; c < h.ncomp(); ++c) {
        const RootSystem& rs = h.comp(c);
        Weight part(hw.begin() + h.offset[c], hw.begin() + h.offset[c] + rs.rank);
        total += rs.casimir_normalized(part) / killing_index[c];
    }
    if (h.torus_rank > 0) {
        Rat q = 0;
        int off = h.torus_offset();
        for (int i = 0; i < h.torus_rank; ++i)
            for (int j = 0; j < h.torus_rank; ++j)
                q += hw[off + i] * torus_aux[i][j] * hw[off + j];
        total += torus_c * q;
    }
    total.canonicalize();
    return total;
}

std::string Embedding::key() const {
    std::ostringstream os;
    os << g->type.str() << ">" << h.str() << ";den" << R_den << ";";
    for (const auto& row : R_num) {
        for (int v : row) os << v << ",";
        os << "|";
    }
    return os.str();
}

EmbeddingPtr make_embedding(LieType gt, Subalgebra h, std::vector<std::vector<int>> R_num,
                            int R_den) {
    auto emb = std::make_shared<Embedding>();
    emb->g = &root_system(gt);
    emb->h = std::move(h);
    emb->R_num = std::move(R_num);
    emb->R_den = R_den;
    const RootSystem& g = *emb->g;
    if (emb->R_num.size() != static_cast<size_t>(emb->h.total_rank))
        throw CasboundError("make_embedding: R has wrong number of rows");
    for (auto& row : emb->R_num)
        if (row.size() != static_cast<size_t>(g.rank))
            throw CasboundError("make_embedding: R has wrong number of columns");
    // the root lattice must restrict integrally
    for (int i = 0; i < g.rank; ++i) {
        Weight alpha(g.cartan[i].begin(), g.cartan[i].end());
        if (!emb->map_weight(alpha))
            throw CasboundError("make_embedding: root lattice restricts non-integrally");
    }

    emb->ad_branch = branch(*emb, g.highest_root);

    // isotropy = ad(g)|_h minus ad(h)
    Decomposition iso;
    long long trivials = 0;
    for (const auto& [w, m] : emb->ad_branch) {
        long long keep = m;
        for (size_t c = 0; c < emb->h.ncomp(); ++c) {
            Weight adj = emb->h.zero();
            const Weight& theta = emb->h.comp(c).highest_root;
            std::copy(theta.begin(), theta.end(), adj.begin() + emb->h.offset[c]);
            if (w == adj) keep -= 1;
        }
        if (emb->h.is_zero_weight(w)) {
            trivials = m;
            keep -= emb->h.torus_rank;
        }
        if (keep < 0)
            throw CasboundError("make_embedding: adjoint of " + emb->h.str() +
                                " missing from ad(" + gt.str() + ")");
        if (keep > 0) iso.emplace_back(w, keep);
    }
    if (trivials < emb->h.torus_rank)
        throw CasboundError("make_embedding: torus rank exceeds centraliser");
    emb->isotropy = std::move(iso);

    // killing indices from the trace identity on each simple component
    for (size_t c = 0; c < emb->h.ncomp(); ++c) {
        const RootSystem& rs = emb->h.comp(c);
        Rat dim_h = Rat(rs.weyl_dim(rs.highest_root).get_str());
        Rat acc = 0;
        for (const auto& [w, m] : emb->isotropy) {
            Weight part(w.begin() + emb->h.offset[c], w.begin() + emb->h.offset[c] + rs.rank);
            Rat dim_m = Rat(emb->h.dim(w).get_str());
            acc += dim_m * make_int(m) * rs.casimir_normalized(part);
        }
        Rat b = 1 + acc / dim_h;
        b.canonicalize();
        emb->killing_index.push_back(b);
    }

    // torus constants
    if (emb->h.torus_rank > 0) {
        int z = emb->h.torus_rank, off = emb->h.torus_offset();
        auto ginv = invert(g.gram);
        std::vector<std::vector<Rat>> rgr(z, std::vector<Rat>(z, 0));
        for (int a = 0; a < z; ++a)
            for (int b = 0; b < z; ++b) {
                Rat s = 0;
                for (int i = 0; i < g.rank; ++i)
                    for (int j = 0; j < g.rank; ++j)
                        s += Rat(emb->R_num[off + a][i], emb->R_den) * ginv[i][j] *
                             Rat(emb->R_num[off + b][j], emb->R_den);
                rgr[a][b] = s;
            }
        emb->torus_aux = invert(rgr);
        Rat acc = 0;
        for (const auto& [w, m] : emb->isotropy) {
            Rat q = 0;
            for (int a = 0; a < z; ++a)
                for (int b = 0; b < z; ++b) q += w[off + a] * emb->torus_aux[a][b] * w[off + b];
            acc += Rat(emb->h.dim(w)) * make_int(m) * q;
        }
        if (acc == 0) throw CasboundError("make_embedding: torus acts trivially on isotropy");
        emb->torus_c = Rat(z) / acc;
        emb->torus_c.canonicalize();
    }
    return emb;
}

EmbeddingPtr restriction_from_defining(LieType gt, Subalgebra h,
                                       const std::vector<std::pair<Weight, int>>& defining) {
    const RootSystem& g = root_system(gt);
    int n = g.rank;
    // expand to the full weight list of the defining module
    std::vector<Weight> q;
    for (const auto& [hw, mult] : defining)
        h.for_each_weight(hw, [&](const Weight& w, long long m) {
            for (long long k = 0; k < m * mult; ++k) q.push_back(w);
        });
    std::sort(q.begin(), q.end(), std::greater<>());

    size_t want = 0;
    switch (gt.series) {
        case Series::A: want = n + 1; break;
        case Series::B: want = 2 * n + 1; break;
        case Series::C:
        case Series::D: want = 2 * n; break;
        default: throw CasboundError("restriction_from_defining: g must be classical");
    }
    if (q.size() != want)
        throw CasboundError("restriction_from_defining: defining module of " + gt.str() +
                            " must have dimension " + std::to_string(want));

    if (gt.series == Series::A) {
        Weight sum(h.total_rank, 0);
        for (const Weight& w : q)
            for (int j = 0; j < h.total_rank; ++j) sum[j] += w[j];
        if (!h.is_zero_weight(sum))
            throw CasboundError("restriction_from_defining: defining weights must sum to zero");
    } else {
        // closed under negation; for B the middle weight must be zero
        for (size_t i = 0; i < q.size() / 2; ++i) {
            Weight neg = q[q.size() - 1 - i];
            for (int& v : neg) v = -v;
            if (neg != q[i])
                throw CasboundError("restriction_from_defining: weights not negation-symmetric");
        }
        if (gt.series == Series::B && !h.is_zero_weight(q[n]))
            throw CasboundError("restriction_from_defining: middle weight must vanish");
    }

    // columns of 2R: doubled h-images of the fundamental weights
    std::vector<Weight> partial(n + 1, Weight(h.total_rank, 0));  // partial[i] = q_1+...+q_i
    for (int i = 1; i <= n; ++i) {
        partial[i] = partial[i - 1];
        for (int j = 0; j < h.total_rank; ++j) partial[i][j] += q[i - 1][j];
    }
    std::vector<std::vector<int>> col2(n, std::vector<int>(h.total_rank));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < h.total_rank; ++j) col2[i][j] = 2 * partial[i + 1][j];
    if (gt.series == Series::B) {
        for (int j = 0; j < h.total_rank; ++j) col2[n - 1][j] = partial[n][j];
    } else if (gt.series == Series::D) {
        for (int j = 0; j < h.total_rank; ++j) {
            col2[n - 2][j] = partial[n - 1][j] - q[n - 1][j];
            col2[n - 1][j] = partial[n][j];
        }
    }
    bool all_even = true;
    for (auto& col : col2)
        for (int v : col)
            if (v % 2 != 0) all_even = false;
    std::vector<std::vector<int>> R(h.total_rank, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < h.total_rank; ++j) R[j][i] = all_even ? col2[i][j] / 2 : col2[i][j];
    return make_embedding(gt, std::move(h), std::move(R), all_even ? 1 : 2);
}

EmbeddingPtr regular_subalgebra(LieType gt, Subalgebra h, const std::vector<Weight>& h_simple_roots,
                                const std::vector<Weight>& torus_rows) {
    const RootSystem& g = root_system(gt);
    int simple = h.total_rank - h.torus_rank;
    if (static_cast<int>(h_simple_roots.size()) != simple ||
        static_cast<int>(torus_rows.size()) != h.torus_rank)
        throw CasboundError("regular_subalgebra: row count mismatch");
    std::vector<std::vector<int>> R(h.total_rank, std::vector<int>(g.rank));
    for (int r = 0; r < simple; ++r) {
        const Weight& beta = h_simple_roots[r];
        long long bb = 0;  // (beta,beta) * gram_den
        for (int i = 0; i < g.rank; ++i) {
            if (!beta[i]) continue;
            long long row = 0;
            for (int j = 0; j < g.rank; ++j) row += g.gram_num[i][j] * beta[j];
            bb += static_cast<long long>(beta[i]) * row;
        }
        if (bb <= 0) throw CasboundError("regular_subalgebra: zero root");
        for (int j = 0; j < g.rank; ++j) {
            long long num = 0;
            for (int i = 0; i < g.rank; ++i)
                num += static_cast<long long>(beta[i]) * g.gram_num[i][j];
            if ((2 * num) % bb != 0)
                throw CasboundError("regular_subalgebra: non-integral coroot row");
            R[r][j] = static_cast<int>(2 * num / bb);
        }
    }
    for (int t = 0; t < h.torus_rank; ++t) R[simple + t] = torus_rows[t];
    return make_embedding(gt, std::move(h), std::move(R), 1);
}

EmbeddingPtr compose(const EmbeddingPtr& outer, const std::vector<EmbeddingPtr>& inner) {
    const Subalgebra& k = outer->h;
    if (inner.size() != k.ncomp()) throw CasboundError("compose: inner count mismatch");
    std::vector<LieType> comps;
    int torus = outer->h.torus_rank;
    for (size_t i = 0; i < inner.size(); ++i) {
        if (!inner[i]) {
            comps.push_back(k.components[i]);
            continue;
        }
        if (inner[i]->g->type != k.components[i])
            throw CasboundError("compose: inner embedding type mismatch");
        for (LieType t : inner[i]->h.components) comps.push_back(t);
        torus += inner[i]->h.torus_rank;
    }
    Subalgebra h = Subalgebra::make(std::move(comps), torus);
    int gcols = outer->g->rank;
    // build rows over a common denominator
    long den = outer->R_den;
    for (const auto& e : inner)
        if (e) den = std::lcm(den, static_cast<long>(e->R_den) * outer->R_den);
    std::vector<std::vector<int>> simple_rows, torus_rows;
    auto push_composite = [&](const std::vector<int>& irow, int iden, size_t comp_i,
                              std::vector<std::vector<int>>& dst) {
        std::vector<int> out(gcols, 0);
        long scale = den / (static_cast<long>(iden) * outer->R_den);
        int koff = k.offset[comp_i];
        int krank = k.comp(comp_i).rank;
        for (int j = 0; j < gcols; ++j) {
            long long s = 0;
            for (int t = 0; t < krank; ++t)
                s += static_cast<long long>(irow[t]) * outer->R_num[koff + t][j];
            out[j] = static_cast<int>(s * scale);
        }
        dst.push_back(std::move(out));
    };
    for (size_t i = 0; i < inner.size(); ++i) {
        int krank = k.comp(i).rank;
        if (!inner[i]) {
            for (int t = 0; t < krank; ++t) {
                std::vector<int> e(krank, 0);
                e[t] = 1;
                push_composite(e, 1, i, simple_rows);
            }
            continue;
        }
        const Embedding& e = *inner[i];
        int esimple = e.h.total_rank - e.h.torus_rank;
        for (int r = 0; r < esimple; ++r) push_composite(e.R_num[r], e.R_den, i, simple_rows);
        for (int r = esimple; r < e.h.total_rank; ++r)
            push_composite(e.R_num[r], e.R_den, i, torus_rows);
    }
    for (int t = 0; t < outer->h.torus_rank; ++t) {
        std::vector<int> row(gcols);
        long scale = den / outer->R_den;
        int off = outer->h.torus_offset();
        for (int j = 0; j < gcols; ++j)
            row[j] = static_cast<int>(static_cast<long long>(outer->R_num[off + t][j]) * scale);
        torus_rows.push_back(std::move(row));
    }
    std::vector<std::vector<int>> R = std::move(simple_rows);
    for (auto& r : torus_rows) R.push_back(std::move(r));
    // reduce the common denominator if possible
    long gc = den;
    for (const auto& row : R)
        for (int v : row) gc = std::gcd(gc, static_cast<long>(std::abs(v)));
    if (gc > 1) {
        den /= gc;
        for (auto& row : R)
            for (int& v : row) v /= static_cast<int>(gc);
    }
    return make_embedding(outer->g->type, std::move(h), std::move(R), static_cast<int>(den));
}

long long trivial_multiplicity(const Embedding& emb, const Weight& gamma) {
    for (const auto& [w, m] : branch(emb, gamma))
        if (emb.h.is_zero_weight(w)) return m;
    return 0;
}

long long hom_dim(const Embedding& emb, const Weight& gamma, const Decomposition& M) {
    const Decomposition& b = branch(emb, gamma);
    std::unordered_map<Weight, long long, WeightHash> bm;
    for (const auto& [w, m] : b) bm[w] = m;
    long long total = 0;
    for (const auto& [w, m] : M) {
        auto it = bm.find(w);
        if (it != bm.end()) total += it->second * m;
    }
    return total;
}

}  // namespace casbound
