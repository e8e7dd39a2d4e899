// Derives restriction matrices for the maximal S-subalgebras of the
// exceptional Lie algebras by searching for a weight-multiset-preserving
// linear restriction map, anchored at the highest weight of a small faithful
// module.  Results are verified through make_embedding (integrality, adjoint
// branching, Killing indices) and by the Einstein constant of the resulting
// homogeneous space, then printed in a form suitable for freezing into the
// catalog.
#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include "casbound/embedding.hpp"

using namespace casbound;

namespace {

LieType A(int n) { return {Series::A, n}; }
LieType B(int n) { return {Series::B, n}; }
LieType C(int n) { return {Series::C, n}; }
LieType D(int n) { return {Series::D, n}; }
constexpr LieType E6{Series::E, 6}, E7{Series::E, 7}, E8{Series::E, 8};
constexpr LieType F4{Series::F, 4}, G2{Series::G, 2};

using Multiset = std::map<Weight, long long>;

Multiset g_weights(const RootSystem& rs, const Weight& hw) {
    Multiset m;
    for_each_weight(rs, hw, [&](const Weight& w, long long mult) { m[w] += mult; });
    return m;
}

Multiset h_weights(const Subalgebra& h, const std::vector<Weight>& hws) {
    Multiset m;
    for (const Weight& hw : hws)
        h.for_each_weight(hw, [&](const Weight& w, long long mult) { m[w] += mult; });
    return m;
}

// Solve R * C^T = U over the rationals; returns (R, den) or nullopt.
std::optional<std::pair<std::vector<std::vector<int>>, int>> solve_r(
    const RootSystem& rs, const std::vector<std::vector<Rat>>& u) {
    int n = rs.rank, r = static_cast<int>(u.size());
    // transpose(C) columns: solve C^T x = u_row^T per row -> x^T = row of R
    std::vector<std::vector<Rat>> R(r, std::vector<Rat>(n));
    for (int row = 0; row < r; ++row) {
        // Gaussian elimination on C^T | u_row
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = rs.cartan[j][i];
            m[i][n] = u[row][i];
        }
        for (int col = 0; col < n; ++col) {
            int piv = col;
            while (piv < n && m[piv][col] == 0) ++piv;
            if (piv == n) return std::nullopt;
            std::swap(m[piv], m[col]);
            for (int i = 0; i < n; ++i) {
                if (i == col || m[i][col] == 0) continue;
                Rat f = m[i][col] / m[col][col];
                for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
            }
        }
        for (int i = 0; i < n; ++i) R[row][i] = m[i][n] / m[i][i];
    }
    Int lcm = 1;
    for (auto& row : R)
        for (Rat& q : row) {
            q.canonicalize();
            lcm = lcm * q.get_den() / gcd(lcm, Int(q.get_den()));
        }
    if (lcm > 64) return std::nullopt;
    std::vector<std::vector<int>> out(r, std::vector<int>(n));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = R[i][j] * lcm;
            v.canonicalize();
            out[i][j] = static_cast<int>(v.get_num().get_si());
        }
    return std::make_pair(out, static_cast<int>(lcm.get_si()));
}

std::optional<Rat> einstein_e(const Embedding& emb) {
    std::optional<Rat> c;
    for (const auto& [w, mult] : emb.isotropy) {
        Rat cw = emb.casimir_h(w);
        if (!c)
            c = cw;
        else if (*c != cw)
            return std::nullopt;
    }
    if (!c) return std::nullopt;
    return Rat(1, 4) + *c / 2;
}

void print_matrix(const std::string& name, const std::vector<std::vector<int>>& R, int den) {
    std::cout << name << " (den " << den << "):\n";
    for (const auto& row : R) {
        std::cout << "  {";
        for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? ", " : "") << row[j];
        std::cout << "},\n";
    }
}

// Anchored search: find an integral linear map sending the weight multiset of
// V_g(hw) onto the weights of the target h-modules.  The map is reconstructed
// from the images of the simple roots, which are fixed lazily while walking
// the weight diagram downward from the highest weight.
struct AnchorSearch {
    const RootSystem& g;
    Subalgebra h;
    Weight ghw;
    std::vector<Weight> targets;
    Rat expect_e;
    std::string name;

    std::vector<Weight> order;  // weights, highest first
    std::vector<long long> mult;
    std::vector<int> parent, via;
    Multiset tcount;
    std::vector<std::optional<Weight>> c;  // image of each simple root
    std::vector<Weight> img;
    bool found = false;

    void run() {
        Multiset wg = g_weights(g, ghw);
        tcount = h_weights(h, targets);
        // heights via rho-pairing proxy: coordinates in the root basis
        std::map<Weight, Rat> height;
        {
            // x = C^{-T} w summed: use solve with u = single row
            for (auto& [w, m] : wg) {
                std::vector<std::vector<Rat>> u(1, std::vector<Rat>(w.begin(), w.end()));
                auto res = [&] {
                    // sum of root-basis coordinates of w: solve C^T x = w
                    int n = g.rank;
                    std::vector<std::vector<Rat>> mm(n, std::vector<Rat>(n + 1));
                    for (int i = 0; i < n; ++i) {
                        for (int j = 0; j < n; ++j) mm[i][j] = g.cartan[j][i];
                        mm[i][n] = w[i];
                    }
                    for (int col = 0; col < n; ++col) {
                        int piv = col;
                        while (mm[piv][col] == 0) ++piv;
                        std::swap(mm[piv], mm[col]);
                        for (int i = 0; i < n; ++i) {
                            if (i == col || mm[i][col] == 0) continue;
                            Rat f = mm[i][col] / mm[col][col];
                            for (int j = col; j <= n; ++j) mm[i][j] -= f * mm[col][j];
                        }
                    }
                    Rat s = 0;
                    for (int i = 0; i < n; ++i) s += mm[i][n] / mm[i][i];
                    return s;
                }();
                height[w] = res;
            }
        }
        for (auto& [w, m] : wg) {
            order.push_back(w);
            mult.push_back(m);
        }
        std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
            if (height.at(a) != height.at(b)) return height.at(a) > height.at(b);
            return a > b;
        });
        std::map<Weight, int> index;
        for (size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
        for (size_t i = 0; i < order.size(); ++i) mult[i] = wg.at(order[i]);
        parent.assign(order.size(), -1);
        via.assign(order.size(), -1);
        for (size_t k = 1; k < order.size(); ++k) {
            for (int i = 0; i < g.rank && parent[k] < 0; ++i) {
                Weight p = order[k];
                for (int j = 0; j < g.rank; ++j) p[j] += g.cartan[i][j];
                auto it = index.find(p);
                if (it != index.end() && it->second < static_cast<int>(k)) {
                    parent[k] = it->second;
                    via[k] = i;
                }
            }
            if (parent[k] < 0) {
                std::cout << name << ": weight diagram not connected\n";
                return;
            }
        }
        c.assign(g.rank, std::nullopt);
        img.assign(order.size(), {});
        dfs(0);
        if (!found) std::cout << name << ": NO SOLUTION FOUND\n";
    }

    bool try_weight(size_t k, const Weight& t) {
        auto it = tcount.find(t);
        if (it == tcount.end() || it->second < mult[k]) return false;
        it->second -= mult[k];
        img[k] = t;
        dfs(k + 1);
        it->second += mult[k];
        return true;
    }

    void dfs(size_t k) {
        if (found) return;
        if (k == order.size()) {
            finish();
            return;
        }
        if (k == 0) {
            std::vector<Weight> cands;
            for (auto& [t, cnt] : tcount)
                if (cnt >= mult[0]) cands.push_back(t);
            for (auto& t : cands) {
                if (try_weight(0, t)) {
                }
                if (found) return;
            }
            return;
        }
        int i = via[k];
        if (c[i]) {
            Weight t = img[parent[k]];
            for (int j = 0; j < h.total_rank; ++j) t[j] -= (*c[i])[j];
            try_weight(k, t);
            return;
        }
        std::vector<Weight> cands;
        for (auto& [t, cnt] : tcount)
            if (cnt >= mult[k]) cands.push_back(t);
        for (auto& t : cands) {
            Weight ci = img[parent[k]];
            for (int j = 0; j < h.total_rank; ++j) ci[j] -= t[j];
            c[i] = ci;
            try_weight(k, t);
            c[i] = std::nullopt;
            if (found) return;
        }
    }

    void finish() {
        std::vector<std::vector<Rat>> u(h.total_rank, std::vector<Rat>(g.rank));
        for (int i = 0; i < g.rank; ++i) {
            if (!c[i]) return;  // some simple root unconstrained; skip
            for (int r = 0; r < h.total_rank; ++r) u[r][i] = (*c[i])[r];
        }
        auto solved = solve_r(g, u);
        if (!solved) return;
        auto [R, den] = *solved;
        // linear consistency at the anchor
        for (int r = 0; r < h.total_rank; ++r) {
            long long s = 0;
            for (int j = 0; j < g.rank; ++j) s += static_cast<long long>(R[r][j]) * ghw[j];
            if (s != img[0][r] * den) return;
        }
        try {
            auto emb = make_embedding(g.type, h, R, den);
            auto e = einstein_e(*emb);
            if (!e || *e != expect_e) return;
            std::cout << name << ": verified, E = " << rat_str(*e) << "\n";
            print_matrix(name, R, den);
            found = true;
        } catch (const std::exception&) {
        }
    }
};

void anchor(const std::string& name, LieType g, std::vector<LieType> hcomps, Weight ghw,
            std::vector<Weight> targets, Rat e) {
    AnchorSearch s{root_system(g), Subalgebra::make(hcomps, 0), ghw, targets, e, name};
    s.run();
}

// --- partner-component search --------------------------------------------

// kappa-form on coroot coordinates, scaled to integers: F[i][j] = 2*C[i][j]/d_i
std::vector<std::vector<long long>> kappa(const RootSystem& g) {
    std::vector<int> d;
    switch (g.type.series) {
        case Series::B: d.assign(g.rank, 2); d.back() = 1; break;
        case Series::C: d.assign(g.rank, 1); d.back() = 2; break;
        case Series::F: d = {2, 2, 1, 1}; break;
        case Series::G: d = {1, 3}; break;
        default: d.assign(g.rank, 1);
    }
    std::vector<std::vector<long long>> F(g.rank, std::vector<long long>(g.rank));
    for (int i = 0; i < g.rank; ++i)
        for (int j = 0; j < g.rank; ++j) F[i][j] = 6LL * g.cartan[i][j] / d[i];
    return F;
}

long long form(const std::vector<std::vector<long long>>& F, const std::vector<int>& a,
               const std::vector<int>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) s += F[i][j] * a[i] * b[j];
    return s;
}

// integer nullspace of { z : row . F . z = 0 } for each fixed row
std::vector<std::vector<int>> complement_lattice(const RootSystem& g,
                                                 const std::vector<std::vector<int>>& rows) {
    auto F = kappa(g);
    int n = g.rank;
    std::vector<std::vector<Rat>> m;
    for (const auto& r : rows) {
        std::vector<Rat> out(n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) out[j] += Rat(r[i]) * Rat(static_cast<long>(F[i][j]));
        m.push_back(std::move(out));
    }
    std::vector<int> pivot_col;
    size_t row = 0;
    for (int col = 0; col < n && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        for (size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == row || m[r2][col] == 0) continue;
            Rat f = m[r2][col] / m[row][col];
            for (int j = 0; j < n; ++j) m[r2][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<std::vector<int>> out;
    for (int col = 0; col < n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        std::vector<Rat> z(n, 0);
        z[col] = 1;
        for (size_t r2 = 0; r2 < pivot_col.size(); ++r2)
            z[pivot_col[r2]] = -m[r2][col] / m[r2][pivot_col[r2]];
        Int lcm = 1;
        for (Rat& q : z) {
            q.canonicalize();
            lcm = lcm * q.get_den() / gcd(lcm, Int(q.get_den()));
        }
        std::vector<int> zi(n);
        for (int j = 0; j < n; ++j) {
            Rat v = z[j] * lcm;
            v.canonicalize();
            zi[j] = static_cast<int>(v.get_num().get_si());
        }
        out.push_back(std::move(zi));
    }
    return out;
}

std::vector<std::vector<int>> lattice_vectors(const std::vector<std::vector<int>>& basis,
                                              int bound) {
    std::vector<std::vector<int>> out;
    int k = static_cast<int>(basis.size()), n = static_cast<int>(basis[0].size());
    std::vector<int> a(k, -bound);
    while (true) {
        std::vector<int> z(n, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) z[j] += a[i] * basis[i][j];
        bool zero = std::all_of(z.begin(), z.end(), [](int v) { return v == 0; });
        if (!zero) out.push_back(std::move(z));
        int i = 0;
        while (i < k && a[i] == bound) a[i++] = -bound;
        if (i == k) break;
        ++a[i];
    }
    return out;
}

// Search for partner rows completing `fixed` (an already-known commuting
// factor) to h = [partner, fixed...]: enumerates small vectors in the
// kappa-orthogonal complement, filters by the Cartan relations of the partner
// type, and accepts on the expected Einstein constant.
void partner_search(const std::string& name, LieType g, LieType partner_type,
                    std::vector<LieType> fixed_comps, std::vector<std::vector<int>> fixed_rows,
                    Rat expect_e, int bound = 3) {
    const RootSystem& rs = root_system(g);
    auto F = kappa(rs);
    auto basis = complement_lattice(rs, fixed_rows);
    auto cands = lattice_vectors(basis, bound);
    std::vector<LieType> comps{partner_type};
    comps.insert(comps.end(), fixed_comps.begin(), fixed_comps.end());
    Subalgebra h = Subalgebra::make(comps, 0);
    auto accept = [&](const std::vector<std::vector<int>>& prows) {
        std::vector<std::vector<int>> R = prows;
        R.insert(R.end(), fixed_rows.begin(), fixed_rows.end());
        try {
            auto emb = make_embedding(g, h, R, 1);
            auto e = einstein_e(*emb);
            if (!e || *e != expect_e) return false;
            std::cout << name << ": verified, E = " << rat_str(*e) << "\n";
            print_matrix(name, R, 1);
            return true;
        } catch (const std::exception&) {
            return false;
        }
    };
    if (partner_type.rank == 1) {
        for (auto& z : cands)
            if (accept({z})) return;
    } else if (partner_type.series == Series::A) {  // A2
        for (auto& z1 : cands)
            for (auto& z2 : cands) {
                long long n1 = form(F, z1, z1);
                if (n1 != form(F, z2, z2) || 2 * form(F, z1, z2) != -n1) continue;
                if (accept({z1, z2})) return;
            }
    } else {  // G2: rows (alpha1^v, alpha2^v), alpha1 short
        for (auto& z1 : cands)
            for (auto& z2 : cands) {
                long long n1 = form(F, z1, z1), n2 = form(F, z2, z2);
                if (n1 != 3 * n2 || 2 * form(F, z1, z2) != -n1) continue;
                if (accept({z1, z2})) return;
            }
    }
    std::cout << name << ": NO SOLUTION FOUND (" << cands.size() << " candidates, basis rank "
              << basis.size() << ")\n";
}

std::vector<std::vector<int>> pad_cols(std::vector<std::vector<int>> rows, int cols) {
    for (auto& r : rows) r.resize(cols, 0);
    return rows;
}

// F4 inside E6 by folding the diagram: coroot rows for (alpha2; alpha4;
// alpha3+alpha5; alpha1+alpha6).
const std::vector<std::vector<int>> f4_in_e6 = {
    {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}, {1, 0, 0, 0, 0, 1}};

std::vector<std::vector<int>> sp3_rows_in_e7() {
    const RootSystem& g = root_system(E7);
    auto a5_a2 = regular_subalgebra(
        E7, Subalgebra::make({A(5), A(2)}, 0),
        {Weight(g.cartan[1].begin(), g.cartan[1].end()),
         Weight(g.cartan[3].begin(), g.cartan[3].end()),
         Weight(g.cartan[4].begin(), g.cartan[4].end()),
         Weight(g.cartan[5].begin(), g.cartan[5].end()),
         Weight(g.cartan[6].begin(), g.cartan[6].end()),
         Weight(g.cartan[0].begin(), g.cartan[0].end()),
         [&] {
             Weight w = g.highest_root;
             for (int& v : w) v = -v;
             return w;
         }()});
    auto sp3 = restriction_from_defining(A(5), Subalgebra::make({C(3)}, 0), {{{1, 0, 0}, 1}});
    auto full = compose(a5_a2, {sp3, nullptr});
    if (full->R_den != 1) throw CasboundError("unexpected denominator");
    return {full->R_num.begin(), full->R_num.begin() + 3};
}

std::vector<std::vector<int>> g2_rows_in_f4() {
    const RootSystem& g = root_system(F4);
    Weight mt = g.highest_root;
    for (int& v : mt) v = -v;
    auto b4 = regular_subalgebra(F4, Subalgebra::make({B(4)}, 0),
                                 {mt, Weight(g.cartan[0].begin(), g.cartan[0].end()),
                                  Weight(g.cartan[1].begin(), g.cartan[1].end()),
                                  Weight(g.cartan[2].begin(), g.cartan[2].end())});
    auto b3 = restriction_from_defining(B(4), Subalgebra::make({B(3)}, 0),
                                        {{{1, 0, 0}, 1}, {{0, 0, 0}, 2}});
    auto g2 = restriction_from_defining(B(3), Subalgebra::make({G2}, 0), {{{1, 0}, 1}});
    auto full = compose(compose(b4, {b3}), {g2});
    if (full->R_den != 1) throw CasboundError("unexpected denominator");
    return full->R_num;
}

}  // namespace

int main() {
    // verify the folding matrix f4 < e6 before using it
    {
        auto emb = make_embedding(E6, Subalgebra::make({F4}, 0), f4_in_e6, 1);
        std::unordered_map<Weight, long long, WeightHash> br;
        for (auto& [w, m] : branch(*emb, {1, 0, 0, 0, 0, 0})) br[w] += m;
        bool ok = br.size() == 2 && br[{0, 0, 0, 1}] == 1 && br[{0, 0, 0, 0}] == 1;
        std::cout << "f4 < e6 fold: 27 -> 26 + 1: " << (ok ? "ok" : "FAIL") << "\n";
    }

    anchor("e6_su3", E6, {A(2)}, {1, 0, 0, 0, 0, 0}, {{2, 2}}, {11, 36});
    anchor("e6_g2", E6, {G2}, {1, 0, 0, 0, 0, 0}, {{2, 0}}, {25, 72});
    anchor("e7_su3", E7, {A(2)}, {0, 0, 0, 0, 0, 0, 1}, {{6, 0}, {0, 6}}, {71, 252});
    // 248 -> V(0,2) + V(0,6) + V(3,2) over so(5)
    anchor("e8_so5", E8, {B(2)}, {0, 0, 0, 0, 0, 0, 0, 1}, {{0, 2}, {0, 6}, {3, 2}}, {13, 48});

    {  // e6 > su(3) + g2: g2 from triality on D4 < D5 < e6, su(3) by search
        std::vector<std::vector<int>> g2rows = {{0, 1, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 0}};
        partner_search("e6_su3_g2", E6, A(2), {G2}, g2rows, {19, 48});
    }
    partner_search("e7_su2_f4", E7, A(1), {F4}, pad_cols(f4_in_e6, 7), {47, 108});
    partner_search("e7_g2_sp3", E7, G2, {C(3)}, sp3_rows_in_e7(), {7, 18});
    partner_search("e8_g2_f4", E8, G2, {F4}, pad_cols(f4_in_e6, 8), {23, 60});
    partner_search("f4_su2_g2", F4, A(1), {G2}, g2_rows_in_f4(), {29, 72}, 5);
    return 0;
}
