#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "casbound/space.hpp"

namespace casbound {

namespace {

LieType A(int n) { return {Series::A, n}; }
LieType B(int n) { return {Series::B, n}; }
LieType C(int n) { return {Series::C, n}; }
LieType D(int n) { return {Series::D, n}; }
constexpr LieType E6{Series::E, 6}, E7{Series::E, 7}, E8{Series::E, 8};
constexpr LieType F4{Series::F, 4}, G2{Series::G, 2};

LieType su(int n) { return A(n - 1); }
LieType sp(int n) { return C(n); }

// so(n) on the g side (n >= 5)
LieType so_g(int n) { return n % 2 ? B(n / 2) : D(n / 2); }

// so(n) as a list of simple components plus the highest weight of the
// n-dimensional vector module in per-component coordinates (n >= 3).
struct SoAlg {
    std::vector<LieType> comps;
    std::vector<Weight> vec;
};

SoAlg so_h(int n) {
    switch (n) {
        case 3: return {{A(1)}, {{2}}};
        case 4: return {{A(1), A(1)}, {{1}, {1}}};
        case 5: return {{B(2)}, {{1, 0}}};
        case 6: return {{A(3)}, {{0, 1, 0}}};
        default: {
            Weight v(n / 2, 0);
            v[0] = 1;
            return {{so_g(n)}, {v}};
        }
    }
}

// Flat h-weight from per-component parts (empty part = zero) + torus charges.
Weight flat(const Subalgebra& h, std::vector<Weight> parts, Weight torus = {}) {
    Weight w = h.zero();
    for (size_t c = 0; c < parts.size(); ++c) {
        if (parts[c].empty()) continue;
        std::copy(parts[c].begin(), parts[c].end(), w.begin() + h.offset[c]);
    }
    for (size_t t = 0; t < torus.size(); ++t) w[h.torus_offset() + t] = torus[t];
    return w;
}

Weight fund(int rank, int i) {
    Weight w(rank, 0);
    w[i - 1] = 1;
    return w;
}

Weight alpha(const RootSystem& g, int i) {  // simple root, 1-based Bourbaki
    return Weight(g.cartan[i - 1].begin(), g.cartan[i - 1].end());
}

Weight minus_theta(const RootSystem& g) {
    Weight w = g.highest_root;
    for (int& v : w) v = -v;
    return w;
}

// Primitive integer basis of { z : z . beta = 0 for all given beta }.
std::vector<Weight> ortho_rows(int n, const std::vector<Weight>& betas) {
    std::vector<std::vector<Rat>> m;
    for (const Weight& b : betas) m.emplace_back(b.begin(), b.end());
    std::vector<int> pivot_col;
    size_t row = 0;
    for (int col = 0; col < n && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (int j = 0; j < n; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<Weight> out;
    for (int col = 0; col < n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        std::vector<Rat> z(n, 0);
        z[col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            z[pivot_col[r]] = -m[r][col] / m[r][pivot_col[r]];
        Int lcm = 1;
        for (Rat& q : z) {
            q.canonicalize();
            lcm = lcm * q.get_den() / gcd(lcm, Int(q.get_den()));
        }
        Weight zi(n);
        Int g = 0;
        for (int j = 0; j < n; ++j) {
            Rat v = z[j] * lcm;
            v.canonicalize();
            zi[j] = static_cast<int>(v.get_num().get_si());
            g = gcd(g, Int(abs(v.get_num())));
        }
        if (g > 1)
            for (int& v : zi) v /= static_cast<int>(g.get_si());
        out.push_back(std::move(zi));
    }
    return out;
}

EmbeddingPtr principal_a1_in_a2() {
    return restriction_from_defining(A(2), Subalgebra::make({A(1)}, 0), {{{2}, 1}});
}

EmbeddingPtr max_torus(LieType gt) {
    const RootSystem& g = root_system(gt);
    std::vector<std::vector<int>> R(g.rank, std::vector<int>(g.rank, 0));
    for (int i = 0; i < g.rank; ++i) R[i][i] = 1;
    return make_embedding(gt, Subalgebra::make({}, g.rank), std::move(R), 1);
}

struct Builder {
    std::vector<SpaceSpec> list;

    void add(std::string name, std::string family, std::vector<int> params, LieType g,
             std::string h_label, std::function<EmbeddingPtr()> make, bool sphere = false,
             bool reconstructed = false) {
        SpaceSpec s;
        s.name = std::move(name);
        s.family = std::move(family);
        s.parameters = std::move(params);
        s.sphere = sphere;
        s.reconstructed = reconstructed;
        s.g = g;
        s.h_label = std::move(h_label);
        s.make = std::move(make);
        list.push_back(std::move(s));
    }

    void defining(std::string name, std::string family, std::vector<int> params, LieType g,
                  std::vector<LieType> comps, int torus,
                  std::vector<std::pair<std::vector<Weight>, Weight>> entries, bool sphere = false,
                  bool reconstructed = false) {
        Subalgebra h = Subalgebra::make(comps, torus);
        std::string label = h.str();
        std::vector<std::pair<Weight, int>> def;
        for (auto& [parts, tor] : entries) def.emplace_back(flat(h, parts, tor), 1);
        add(std::move(name), std::move(family), std::move(params), g, std::move(label),
            [g, h = std::move(h), def = std::move(def)]() {
                return restriction_from_defining(g, h, def);
            },
            sphere, reconstructed);
    }
};

// ---------------------------------------------------------------------------
// Families I-X (isotropy irreducible): three smallest parameters each.

void families_i_to_x(Builder& b) {
    for (int n : {5, 6, 7})
        b.defining("family_I_n" + std::to_string(n), "I", {n}, su(n * (n - 1) / 2), {su(n)}, 0,
                   {{{fund(n - 1, 2)}, {}}});
    for (int n : {3, 4, 5}) {
        Weight w(n - 1, 0);
        w[0] = 2;
        b.defining("family_II_n" + std::to_string(n), "II", {n}, su(n * (n + 1) / 2), {su(n)}, 0,
                   {{{w}, {}}});
    }
    for (auto [p, q] : {std::pair{2, 3}, {2, 4}, {3, 3}})
        b.defining("family_III_p" + std::to_string(p) + "_q" + std::to_string(q), "III", {p, q},
                   su(p * q), {su(p), su(q)}, 0, {{{fund(p - 1, 1), fund(q - 1, 1)}, {}}});
    for (int n : {3, 4, 5}) {
        SoAlg so = so_h(n);
        std::vector<LieType> comps{C(1)};
        comps.insert(comps.end(), so.comps.begin(), so.comps.end());
        std::vector<Weight> parts{{1}};
        parts.insert(parts.end(), so.vec.begin(), so.vec.end());
        b.defining("family_IV_n" + std::to_string(n), "IV", {n}, sp(n), comps, 0, {{parts, {}}});
    }
    for (int n : {3, 4, 5}) {
        Weight adj(n - 1, 0);
        adj[0] = adj[n - 2] = 1;  // eta_1 + eta_{n-1}
        b.defining("family_V_n" + std::to_string(n), "V", {n}, so_g(n * n - 1), {su(n)}, 0,
                   {{{adj}, {}}});
    }
    for (int n : {3, 4, 5})
        b.defining("family_VI_n" + std::to_string(n), "VI", {n}, so_g((n - 1) * (2 * n + 1)),
                   {sp(n)}, 0, {{{fund(n, 2)}, {}}});
    for (int n : {2, 3, 4}) {
        Weight w(n, 0);
        w[0] = 2;
        b.defining("family_VII_n" + std::to_string(n), "VII", {n}, so_g(2 * n * n + n), {sp(n)}, 0,
                   {{{w}, {}}});
    }
    for (int n : {2, 3, 4})
        b.defining("family_VIII_n" + std::to_string(n), "VIII", {n}, so_g(4 * n), {C(1), sp(n)}, 0,
                   {{{{1}, fund(n, 1)}, {}}});
    for (int n : {7, 8, 9})
        b.defining("family_IX_n" + std::to_string(n), "IX", {n}, so_g(n * (n - 1) / 2),
                   {so_g(n)}, 0, {{{fund(n / 2, 2)}, {}}});
    for (int n : {5, 6, 7}) {
        Weight w(n / 2, 0);
        w[0] = 2;
        b.defining("family_X_n" + std::to_string(n), "X", {n}, so_g((n - 1) * (n + 2) / 2),
                   {so_g(n)}, 0, {{{w}, {}}});
    }
}

// ---------------------------------------------------------------------------
// Families XI-XVIII (isotropy reducible).

void families_xi_to_xviii(Builder& b) {
    for (int n : {3, 4, 5}) {  // XIa: su(n) / R^{n-1}, maximal torus
        std::vector<std::pair<std::vector<Weight>, Weight>> entries;
        for (int j = 0; j < n - 1; ++j) {
            Weight t(n - 1, 0);
            t[j] = 1;
            entries.push_back({{}, t});
        }
        entries.push_back({{}, Weight(n - 1, -1)});
        b.defining("family_XIa_n" + std::to_string(n), "XIa", {n}, su(n), {}, n - 1, entries);
    }
    for (auto [k, n] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {  // XIb: su(kn) / k su(n) + (k-1)R
        std::vector<LieType> comps(k, su(n));
        std::vector<std::pair<std::vector<Weight>, Weight>> entries;
        for (int j = 0; j < k; ++j) {
            std::vector<Weight> parts(k);
            parts[j] = fund(n - 1, 1);
            Weight t(k - 1, 0);
            if (j < k - 1)
                t[j] = 1;
            else
                t.assign(k - 1, -1);
            entries.push_back({parts, t});
        }
        b.defining("family_XIb_k" + std::to_string(k) + "_n" + std::to_string(n), "XIb", {k, n},
                   su(k * n), comps, k - 1, entries);
    }
    {  // XII: the single small solution (p,q,l) = (2,5,3): su(13) / su(3)+su(2)+su(5)+R
        b.defining("family_XII_p2_q5", "XII", {2, 5, 3}, su(13), {su(3), su(2), su(5)}, 1,
                   {{{fund(2, 1), {}, {}}, {10}}, {{{}, fund(1, 1), fund(4, 1)}, {-3}}});
    }
    for (auto [k, n] : {std::pair{3, 1}, {4, 1}, {5, 1}}) {  // XIII: sp(kn) / k sp(n)
        std::vector<LieType> comps(k, sp(n));
        std::vector<std::pair<std::vector<Weight>, Weight>> entries;
        for (int j = 0; j < k; ++j) {
            std::vector<Weight> parts(k);
            parts[j] = fund(n, 1);
            entries.push_back({parts, {}});
        }
        b.defining("family_XIII_k" + std::to_string(k) + "_n" + std::to_string(n), "XIII", {k, n},
                   sp(k * n), comps, 0, entries);
    }
    for (int n : {1, 2, 3}) {  // XIV: sp(3n-1) / su(2n-1) + sp(n) + R
        std::vector<LieType> comps;
        if (n > 1) comps.push_back(su(2 * n - 1));
        comps.push_back(sp(n));
        std::vector<std::pair<std::vector<Weight>, Weight>> entries;
        if (n > 1) {
            std::vector<Weight> p1{fund(2 * n - 2, 1), {}};
            std::vector<Weight> p2{fund(2 * n - 2, 2 * n - 2), {}};
            entries.push_back({p1, {1}});
            entries.push_back({p2, {-1}});
            entries.push_back({{{}, fund(n, 1)}, {}});
        } else {
            entries.push_back({{}, {1}});
            entries.push_back({{}, {-1}});
            entries.push_back({{fund(1, 1)}, {}});
        }
        b.defining("family_XIV_n" + std::to_string(n), "XIV", {n}, sp(3 * n - 1), comps, 1,
                   entries);
    }
    for (int n : {2, 3, 4})  // XV: so(4n^2) / 2 sp(n)
        b.defining("family_XV_n" + std::to_string(n), "XV", {n}, so_g(4 * n * n),
                   {sp(n), sp(n)}, 0, {{{fund(n, 1), fund(n, 1)}, {}}});
    for (int n : {3, 4, 5}) {  // XVI: so(n^2) / 2 so(n)
        SoAlg so = so_h(n);
        std::vector<LieType> comps = so.comps;
        comps.insert(comps.end(), so.comps.begin(), so.comps.end());
        std::vector<Weight> parts = so.vec;
        parts.insert(parts.end(), so.vec.begin(), so.vec.end());
        b.defining("family_XVI_n" + std::to_string(n), "XVI", {n}, so_g(n * n), comps, 0,
                   {{parts, {}}});
    }
    for (int n : {4, 5, 6}) {  // XVIIa: so(2n) / R^n, maximal torus
        std::vector<std::pair<std::vector<Weight>, Weight>> entries;
        for (int j = 0; j < n; ++j) {
            Weight t(n, 0);
            t[j] = 1;
            entries.push_back({{}, t});
            t[j] = -1;
            entries.push_back({{}, t});
        }
        b.defining("family_XVIIa_n" + std::to_string(n), "XVIIa", {n}, D(n), {}, n, entries);
    }
    for (auto [k, n] : {std::pair{3, 3}, {4, 3}, {3, 4}}) {  // XVIIb: so(kn) / k so(n)
        SoAlg so = so_h(n);
        std::vector<LieType> comps;
        std::vector<std::pair<std::vector<Weight>, Weight>> entries;
        for (int j = 0; j < k; ++j)
            comps.insert(comps.end(), so.comps.begin(), so.comps.end());
        size_t per = so.comps.size();
        for (int j = 0; j < k; ++j) {
            std::vector<Weight> parts(per * k);
            for (size_t c = 0; c < per; ++c) parts[j * per + c] = so.vec[c];
            entries.push_back({parts, {}});
        }
        b.defining("family_XVIIb_k" + std::to_string(k) + "_n" + std::to_string(n), "XVIIb",
                   {k, n}, so_g(k * n), comps, 0, entries);
    }
    for (int n : {3, 4, 5}) {  // XVIII: so(3n+2) / su(n+1) + so(n) + R
        SoAlg so = so_h(n);
        std::vector<LieType> comps{su(n + 1)};
        comps.insert(comps.end(), so.comps.begin(), so.comps.end());
        size_t per = so.comps.size();
        std::vector<std::pair<std::vector<Weight>, Weight>> entries;
        entries.push_back({{fund(n, 1)}, {1}});
        entries.push_back({{fund(n, n)}, {-1}});
        std::vector<Weight> parts(1 + per);
        for (size_t c = 0; c < per; ++c) parts[1 + c] = so.vec[c];
        entries.push_back({parts, {}});
        b.defining("family_XVIII_n" + std::to_string(n), "XVIII", {n}, so_g(3 * n + 2), comps, 1,
                   entries);
    }
}

// ---------------------------------------------------------------------------
// Family XIX: SO(p)/H for a product K/H of symmetric spaces, p = isotropy of
// K/H.  Factors are drawn from the symmetric spaces appearing in Table 9.

struct XixFactor {
    const char* tag;
    int dim_p;                    // dim of the isotropy module p_i
    int dim_h;                    // dim h_i (Einstein requires dim h_i / dim p_i constant)
    std::vector<LieType> comps;
    std::vector<Weight> p_hw;     // highest weight of p_i per component
};

const std::vector<XixFactor>& xix_factors() {
    static const std::vector<XixFactor> f = {
        {"s3", 3, 3, {A(1)}, {{2}}},                       // S^3 = SO(4)/SO(3)
        {"s4", 4, 6, {A(1), A(1)}, {{1}, {1}}},            // S^4 = SO(5)/SO(4)
        {"su3so3", 5, 3, {A(1)}, {{4}}},                   // SU(3)/SO(3)
        {"su3", 8, 8, {A(2)}, {{1, 1}}},                   // SU(3) group
        {"so5", 10, 10, {B(2)}, {{0, 2}}},                 // SO(5) group
        {"g2", 14, 14, {G2}, {{0, 1}}},                    // G2 group
        {"su6sp3", 14, 21, {C(3)}, {{0, 1, 0}}},           // SU(6)/Sp(3)
        {"su4", 15, 15, {A(3)}, {{1, 0, 1}}},              // SU(4) group
        {"so7", 21, 21, {B(3)}, {{0, 1, 0}}},              // SO(7) group
        {"sp3", 21, 21, {C(3)}, {{2, 0, 0}}},              // Sp(3) group
    };
    return f;
}

void add_xix(Builder& b, const std::vector<int>& factors, bool reconstructed) {
    const auto& F = xix_factors();
    int total = 0;
    std::vector<LieType> comps;
    std::vector<std::pair<std::vector<Weight>, Weight>> entries;
    std::string tag;
    std::map<int, int> counts;
    for (int f : factors) counts[f]++;
    for (auto [f, c] : counts) {
        tag += "_" + std::string(F[f].tag);
        if (c > 1) tag += "x" + std::to_string(c);
    }
    size_t per_total = 0;
    for (int f : factors) per_total += F[f].comps.size();
    size_t off = 0;
    for (int f : factors) {
        total += F[f].dim_p;
        comps.insert(comps.end(), F[f].comps.begin(), F[f].comps.end());
        std::vector<Weight> parts(per_total);
        for (size_t c = 0; c < F[f].comps.size(); ++c) parts[off + c] = F[f].p_hw[c];
        entries.push_back({parts, {}});
        off += F[f].comps.size();
    }
    b.defining("family_XIX" + tag, "XIX", {}, so_g(total), comps, 0, entries, false,
               reconstructed);
}

void family_xix(Builder& b) {
    enum { S3, S4, SU3SO3, SU3, SO5, G2F, SU6SP3, SU4, SO7, SP3 };
    // the named instances of Table 9
    std::vector<std::vector<int>> named = {
        {SU3SO3, SU3SO3},
        {S3, SO5},
        {S4, SU6SP3},
        {S3, SU3},
        {S3, S3, SU3},
        {SU3, SU3},
        {S3, S3, S3, SU3},
        {S3, G2F},
        {S3, SU4},
        {SU3, SO5},
        {S4, S4, SU6SP3},
        {S3, S3, S3, SO5},
        {S3, S3, S3, S3, SO5},
        {S3, S3, S3, S3, S3, SO5},
        {S3, S3, G2F},
        {S3, S3, S3, G2F},
        {S3, S3, S3, S3, G2F},
        {SO5, SO5},
        {S3, SO5, SO5},
        {S3, S3, SO5, SO5},
        {S3, SO7},
        {S3, SP3},
        {SO5, G2F},
    };
    for (const auto& inst : named) add_xix(b, inst, false);

    // "all other with dim K/H <= 26": enumerate multisets of the factors shown
    // in Table 9, excluding pure sphere powers (those are family XVIIb) and the
    // named instances above.  The Einstein condition forces dim h_i / dim p_i
    // to be constant across factors; einstein_check re-verifies every instance.
    const auto& F = xix_factors();
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int from, int dim) {
        if (cur.size() >= 2) all.push_back(cur);
        for (int f = from; f < static_cast<int>(F.size()); ++f) {
            if (dim + F[f].dim_p > 26) continue;
            if (!cur.empty()) {
                const XixFactor& a = F[cur[0]];
                if (F[f].dim_h * a.dim_p != a.dim_h * F[f].dim_p) continue;
            }
            cur.push_back(f);
            rec(f, dim + F[f].dim_p);
            cur.pop_back();
        }
    };
    rec(0, 0);
    for (const auto& inst : all) {
        bool pure_sphere = true;
        for (int f : inst) pure_sphere &= (f == S3 || f == S4);
        bool uniform = true;
        for (int f : inst) uniform &= (f == inst[0]);
        if (pure_sphere && uniform) continue;  // (S^n)^k is family XVIIb
        if (std::find(named.begin(), named.end(), inst) != named.end()) continue;
        bool dup = false;  // named list is order-insensitive per multiset
        for (const auto& n : named) {
            auto a = n, bb = inst;
            std::sort(a.begin(), a.end());
            std::sort(bb.begin(), bb.end());
            if (a == bb) dup = true;
        }
        if (dup) continue;
        add_xix(b, inst, true);
    }
}

// ---------------------------------------------------------------------------
// Exceptional isotropy irreducible spaces with classical g (Table 3).

void exceptions_classical(Builder& b) {
    auto one = [&](std::string name, LieType g, LieType h, Weight hw, bool sphere = false) {
        b.defining(std::move(name), "exceptional", {}, g, {h}, 0, {{{hw}, {}}}, sphere);
    };
    one("su16_so10", su(16), D(5), {0, 0, 0, 1, 0});
    one("su27_e6", su(27), E6, {1, 0, 0, 0, 0, 0});
    one("so7_g2", B(3), G2, {1, 0}, true);
    one("so133_e7", B(66), E7, fund(7, 1));  // defining = adjoint of e7
    one("berger_sp2_su2", C(2), A(1), {3});
    one("sp7_sp3", C(7), C(3), {0, 0, 1});
    one("sp10_su6", C(10), A(5), {0, 0, 1, 0, 0});
    one("sp16_so12", C(16), D(6), {0, 0, 0, 0, 1, 0});
    one("sp28_e7", C(28), E7, fund(7, 7));
    one("so14_g2", D(7), G2, {0, 1});
    one("so16_so9", D(8), B(4), {0, 0, 0, 1});
    one("so26_f4", D(13), F4, {0, 0, 0, 1});
    one("so42_sp4", D(21), C(4), {0, 0, 0, 1});
    one("so52_f4", D(26), F4, {1, 0, 0, 0});
    one("so70_su8", D(35), A(7), fund(7, 4));
    one("so78_e6", D(39), E6, {0, 1, 0, 0, 0, 0});
    one("so128_so16", D(64), D(8), fund(8, 7));
    one("so248_e8", D(124), E8, fund(8, 8));
}

// ---------------------------------------------------------------------------
// Regular subalgebras of the exceptional algebras (extended Dynkin diagram
// subsystems), shared by Tables 4 and 6.

EmbeddingPtr e6_3a2() {
    const RootSystem& g = root_system(E6);
    return regular_subalgebra(E6, Subalgebra::make({A(2), A(2), A(2)}, 0),
                              {alpha(g, 1), alpha(g, 3), alpha(g, 5), alpha(g, 6), alpha(g, 2),
                               minus_theta(g)});
}

EmbeddingPtr e6_a1_a5() {
    const RootSystem& g = root_system(E6);
    return regular_subalgebra(E6, Subalgebra::make({A(1), A(5)}, 0),
                              {alpha(g, 1), minus_theta(g), alpha(g, 2), alpha(g, 4), alpha(g, 5),
                               alpha(g, 6)});
}

EmbeddingPtr e6_d5_r() {
    const RootSystem& g = root_system(E6);
    std::vector<Weight> roots = {alpha(g, 1), alpha(g, 3), alpha(g, 4), alpha(g, 2), alpha(g, 5)};
    return regular_subalgebra(E6, Subalgebra::make({D(5)}, 1), roots, ortho_rows(6, roots));
}

EmbeddingPtr e7_a7() {
    const RootSystem& g = root_system(E7);
    return regular_subalgebra(E7, Subalgebra::make({A(7)}, 0),
                              {minus_theta(g), alpha(g, 1), alpha(g, 3), alpha(g, 4), alpha(g, 5),
                               alpha(g, 6), alpha(g, 7)});
}

EmbeddingPtr e7_a5_a2() {
    const RootSystem& g = root_system(E7);
    return regular_subalgebra(E7, Subalgebra::make({A(5), A(2)}, 0),
                              {alpha(g, 2), alpha(g, 4), alpha(g, 5), alpha(g, 6), alpha(g, 7),
                               alpha(g, 1), minus_theta(g)});
}

EmbeddingPtr e7_a1_d6() {
    const RootSystem& g = root_system(E7);
    return regular_subalgebra(E7, Subalgebra::make({A(1), D(6)}, 0),
                              {minus_theta(g), alpha(g, 7), alpha(g, 6), alpha(g, 5), alpha(g, 4),
                               alpha(g, 3), alpha(g, 2)});
}

EmbeddingPtr e8_a8() {
    const RootSystem& g = root_system(E8);
    return regular_subalgebra(E8, Subalgebra::make({A(8)}, 0),
                              {alpha(g, 1), alpha(g, 3), alpha(g, 4), alpha(g, 5), alpha(g, 6),
                               alpha(g, 7), alpha(g, 8), minus_theta(g)});
}

EmbeddingPtr e8_d8() {
    const RootSystem& g = root_system(E8);
    return regular_subalgebra(E8, Subalgebra::make({D(8)}, 0),
                              {minus_theta(g), alpha(g, 8), alpha(g, 7), alpha(g, 6), alpha(g, 5),
                               alpha(g, 4), alpha(g, 3), alpha(g, 2)});
}

EmbeddingPtr e8_e6_a2() {
    const RootSystem& g = root_system(E8);
    return regular_subalgebra(E8, Subalgebra::make({E6, A(2)}, 0),
                              {alpha(g, 1), alpha(g, 2), alpha(g, 3), alpha(g, 4), alpha(g, 5),
                               alpha(g, 6), alpha(g, 8), minus_theta(g)});
}

EmbeddingPtr e8_a4_a4() {
    const RootSystem& g = root_system(E8);
    return regular_subalgebra(E8, Subalgebra::make({A(4), A(4)}, 0),
                              {alpha(g, 1), alpha(g, 3), alpha(g, 4), alpha(g, 2), alpha(g, 6),
                               alpha(g, 7), alpha(g, 8), minus_theta(g)});
}

EmbeddingPtr f4_b4() {
    const RootSystem& g = root_system(F4);
    return regular_subalgebra(F4, Subalgebra::make({B(4)}, 0),
                              {minus_theta(g), alpha(g, 1), alpha(g, 2), alpha(g, 3)});
}

EmbeddingPtr f4_2a2() {
    const RootSystem& g = root_system(F4);
    return regular_subalgebra(F4, Subalgebra::make({A(2), A(2)}, 0),
                              {minus_theta(g), alpha(g, 1), alpha(g, 3), alpha(g, 4)});
}

EmbeddingPtr g2_a2() {
    // the su(3) of long roots: alpha_2 and -theta
    return regular_subalgebra(G2, Subalgebra::make({A(2)}, 0), {{-3, 2}, {0, -1}});
}

// ---------------------------------------------------------------------------
// Hand-derived restriction matrices for the maximal S-subalgebras of the
// exceptional algebras (rows = h-coroots in g-coroot coordinates; verified
// against the known branchings by make_embedding and einstein_check).

EmbeddingPtr s_subalgebra(const std::string& which);  // defined after the builders

// Exceptional g entries of Tables 4 and 6.
void exceptions_exceptional(Builder& b) {
    auto add = [&](std::string name, LieType g, std::string h_label,
                   std::function<EmbeddingPtr()> make, bool sphere = false) {
        b.add(std::move(name), "exceptional", {}, g, std::move(h_label), std::move(make), sphere);
    };

    // Table 4 (isotropy irreducible)
    add("e6_su3", E6, "su(3)", [] { return s_subalgebra("e6_su3"); });
    add("e6_3su3", E6, "3 su(3)", e6_3a2);
    add("e6_g2", E6, "g2", [] { return s_subalgebra("e6_g2"); });
    add("e6_su3_g2", E6, "su(3)+g2", [] { return s_subalgebra("e6_su3_g2"); });
    add("e7_su3", E7, "su(3)", [] { return s_subalgebra("e7_su3"); });
    add("e7_su6_su3", E7, "su(6)+su(3)", e7_a5_a2);
    add("e7_g2_sp3", E7, "g2+sp(3)", [] { return s_subalgebra("e7_g2_sp3"); });
    add("e7_su2_f4", E7, "su(2)+f4", [] { return s_subalgebra("e7_su2_f4"); });
    add("e8_su9", E8, "su(9)", e8_a8);
    add("e8_e6_su3", E8, "e6+su(3)", e8_e6_a2);
    add("e8_g2_f4", E8, "g2+f4", [] { return s_subalgebra("e8_g2_f4"); });
    add("f4_2su3", F4, "2 su(3)", f4_2a2);
    add("f4_su2_g2", F4, "su(2)+g2", [] { return s_subalgebra("f4_su2_g2"); });
    add("g2_su2", G2, "su(2)", [] {
        return make_embedding(G2, Subalgebra::make({A(1)}, 0), {{6, 10}}, 1);
    });
    add("g2_su3", G2, "su(3)", g2_a2, true);

    // Table 6 (isotropy reducible)
    b.defining("so8_g2", "exceptional", {}, D(4), {G2}, 0, {{{{1, 0}}, {}}, {{{0, 0}}, {}}});
    b.defining("so26_sp1_sp5_so6", "exceptional", {}, D(13), {C(1), C(5), A(3)}, 0,
               {{{{1}, fund(5, 1), {}}, {}}, {{{}, {}, {0, 1, 0}}, {}}});
    add("f4_so8", F4, "so(8)", [] {
        auto inner = restriction_from_defining(B(4), Subalgebra::make({D(4)}, 0),
                                               {{{1, 0, 0, 0}, 1}, {{0, 0, 0, 0}, 1}});
        return compose(f4_b4(), {inner});
    });
    add("e6_3su2", E6, "3 su(2)", [] {
        auto a1 = principal_a1_in_a2();
        return compose(e6_3a2(), {a1, a1, a1});
    });
    add("e6_su2_so6", E6, "su(2)+so(6)", [] {
        auto so6 = restriction_from_defining(A(5), Subalgebra::make({A(3)}, 0),
                                             {{{0, 1, 0}, 1}});
        return compose(e6_a1_a5(), {nullptr, so6});
    });
    add("e6_so8_2r", E6, "so(8)+R^2", [] {
        auto inner = restriction_from_defining(
            D(5), Subalgebra::make({D(4)}, 1),
            {{{1, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 2}, 1}, {{0, 0, 0, 0, -2}, 1}});
        return compose(e6_d5_r(), {inner});
    });
    add("e6_torus", E6, "R^6", [] { return max_torus(E6); });
    add("e7_7su2", E7, "7 su(2)", [] {
        auto so12_3so4 = restriction_from_defining(
            D(6), Subalgebra::make(std::vector<LieType>(6, A(1)), 0),
            {{{1, 1, 0, 0, 0, 0}, 1}, {{0, 0, 1, 1, 0, 0}, 1}, {{0, 0, 0, 0, 1, 1}, 1}});
        return compose(e7_a1_d6(), {nullptr, so12_3so4});
    });
    add("e7_so8", E7, "so(8)", [] {
        auto so8 = restriction_from_defining(A(7), Subalgebra::make({D(4)}, 0),
                                             {{{1, 0, 0, 0}, 1}});
        return compose(e7_a7(), {so8});
    });
    add("e7_3su2_so8", E7, "3 su(2)+so(8)", [] {
        auto inner = restriction_from_defining(
            D(6), Subalgebra::make({D(4), A(1), A(1)}, 0),
            {{{1, 0, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 1, 1}, 1}});
        return compose(e7_a1_d6(), {nullptr, inner});
    });
    add("e7_torus", E7, "R^7", [] { return max_torus(E7); });
    add("e8_8su2", E8, "8 su(2)", [] {
        auto inner = restriction_from_defining(
            D(8), Subalgebra::make(std::vector<LieType>(8, A(1)), 0),
            {{{1, 1, 0, 0, 0, 0, 0, 0}, 1},
             {{0, 0, 1, 1, 0, 0, 0, 0}, 1},
             {{0, 0, 0, 0, 1, 1, 0, 0}, 1},
             {{0, 0, 0, 0, 0, 0, 1, 1}, 1}});
        return compose(e8_d8(), {inner});
    });
    add("e8_4su3", E8, "4 su(3)", [] { return compose(e8_e6_a2(), {e6_3a2(), nullptr}); });
    add("e8_4su2", E8, "4 su(2)", [] {
        auto a1 = principal_a1_in_a2();
        return compose(compose(e8_e6_a2(), {e6_3a2(), nullptr}), {a1, a1, a1, a1});
    });
    add("e8_2su3", E8, "2 su(3)", [] {
        auto inner = restriction_from_defining(A(8), Subalgebra::make({A(2), A(2)}, 0),
                                               {{{1, 0, 1, 0}, 1}});
        return compose(e8_a8(), {inner});
    });
    add("e8_2su5", E8, "2 su(5)", e8_a4_a4);
    add("e8_so9_via_su9", E8, "so(9)", [] {
        auto inner = restriction_from_defining(A(8), Subalgebra::make({B(4)}, 0),
                                               {{{1, 0, 0, 0}, 1}});
        return compose(e8_a8(), {inner});
    });
    add("e8_so9_via_so16", E8, "so(9)", [] {
        auto inner = restriction_from_defining(D(8), Subalgebra::make({B(4)}, 0),
                                               {{{0, 0, 0, 1}, 1}});
        return compose(e8_d8(), {inner});
    });
    add("e8_2so8", E8, "2 so(8)", [] {
        auto inner = restriction_from_defining(
            D(8), Subalgebra::make({D(4), D(4)}, 0),
            {{{1, 0, 0, 0, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 1, 0, 0, 0}, 1}});
        return compose(e8_d8(), {inner});
    });
    add("e8_so5", E8, "so(5)", [] { return s_subalgebra("e8_so5"); });
    add("e8_2sp2", E8, "2 sp(2)", [] {
        auto inner = restriction_from_defining(D(8), Subalgebra::make({C(2), C(2)}, 0),
                                               {{{1, 0, 1, 0}, 1}});
        return compose(e8_d8(), {inner});
    });
    add("e8_torus", E8, "R^8", [] { return max_torus(E8); });
}

struct SData {
    LieType g;
    std::vector<LieType> comps;
    std::vector<std::vector<int>> R;
    int den;
};

EmbeddingPtr s_subalgebra(const std::string& which) {
    static const std::map<std::string, SData> table = {
        {"e6_su3",
         {E6, {A(2)}, {{-4, -5, -7, -10, -7, -4}, {2, 1, 2, 5, 2, 2}}, 1}},
        {"e6_g2",
         {E6, {G2}, {{-4, -5, -7, -10, -7, -4}, {2, 2, 3, 5, 3, 2}}, 1}},
        {"e6_su3_g2",
         {E6,
          {A(2), G2},
          {{-1, -1, -2, -3, -3, -2},
           {0, -1, 0, 0, 1, 0},
           {0, 1, 1, 0, 1, 0},
           {0, 0, 0, 1, 0, 0}},
          1}},
        {"e7_su3",
         {E7, {A(2)}, {{-8, -11, -15, -22, -17, -12, -6}, {4, 4, 6, 11, 7, 6, 0}}, 1}},
        {"e7_g2_sp3",
         {E7,
          {G2, C(3)},
          {{-2, -1, -3, -3, -3, -3, -2},
           {1, 0, 1, 1, 1, 1, 1},
           {0, 1, 0, 2, 2, 2, 1},
           {0, 0, 0, -1, 0, -1, 0},
           {0, 0, 0, 0, -1, 0, 0}},
          1}},
        {"e7_su2_f4",
         {E7,
          {A(1), F4},
          {{0, -1, 0, -2, -3, -2, -1},
           {0, 1, 0, 0, 0, 0, 0},
           {0, 0, 0, 1, 0, 0, 0},
           {0, 0, 1, 0, 1, 0, 0},
           {1, 0, 0, 0, 0, 1, 0}},
          1}},
        {"e8_g2_f4",
         {E8,
          {G2, F4},
          {{0, -1, -1, -2, -2, -2, -1, -2},
           {0, 0, 0, 0, 0, 0, 0, 1},
           {0, 1, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 1, 0, 0, 0, 0},
           {0, 0, 1, 0, 1, 0, 0, 0},
           {1, 0, 0, 0, 0, 1, 0, 0}},
          1}},
        {"e8_so5",
         {E8,
          {B(2)},
          {{-9, -13, -18, -26, -21, -16, -11, -6}, {8, 10, 18, 22, 16, 12, 8, 6}},
          1}},
        {"f4_su2_g2",
         {F4, {A(1), G2}, {{0, 0, -2, -2}, {-3, -6, -4, -2}, {1, 3, 2, 1}}, 1}},
    };
    auto it = table.find(which);
    if (it == table.end())
        throw CasboundError("no restriction matrix recorded for " + which);
    const SData& d = it->second;
    return make_embedding(d.g, Subalgebra::make(d.comps, 0), d.R, d.den);
}

std::vector<SpaceSpec> build_catalog() {
    Builder b;
    families_i_to_x(b);
    families_xi_to_xviii(b);
    family_xix(b);
    exceptions_classical(b);
    exceptions_exceptional(b);
    return std::move(b.list);
}

}  // namespace

const std::vector<SpaceSpec>& catalog() {
    static const std::vector<SpaceSpec> cat = build_catalog();
    return cat;
}

}  // namespace casbound
