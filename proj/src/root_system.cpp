#include "casbound/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace casbound {

LieType parse_lie_type(const std::string& s) {
    if (s.size() < 2) throw CasboundError("bad Lie type: " + s);
    char c = std::toupper(s[0]);
    if (c < 'A' || c > 'G' || c == 'e' + 0) throw CasboundError("bad Lie type: " + s);
    int rank = std::stoi(s.substr(1));
    LieType t{static_cast<Series>(c), rank};
    switch (t.series) {
        case Series::A: if (rank < 1) throw CasboundError("A rank >= 1"); break;
        case Series::B: if (rank < 2) throw CasboundError("B rank >= 2"); break;
        case Series::C: if (rank < 2) throw CasboundError("C rank >= 2"); break;
        case Series::D: if (rank < 3) throw CasboundError("D rank >= 3"); break;
        case Series::E: if (rank < 6 || rank > 8) throw CasboundError("E rank in 6..8"); break;
        case Series::F: if (rank != 4) throw CasboundError("F rank = 4"); break;
        case Series::G: if (rank != 2) throw CasboundError("G rank = 2"); break;
    }
    return t;
}

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

namespace {

// adjacency and root lengths per Bourbaki numbering
void diagram(LieType t, std::vector<std::pair<int, int>>& edges, std::vector<int>& d) {
    int n = t.rank;
    edges.clear();
    d.assign(n, 1);
    switch (t.series) {
        case Series::A:
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        case Series::B:
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;
            break;
        case Series::C:
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            d[n - 1] = 2;
            break;
        case Series::D:
            for (int i = 0; i + 2 < n; ++i) edges.push_back({i, i + 1});
            edges.push_back({n - 3, n - 1});
            break;
        case Series::E:
            edges.push_back({0, 2});
            edges.push_back({1, 3});
            for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        case Series::F:
            edges = {{0, 1}, {1, 2}, {2, 3}};
            d = {2, 2, 1, 1};
            break;
        case Series::G:
            edges = {{0, 1}};
            d = {1, 3};
            break;
    }
}

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

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

Int weyl_group_order(LieType t) {
    int n = t.rank;
    switch (t.series) {
        case Series::A: return factorial(n + 1);
        case Series::B:
        case Series::C: {
            Int r = factorial(n);
            for (int i = 0; i < n; ++i) r *= 2;
            return r;
        }
        case Series::D: {
            Int r = factorial(n);
            for (int i = 0; i + 1 < n; ++i) r *= 2;
            return r;
        }
        case Series::E:
            if (n == 6) return 51840;
            if (n == 7) return 2903040;
            return 696729600;
        case Series::F: return 1152;
        case Series::G: return 12;
    }
    throw CasboundError("unreachable");
}

long long RootSystem::pairing_with_root(const Weight& x, int k) const {
    long long s = 0;
    const Weight& v = coroot_pairing[k];
    for (int i = 0; i < rank; ++i) s += static_cast<long long>(x[i]) * v[i];
    return s * root_d[k];
}

long long RootSystem::raw_casimir_scaled(const Weight& x) const {
    // x^T * gram_num * (x + 2*ones)
    long long total = 0;
    for (int i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        long long row = 0;
        const auto& g = gram_num[i];
        for (int j = 0; j < rank; ++j) row += g[j] * (x[j] + 2);
        total += static_cast<long long>(x[i]) * row;
    }
    return total;
}

Rat RootSystem::raw_casimir(const Weight& x) const {
    return make_rat(raw_casimir_scaled(x), gram_den);
}

Rat RootSystem::casimir_normalized(const Weight& x) const {
    Rat r = raw_casimir(x) / adjoint_raw;
    r.canonicalize();
    return r;
}

Rat RootSystem::inner(const Weight& x, const Weight& y) const {
    long long t = 0;
    for (int i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        long long row = 0;
        for (int j = 0; j < rank; ++j) row += gram_num[i][j] * y[j];
        t += static_cast<long long>(x[i]) * row;
    }
    Rat r = make_rat(t, gram_den);
    r.canonicalize();
    return r;
}

bool RootSystem::is_dominant(const Weight& w) const {
    for (int c : w)
        if (c < 0) return false;
    return true;
}

bool RootSystem::dominantize(Weight& w, int& sign) const {
    sign = 1;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rank; ++i)
            if (w[i] < 0) { neg = i; break; }
        if (neg < 0) break;
        int c = w[neg];
        // s_i(w) = w - c * alpha_i, alpha_i = row i of cartan
        for (int j = 0; j < rank; ++j) w[j] -= c * cartan[neg][j];
        sign = -sign;
    }
    for (int c : w)
        if (c == 0) return false;  // on a wall: nontrivial stabiliser
    return true;
}

Weight RootSystem::dominant_rep(Weight w) const {
    int sign;
    dominantize(w, sign);
    return w;
}

Weight RootSystem::dual_weight(const Weight& w) const {
    Weight r = w;
    switch (type.series) {
        case Series::A:
            std::reverse(r.begin(), r.end());
            break;
        case Series::D:
            if (rank % 2 == 1) std::swap(r[rank - 2], r[rank - 1]);
            break;
        case Series::E:
            if (rank == 6) {
                std::swap(r[0], r[5]);
                std::swap(r[2], r[4]);
            }
            break;
        default:
            break;
    }
    return r;
}

namespace {

// Weyl order of the subdiagram spanned by `nodes` (connected component split
// happens here); only the order is needed, so B and C need not be told apart.
Int parabolic_weyl_order(const RootSystem& rs, const std::vector<int>& nodes) {
    int m = static_cast<int>(nodes.size());
    std::vector<int> idx(rs.rank, -1);
    for (int i = 0; i < m; ++i) idx[nodes[i]] = i;
    std::vector<std::vector<int>> adj(m);
    std::vector<int> comp(m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && rs.cartan[nodes[i]][nodes[j]] != 0) adj[i].push_back(j);
    Int total = 1;
    for (int s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> cc;
        std::vector<int> stack{s};
        comp[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            cc.push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) { comp[w] = s; stack.push_back(w); }
        }
        int n = static_cast<int>(cc.size());
        int triple = 0, dbl = 0, branch_deg3 = 0;
        std::vector<int> deg(n, 0);
        std::vector<int> local(m, -1);
        for (int i = 0; i < n; ++i) local[cc[i]] = i;
        int dbl_interior = 0;
        for (int i = 0; i < n; ++i) {
            for (int w : adj[cc[i]]) {
                if (local[w] < 0 || local[w] <= i) continue;
                ++deg[i];
                ++deg[local[w]];
                int mult = rs.cartan[nodes[cc[i]]][nodes[w]] * rs.cartan[nodes[w]][nodes[cc[i]]];
                if (mult == 3) ++triple;
                if (mult == 2) ++dbl;
            }
        }
        for (int i = 0; i < n; ++i)
            if (deg[i] >= 3) ++branch_deg3;
        // locate double bond position for F4 detection
        if (dbl == 1 && n == 4 && branch_deg3 == 0) {
            for (int i = 0; i < n; ++i)
                for (int w : adj[cc[i]]) {
                    if (local[w] < 0 || local[w] <= i) continue;
                    int mult = rs.cartan[nodes[cc[i]]][nodes[w]] * rs.cartan[nodes[w]][nodes[cc[i]]];
                    if (mult == 2 && deg[i] == 2 && deg[local[w]] == 2) dbl_interior = 1;
                }
        }
        LieType ct;
        if (triple) {
            ct = {Series::G, 2};
        } else if (dbl) {
            ct = dbl_interior ? LieType{Series::F, 4} : LieType{Series::B, n};
        } else if (branch_deg3 == 0) {
            ct = {Series::A, n};
        } else {
            // simply laced with one branch node: D or E by arm lengths
            std::vector<int> arms;
            int bi = -1;
            for (int i = 0; i < n; ++i)
                if (deg[i] == 3) bi = i;
            for (int w0 : adj[cc[bi]]) {
                if (local[w0] < 0) continue;
                int len = 0, prev = cc[bi], cur = w0;
                for (;;) {
                    ++len;
                    int nxt = -1;
                    for (int w : adj[cur])
                        if (w != prev && local[w] >= 0) nxt = w;
                    if (nxt < 0) break;
                    prev = cur;
                    cur = nxt;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms[0] == 1 && arms[1] == 1) ct = {Series::D, n};
            else ct = {Series::E, n};
        }
        total *= weyl_group_order(ct);
    }
    return total;
}

}  // namespace

Int RootSystem::orbit_size(const Weight& w) const {
    std::vector<int> zero_nodes;
    for (int i = 0; i < rank; ++i)
        if (w[i] == 0) zero_nodes.push_back(i);
    Int stab = parabolic_weyl_order(*this, zero_nodes);
    Int q;
    mpz_divexact(q.get_mpz_t(), weyl_order.get_mpz_t(), stab.get_mpz_t());
    return q;
}

Int RootSystem::weyl_dim(const Weight& hw) const {
    Int num = 1, den = 1;
    Weight x = hw;
    for (int i = 0; i < rank; ++i) x[i] += 1;  // hw + delta
    for (size_t k = 0; k < positive_roots.size(); ++k) {
        long long a = 0, b = 0;
        const Weight& v = coroot_pairing[k];
        for (int i = 0; i < rank; ++i) {
            a += static_cast<long long>(x[i]) * v[i];
            b += v[i];
        }
        num *= make_int(a);
        den *= make_int(b);
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw CasboundError("weyl_dim: non-integral result");
    return q;
}

const RootSystem& root_system(LieType t) {
    static std::mutex mu;
    static std::map<LieType, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return *it->second;

    auto rs = std::make_unique<RootSystem>();
    rs->type = t;
    int n = rs->rank = t.rank;
    std::vector<std::pair<int, int>> edges;
    diagram(t, edges, rs->d);
    rs->cartan.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) rs->cartan[i][i] = 2;
    for (auto [i, j] : edges) {
        int m = std::max(rs->d[i], rs->d[j]);
        rs->cartan[i][j] = -m / rs->d[j];
        rs->cartan[j][i] = -m / rs->d[i];
    }
    std::vector<std::vector<Rat>> cq(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cq[i][j] = rs->cartan[i][j];
    rs->cartan_inv = invert(cq);
    rs->gram.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rs->gram[i][j] = rs->cartan_inv[j][i] * rs->d[i];
            rs->gram[i][j].canonicalize();
        }
    // symmetry sanity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rs->gram[i][j] != rs->gram[j][i]) throw CasboundError("gram not symmetric");
    Int den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rs->gram[i][j].get_den().get_mpz_t());
    rs->gram_den = den.get_si();
    rs->gram_num.assign(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = rs->gram[i][j] * rs->gram_den;
            v.canonicalize();
            if (v.get_den() != 1) throw CasboundError("gram_den wrong");
            rs->gram_num[i][j] = v.get_num().get_si();
        }

    // positive roots by height-ladder closure: r + alpha_i is a root iff
    // p - <r, alpha_i^vee> > 0 where p = max k with r - k*alpha_i a root.
    std::unordered_set<Weight, WeightHash> seen;
    std::vector<Weight> current;
    for (int i = 0; i < n; ++i) {
        Weight a(rs->cartan[i].begin(), rs->cartan[i].end());
        current.push_back(a);
        seen.insert(a);
        rs->positive_roots.push_back(a);
    }
    while (!current.empty()) {
        std::vector<Weight> next;
        for (const Weight& r : current) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                Weight down = r;
                for (;;) {
                    for (int j = 0; j < n; ++j) down[j] -= rs->cartan[i][j];
                    if (!seen.count(down)) break;
                    ++p;
                }
                if (p - r[i] > 0) {
                    Weight up = r;
                    for (int j = 0; j < n; ++j) up[j] += rs->cartan[i][j];
                    if (seen.insert(up).second) {
                        next.push_back(up);
                        rs->positive_roots.push_back(up);
                    }
                }
            }
        }
        current = std::move(next);
    }

    // per-root data: d_alpha and coroot pairing vector 2*G*r/(r,r)
    for (const Weight& r : rs->positive_roots) {
        // (r, r) via scaled gram
        long long rr = 0;
        for (int i = 0; i < n; ++i) {
            if (!r[i]) continue;
            long long row = 0;
            for (int j = 0; j < n; ++j) row += rs->gram_num[i][j] * r[j];
            rr += static_cast<long long>(r[i]) * row;
        }
        // rr is (r,r)*gram_den; d_alpha = (r,r)/2
        if (rr % (2 * rs->gram_den) != 0) throw CasboundError("root length not integral");
        rs->root_d.push_back(static_cast<int>(rr / (2 * rs->gram_den)));
        Weight v(n);
        for (int j = 0; j < n; ++j) {
            long long num = 0;
            for (int i = 0; i < n; ++i) num += static_cast<long long>(r[i]) * rs->gram_num[i][j];
            long long denom = rr / 2;  // (r,r)/2 * gram_den
            if (num % denom != 0) throw CasboundError("coroot pairing not integral");
            v[j] = static_cast<int>(num / denom);
        }
        rs->coroot_pairing.push_back(v);
    }

    // highest root: the dominant root of maximal raw casimir
    long long best = -1;
    for (const Weight& r : rs->positive_roots) {
        if (!rs->is_dominant(r)) continue;
        long long c = rs->raw_casimir_scaled(r);
        if (c > best) { best = c; rs->highest_root = r; }
    }
    rs->adjoint_raw = make_rat(best, rs->gram_den);
    rs->adjoint_raw.canonicalize();
    rs->weyl_order = weyl_group_order(t);

    const RootSystem& ref = *rs;
    cache.emplace(t, std::move(rs));
    return ref;
}

std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, const Rat& bound) {
    // raw <= bound * adjoint_raw; compare scaled integers exactly
    Rat raw_bound = bound * rs.adjoint_raw * rs.gram_den;
    raw_bound.canonicalize();
    std::vector<Weight> out;
    std::unordered_set<Weight, WeightHash> seen;
    std::vector<Weight> frontier{rs.zero()};
    seen.insert(rs.zero());
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier) {
            out.push_back(w);
            for (int i = 0; i < rs.rank; ++i) {
                Weight u = w;
                u[i] += 1;
                if (seen.count(u)) continue;
                if (make_rat(rs.raw_casimir_scaled(u), 1) <= raw_bound) {
                    seen.insert(u);
                    next.push_back(u);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        long long ca = rs.raw_casimir_scaled(a), cb = rs.raw_casimir_scaled(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    return out;
}

}  // namespace casbound
