#include "casbound/subalgebra.hpp"

#include <algorithm>
#include <numeric>

#include "casbound/orbit.hpp"

namespace casbound {

Subalgebra Subalgebra::make(std::vector<LieType> comps, int torus) {
    Subalgebra h;
    h.components = std::move(comps);
    h.torus_rank = torus;
    int off = 0;
    for (const LieType& t : h.components) {
        h.offset.push_back(off);
        off += t.rank;
    }
    h.total_rank = off + torus;
    return h;
}

std::string Subalgebra::str() const {
    std::string s;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) s += "+";
        s += components[i].str();
    }
    for (int i = 0; i < torus_rank; ++i) s += components.empty() && i == 0 ? "R" : "+R";
    return s.empty() ? "0" : s;
}

namespace {
Weight slice(const Weight& w, int off, int len) {
    return Weight(w.begin() + off, w.begin() + off + len);
}
}  // namespace

bool Subalgebra::is_dominant(const Weight& w) const {
    int simple = torus_offset();
    for (int i = 0; i < simple; ++i)
        if (w[i] < 0) return false;
    return true;
}

bool Subalgebra::dominantize(Weight& w, int& sign) const {
    sign = 1;
    bool regular = true;
    for (size_t c = 0; c < components.size(); ++c) {
        const RootSystem& rs = comp(c);
        Weight part = slice(w, offset[c], rs.rank);
        int s;
        if (!rs.dominantize(part, s)) regular = false;
        sign *= s;
        std::copy(part.begin(), part.end(), w.begin() + offset[c]);
    }
    return regular;
}

Weight Subalgebra::dominant_rep(Weight w) const {
    int sign;
    dominantize(w, sign);
    return w;
}

Weight Subalgebra::dual(const Weight& w) const {
    Weight out = w;
    for (size_t c = 0; c < components.size(); ++c) {
        const RootSystem& rs = comp(c);
        Weight part = rs.dual_weight(slice(w, offset[c], rs.rank));
        std::copy(part.begin(), part.end(), out.begin() + offset[c]);
    }
    for (int i = torus_offset(); i < total_rank; ++i) out[i] = -w[i];
    return out;
}

bool Subalgebra::is_zero_weight(const Weight& w) const {
    return std::all_of(w.begin(), w.end(), [](int c) { return c == 0; });
}

long long Subalgebra::raw_casimir_scaled_sum(const Weight& w) const {
    // common scale: product of casimirs is not needed, only a strictly
    // dominance-monotone key; use sum of per-component raw casimirs over a
    // common denominator (lcm of component gram denominators)
    long lcm = 1;
    for (size_t c = 0; c < components.size(); ++c) lcm = std::lcm(lcm, comp(c).gram_den);
    long long total = 0;
    for (size_t c = 0; c < components.size(); ++c) {
        const RootSystem& rs = comp(c);
        Weight part = slice(w, offset[c], rs.rank);
        total += rs.raw_casimir_scaled(part) * (lcm / rs.gram_den);
    }
    return total;
}

Int Subalgebra::dim(const Weight& hw) const {
    Int d = 1;
    for (size_t c = 0; c < components.size(); ++c)
        d *= comp(c).weyl_dim(slice(hw, offset[c], comp(c).rank));
    return d;
}

Int Subalgebra::orbit_size(const Weight& w) const {
    Int d = 1;
    for (size_t c = 0; c < components.size(); ++c)
        d *= comp(c).orbit_size(slice(w, offset[c], comp(c).rank));
    return d;
}

DomChar Subalgebra::dominant_character(const Weight& hw) const {
    DomChar out;
    std::vector<const DomChar*> parts;
    for (size_t c = 0; c < components.size(); ++c)
        parts.push_back(&casbound::dominant_character(comp(c), slice(hw, offset[c], comp(c).rank)));
    Weight flat = hw;
    std::function<void(size_t, long long)> rec = [&](size_t c, long long mult) {
        if (c == parts.size()) {
            out[flat] += mult;
            return;
        }
        for (const auto& [w, m] : *parts[c]) {
            std::copy(w.begin(), w.end(), flat.begin() + offset[c]);
            rec(c + 1, mult * m);
        }
    };
    rec(0, 1);
    return out;
}

void Subalgebra::for_each_orbit_element(const Weight& dom,
                                        const std::function<void(const Weight&)>& fn) const {
    Weight flat = dom;
    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == components.size()) {
            fn(flat);
            return;
        }
        casbound::for_each_orbit_element(comp(c), slice(dom, offset[c], comp(c).rank),
                                         [&](const Weight& w) {
                                             std::copy(w.begin(), w.end(), flat.begin() + offset[c]);
                                             rec(c + 1);
                                         });
    };
    rec(0);
}

void Subalgebra::for_each_weight(const Weight& hw,
                                 const std::function<void(const Weight&, long long)>& fn) const {
    for (const auto& [mu, m] : dominant_character(hw))
        for_each_orbit_element(mu, [&](const Weight& w) { fn(w, m); });
}

Int Subalgebra::char_dim(const DomChar& ch) const {
    Int d = 0;
    for (const auto& [w, m] : ch) d += orbit_size(w) * make_int(m);
    return d;
}

Decomposition Subalgebra::decompose_character(DomChar ch) const {
    Decomposition out;
    for (;;) {
        const Weight* top = nullptr;
        long long top_raw = 0;
        for (const auto& [w, m] : ch) {
            if (m == 0) continue;
            long long r = raw_casimir_scaled_sum(w);
            if (!top || r > top_raw || (r == top_raw && w > *top)) {
                top = &w;
                top_raw = r;
            }
        }
        if (!top) break;
        Weight hw = *top;
        long long mult = ch.at(hw);
        if (mult < 0)
            throw CasboundError("h decompose_character: negative residue at " + weight_str(hw));
        for (const auto& [w, m] : dominant_character(hw)) {
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
        long long ca = raw_casimir_scaled_sum(a.first), cb = raw_casimir_scaled_sum(b.first);
        if (ca != cb) return ca > cb;
        return a.first > b.first;
    });
    return out;
}

Decomposition Subalgebra::tensor_decompose(const Weight& a, const Weight& b) const {
    const Weight* big = &a;
    const Weight* small = &b;
    if (dim(a) < dim(b)) std::swap(big, small);
    int simple = torus_offset();
    DomChar res;
    for_each_weight(*small, [&](const Weight& nu, long long m) {
        Weight x(total_rank);
        for (int j = 0; j < total_rank; ++j) x[j] = (*big)[j] + nu[j] + (j < simple ? 1 : 0);
        int sign;
        if (!dominantize(x, sign)) return;
        for (int j = 0; j < simple; ++j) x[j] -= 1;
        res[x] += sign * m;
    });
    Decomposition out;
    for (auto& [w, m] : res) {
        if (m == 0) continue;
        if (m < 0) throw CasboundError("h tensor_decompose: negative multiplicity");
        out.emplace_back(w, m);
    }
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        long long cx = raw_casimir_scaled_sum(x.first), cy = raw_casimir_scaled_sum(y.first);
        if (cx != cy) return cx > cy;
        return x.first > y.first;
    });
    return out;
}

Sym2Alt2 Subalgebra::sym2_alt2(const Weight& hw) const {
    Int d = dim(hw);
    if (d > 20000) throw CasboundError("h sym2_alt2: module too large: " + d.get_str());
    std::vector<std::pair<Weight, long long>> full;
    for_each_weight(hw, [&](const Weight& w, long long m) { full.emplace_back(w, m); });
    DomChar sq;
    Weight s(total_rank);
    for (const auto& [w1, m1] : full)
        for (const auto& [w2, m2] : full) {
            for (int j = 0; j < total_rank; ++j) s[j] = w1[j] + w2[j];
            if (is_dominant(s)) sq[s] += m1 * m2;
        }
    DomChar psi2;
    for (const auto& [w, m] : dominant_character(hw)) {
        Weight dw(total_rank);
        for (int j = 0; j < total_rank; ++j) dw[j] = 2 * w[j];
        psi2[dw] += m;
    }
    DomChar symc, altc;
    for (const auto& [w, m] : sq) {
        long long p = 0;
        auto it = psi2.find(w);
        if (it != psi2.end()) p = it->second;
        if ((m + p) % 2 != 0) throw CasboundError("h sym2_alt2: parity violation");
        if (m + p) symc[w] = (m + p) / 2;
        if (m - p) altc[w] = (m - p) / 2;
    }
    return {decompose_character(std::move(symc)), decompose_character(std::move(altc))};
}

Decomposition Subalgebra::sym2_of_module(const Decomposition& mod) const {
    DomChar acc;
    auto add = [&](const Decomposition& d, long long f) {
        for (const auto& [w, m] : d) acc[w] += f * m;
    };
    for (size_t i = 0; i < mod.size(); ++i) {
        auto [wi, mi] = mod[i];
        Sym2Alt2 sa = sym2_alt2(wi);
        add(sa.sym, mi * (mi + 1) / 2);
        add(sa.alt, mi * (mi - 1) / 2);
        for (size_t j = i + 1; j < mod.size(); ++j) {
            auto [wj, mj] = mod[j];
            add(tensor_decompose(wi, wj), mi * mj);
        }
    }
    Decomposition out;
    for (auto& [w, m] : acc)
        if (m != 0) out.emplace_back(w, m);
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        long long cx = raw_casimir_scaled_sum(x.first), cy = raw_casimir_scaled_sum(y.first);
        if (cx != cy) return cx > cy;
        return x.first > y.first;
    });
    return out;
}

}  // namespace casbound
