#include "casbound/orbit.hpp"

#include <algorithm>
#include <unordered_set>

namespace casbound {

namespace {

void bfs_orbit(const RootSystem& rs, const Weight& dom,
               const std::function<void(const Weight&)>& fn) {
    std::unordered_set<Weight, WeightHash> seen;
    std::vector<Weight> stack{dom};
    seen.insert(dom);
    while (!stack.empty()) {
        Weight x = std::move(stack.back());
        stack.pop_back();
        fn(x);
        for (int i = 0; i < rs.rank; ++i) {
            if (x[i] <= 0) continue;
            Weight y = x;
            int c = x[i];
            for (int j = 0; j < rs.rank; ++j) y[j] -= c * rs.cartan[i][j];
            if (seen.insert(y).second) stack.push_back(y);
        }
    }
}

// Enumerate sign choices on the nonzero entries of v (indices in nz); for D
// without zero entries only patterns with minus-count parity == want_parity.
void signs_rec(std::vector<int>& v, const std::vector<int>& nz, size_t k, int minus,
               bool parity_filter, int want_parity,
               const std::function<void(const std::vector<int>&)>& emit) {
    if (k == nz.size()) {
        if (!parity_filter || (minus & 1) == want_parity) emit(v);
        return;
    }
    signs_rec(v, nz, k + 1, minus, parity_filter, want_parity, emit);
    v[nz[k]] = -v[nz[k]];
    signs_rec(v, nz, k + 1, minus + 1, parity_filter, want_parity, emit);
    v[nz[k]] = -v[nz[k]];
}

}  // namespace

void for_each_orbit_element(const RootSystem& rs, const Weight& dom,
                            const std::function<void(const Weight&)>& fn) {
    int n = rs.rank;
    Series s = rs.type.series;
    if (s == Series::E || s == Series::F || s == Series::G) {
        bfs_orbit(rs, dom, fn);
        return;
    }
    if (s == Series::A) {
        std::vector<int> x(n + 1, 0);
        for (int i = n - 1; i >= 0; --i) x[i] = dom[i] + x[i + 1];
        std::sort(x.begin(), x.end());
        Weight a(n);
        do {
            for (int i = 0; i < n; ++i) a[i] = x[i] - x[i + 1];
            fn(a);
        } while (std::next_permutation(x.begin(), x.end()));
        return;
    }
    // B/C/D: epsilon coordinates (doubled for B and D so they stay integral)
    std::vector<int> y(n);
    if (s == Series::B) {
        y[n - 1] = dom[n - 1];
        for (int i = n - 2; i >= 0; --i) y[i] = y[i + 1] + 2 * dom[i];
    } else if (s == Series::C) {
        y[n - 1] = dom[n - 1];
        for (int i = n - 2; i >= 0; --i) y[i] = y[i + 1] + dom[i];
    } else {
        y[n - 1] = dom[n - 1] - dom[n - 2];
        y[n - 2] = dom[n - 1] + dom[n - 2];
        for (int i = n - 3; i >= 0; --i) y[i] = y[i + 1] + 2 * dom[i];
    }
    int want_parity = 0;
    for (int v : y)
        if (v < 0) want_parity ^= 1;
    bool has_zero = std::any_of(y.begin(), y.end(), [](int v) { return v == 0; });
    bool parity_filter = (s == Series::D) && !has_zero;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = std::abs(y[i]);
    std::sort(p.begin(), p.end());
    Weight a(n);
    auto emit = [&](const std::vector<int>& v) {
        if (s == Series::B) {
            for (int i = 0; i + 1 < n; ++i) a[i] = (v[i] - v[i + 1]) / 2;
            a[n - 1] = v[n - 1];
        } else if (s == Series::C) {
            for (int i = 0; i + 1 < n; ++i) a[i] = v[i] - v[i + 1];
            a[n - 1] = v[n - 1];
        } else {
            for (int i = 0; i + 2 < n; ++i) a[i] = (v[i] - v[i + 1]) / 2;
            a[n - 2] = (v[n - 2] - v[n - 1]) / 2;
            a[n - 1] = (v[n - 2] + v[n - 1]) / 2;
        }
        fn(a);
    };
    do {
        std::vector<int> v = p;
        std::vector<int> nz;
        for (int i = 0; i < n; ++i)
            if (v[i] != 0) nz.push_back(i);
        signs_rec(v, nz, 0, 0, parity_filter, want_parity, emit);
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace casbound
