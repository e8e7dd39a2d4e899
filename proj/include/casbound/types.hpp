#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace casbound {

using Rat = mpq_class;
using Int = mpz_class;

// Weight in fundamental-weight coordinates (g-side), or flattened
// h-coordinates (all simple components concatenated, then torus charges).
using Weight = std::vector<int>;

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int c : w) {
            h ^= static_cast<std::size_t>(static_cast<uint32_t>(c));
            h *= 1099511628211ull;
        }
        return h;
    }
};

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
    Series series;
    int rank;

    bool operator==(const LieType&) const = default;
    auto operator<=>(const LieType&) const = default;
    std::string str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
};

LieType parse_lie_type(const std::string& s);

// gmpxx predates long long overloads on some platforms; long is 64-bit here
static_assert(sizeof(long) == 8);
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat make_rat(long long num, long long den) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

struct CasboundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string rat_str(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string weight_str(const Weight& w);

}  // namespace casbound
