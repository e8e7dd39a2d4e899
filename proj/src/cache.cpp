#include "casbound/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unistd.h>

namespace casbound {

namespace {

std::mutex mu;
std::string dir_override;
bool overridden = false;

std::string fnv1a(const std::string& s, uint64_t seed) {
    uint64_t h = 14695981039346656037ull ^ seed;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string entry_path(const std::string& emb_key, const Weight& gamma) {
    std::string payload = emb_key + "#" + weight_str(gamma);
    return cache_dir() + "/" + fnv1a(payload, 0) + fnv1a(payload, 0x9e3779b97f4a7c15ull) + ".branch";
}

}  // namespace

void set_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lk(mu);
    dir_override = dir;
    overridden = true;
}

std::string cache_dir() {
    std::lock_guard<std::mutex> lk(mu);
    if (overridden) return dir_override;
    const char* env = std::getenv("CASBOUND_CACHE_DIR");
    return env ? env : "";
}

bool disk_cache_load(const std::string& emb_key, const Weight& gamma, int h_rank,
                     Decomposition& out) {
    if (cache_dir().empty()) return false;
    std::ifstream in(entry_path(emb_key, gamma));
    if (!in) return false;
    size_t count;
    if (!(in >> count)) return false;
    Decomposition dec;
    for (size_t i = 0; i < count; ++i) {
        Weight w(h_rank);
        for (int j = 0; j < h_rank; ++j)
            if (!(in >> w[j])) return false;
        long long m;
        if (!(in >> m)) return false;
        dec.emplace_back(std::move(w), m);
    }
    out = std::move(dec);
    return true;
}

void disk_cache_store(const std::string& emb_key, const Weight& gamma, const Decomposition& dec) {
    if (cache_dir().empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    static std::atomic<int> counter{0};
    std::string path = entry_path(emb_key, gamma);
    std::string tmp = path + ".tmp" + std::to_string(getpid()) + "." +
                      std::to_string(counter.fetch_add(1));
    {
        std::ofstream outf(tmp);
        outf << dec.size() << "\n";
        for (const auto& [w, m] : dec) {
            for (int v : w) outf << v << " ";
            outf << m << "\n";
        }
        if (!outf) return;
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace casbound
