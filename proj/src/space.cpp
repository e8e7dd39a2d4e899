#include "casbound/space.hpp"

#include <mutex>
#include <sstream>

#include <json.hpp>

namespace casbound {

namespace {

std::mutex resolve_mu;

std::string values_str(const std::vector<Rat>& vals) {
    std::ostringstream os;
    os << "standard metric is not Einstein; distinct Casimir eigenvalues {";
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(vals[i]);
    }
    os << "}";
    return os.str();
}

}  // namespace

NotEinstein::NotEinstein(std::vector<Rat> vals)
    : CasboundError(values_str(vals)), values(std::move(vals)) {}

const Embedding& SpaceSpec::embedding() const {
    std::lock_guard<std::mutex> lk(resolve_mu);
    if (!emb) emb = make();
    return *emb;
}

EinsteinData einstein_check(const SpaceSpec& space) {
    const Embedding& emb = space.embedding();
    if (emb.isotropy.empty()) throw CasboundError("einstein_check: empty isotropy");
    std::vector<Rat> distinct;
    Rat c;
    bool first = true;
    for (const auto& [w, m] : emb.isotropy) {
        Rat v = emb.casimir_h(w);
        bool seen = false;
        for (const Rat& d : distinct)
            if (d == v) seen = true;
        if (!seen) distinct.push_back(v);
        if (first) {
            c = v;
            first = false;
        }
    }
    if (distinct.size() != 1) throw NotEinstein(std::move(distinct));

    EinsteinData data;
    data.isotropy = emb.isotropy;
    data.common_casimir = c;
    data.einstein_constant = Rat(1, 4) + c / 2;
    data.einstein_constant.canonicalize();
    Int dim_m = 0;
    for (const auto& [w, m] : emb.isotropy) dim_m += emb.h.dim(w) * make_int(m);
    data.dim_m = dim_m;
    if (data.einstein_constant <= Rat(1, 4))
        throw CasboundError("einstein_check: E <= 1/4, isotropy Casimir not positive");
    return data;
}

SpaceSpec load_space(const std::string& config_text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(config_text);
    } catch (const json::parse_error& e) {
        throw CasboundError(std::string("config parse error: ") + e.what());
    }
    auto check_keys = [](const json& obj, const char* where,
                         std::initializer_list<const char*> allowed) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = false;
            for (const char* k : allowed)
                if (it.key() == k) ok = true;
            if (!ok)
                throw CasboundError(std::string("config: unknown key \"") + it.key() + "\" in " +
                                    where);
        }
    };
    if (!j.is_object()) throw CasboundError("config: top level must be an object");
    check_keys(j, "top level", {"name", "g", "h", "sphere"});
    for (const char* req : {"name", "g", "h"})
        if (!j.contains(req)) throw CasboundError(std::string("config: missing key \"") + req + "\"");

    SpaceSpec space;
    space.name = j.at("name").get<std::string>();
    space.family = "config";
    space.sphere = j.value("sphere", false);
    LieType g = parse_lie_type(j.at("g").get<std::string>());
    space.g = g;

    const json& hj = j.at("h");
    if (!hj.is_object()) throw CasboundError("config: h must be an object");
    check_keys(hj, "h", {"simple", "torus_rank", "defining", "restriction_matrix"});
    std::vector<LieType> comps;
    if (hj.contains("simple"))
        for (const auto& s : hj.at("simple")) comps.push_back(parse_lie_type(s.get<std::string>()));
    int torus = hj.value("torus_rank", 0);
    if (torus < 0) throw CasboundError("config: h.torus_rank must be nonnegative");
    Subalgebra h = Subalgebra::make(std::move(comps), torus);

    bool has_def = hj.contains("defining"), has_mat = hj.contains("restriction_matrix");
    if (has_def == has_mat)
        throw CasboundError("config: h needs exactly one of defining/restriction_matrix");
    if (has_def) {
        std::vector<std::pair<Weight, int>> defining;
        for (const auto& entry : hj.at("defining")) {
            check_keys(entry, "h.defining entry", {"weight", "mult"});
            Weight w = entry.at("weight").get<Weight>();
            if (static_cast<int>(w.size()) != h.total_rank)
                throw CasboundError("config: h.defining weight has wrong length");
            int mult = entry.value("mult", 1);
            if (mult <= 0) throw CasboundError("config: h.defining mult must be positive");
            defining.emplace_back(std::move(w), mult);
        }
        space.emb = restriction_from_defining(g, std::move(h), defining);
    } else {
        const json& mj = hj.at("restriction_matrix");
        check_keys(mj, "h.restriction_matrix", {"num", "den"});
        auto num = mj.at("num").get<std::vector<std::vector<int>>>();
        int den = mj.value("den", 1);
        space.emb = make_embedding(g, std::move(h), std::move(num), den);
    }
    space.h_label = space.emb->h.str();
    return space;
}

const SpaceSpec& find_space(const std::string& name) {
    for (const SpaceSpec& s : catalog())
        if (s.name == name) return s;
    throw UnknownSpace("unknown space \"" + name + "\"");
}

}  // namespace casbound
