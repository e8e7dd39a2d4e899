#include "casbound/report.hpp"

#include <sstream>

#include "json.hpp"

namespace casbound {

namespace {

using nlohmann::json;

json rat_json(const Rat& q) { return rat_str(q); }

Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw CasboundError("report_parse: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

json dec_json(const Decomposition& dec) {
    json a = json::array();
    for (const auto& [w, m] : dec) a.push_back({{"weight", w}, {"mult", m}});
    return a;
}

Decomposition dec_parse(const json& a) {
    Decomposition dec;
    for (const auto& e : a)
        dec.emplace_back(e.at("weight").get<Weight>(), e.at("mult").get<long long>());
    return dec;
}

Verdict verdict_parse(const std::string& s) {
    for (Verdict v : {Verdict::RuledOutEmpty, Verdict::RuledOutCurvature, Verdict::RuledOutNoTT,
                      Verdict::StableBound, Verdict::SemistableBound,
                      Verdict::PotentialInstability})
        if (verdict_str(v) == s) return v;
    throw CasboundError("report_parse: bad verdict '" + s + "'");
}

Summary summary_parse(const std::string& s) {
    for (Summary v : {Summary::StableByCurvature, Summary::StableByFourier,
                      Summary::SemistableByFourier, Summary::PotentialInstabilities})
        if (summary_str(v) == s) return v;
    throw CasboundError("report_parse: bad summary '" + s + "'");
}

}  // namespace

ReportDocument make_report(const SpaceSpec& space, const EinsteinData& ein,
                           StabilityReport result, double seconds) {
    ReportDocument doc;
    doc.space = space.name;
    doc.family = space.family;
    doc.parameters = space.parameters;
    doc.g = space.g.str();
    doc.h_label = space.h_label;
    doc.sphere = space.sphere;
    doc.reconstructed = space.reconstructed;
    doc.einstein = ein;
    doc.result = std::move(result);
    doc.seconds = seconds;
    return doc;
}

std::string report_json(const ReportDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["space"] = {{"name", doc.space},     {"family", doc.family},
                  {"parameters", doc.parameters}, {"g", doc.g},
                  {"h", doc.h_label},      {"sphere", doc.sphere},
                  {"reconstructed", doc.reconstructed}};
    j["einstein"] = {{"isotropy", dec_json(doc.einstein.isotropy)},
                     {"common_casimir", rat_json(doc.einstein.common_casimir)},
                     {"einstein_constant", rat_json(doc.einstein.einstein_constant)},
                     {"dim_m", doc.einstein.dim_m.get_str()}};
    j["cutoff"] = rat_json(doc.result.cutoff);
    json isos = json::array();
    for (const IsotypeBounds& b : doc.result.isotypes)
        isos.push_back({{"v", b.v},
                        {"cas_h", rat_json(b.cas_h)},
                        {"J", b.J},
                        {"aa_min", rat_json(b.aa_min)},
                        {"aa_max", rat_json(b.aa_max)},
                        {"kr_min", rat_json(b.kr_min)},
                        {"curvature_safe", b.curvature_safe}});
    j["isotypes"] = std::move(isos);
    json modes = json::array();
    for (const ModeReport& m : doc.result.modes) {
        json e = {{"gamma", m.gamma},     {"cas", rat_json(m.cas_g)},
                  {"hom_m", m.hom_m},     {"hom_sym", m.hom_sym},
                  {"verdict", verdict_str(m.verdict)}};
        if (m.bound) e["bound"] = rat_json(*m.bound);
        if (m.refined_terms)
            e["refined_terms"] = {{"cas_gamma", rat_json(m.refined_terms->cas_gamma)},
                                  {"u_max", rat_json(m.refined_terms->u_max)},
                                  {"w_min", rat_json(m.refined_terms->w_min)},
                                  {"v_max", rat_json(m.refined_terms->v_max)}};
        modes.push_back(std::move(e));
    }
    j["modes"] = std::move(modes);
    j["summary"] = summary_str(doc.result.summary);
    j["partial"] = doc.result.partial;
    j["timing"] = {{"seconds", doc.seconds}};
    return j.dump(2) + "\n";
}

ReportDocument report_parse(const std::string& json_text) {
    json j = json::parse(json_text);
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != report_schema_version)
        throw CasboundError("report_parse: unsupported schema version");
    const json& sp = j.at("space");
    doc.space = sp.at("name").get<std::string>();
    doc.family = sp.at("family").get<std::string>();
    doc.parameters = sp.at("parameters").get<std::vector<int>>();
    doc.g = sp.at("g").get<std::string>();
    doc.h_label = sp.at("h").get<std::string>();
    doc.sphere = sp.at("sphere").get<bool>();
    doc.reconstructed = sp.at("reconstructed").get<bool>();
    const json& ein = j.at("einstein");
    doc.einstein.isotropy = dec_parse(ein.at("isotropy"));
    doc.einstein.common_casimir = rat_parse(ein.at("common_casimir").get<std::string>());
    doc.einstein.einstein_constant = rat_parse(ein.at("einstein_constant").get<std::string>());
    doc.einstein.dim_m = Int(ein.at("dim_m").get<std::string>());
    doc.result.space = doc.space;
    doc.result.einstein_constant = doc.einstein.einstein_constant;
    doc.result.cutoff = rat_parse(j.at("cutoff").get<std::string>());
    for (const auto& e : j.at("isotypes")) {
        IsotypeBounds b;
        b.v = e.at("v").get<Weight>();
        b.cas_h = rat_parse(e.at("cas_h").get<std::string>());
        b.J = e.at("J").get<std::vector<Weight>>();
        b.aa_min = rat_parse(e.at("aa_min").get<std::string>());
        b.aa_max = rat_parse(e.at("aa_max").get<std::string>());
        b.kr_min = rat_parse(e.at("kr_min").get<std::string>());
        b.curvature_safe = e.at("curvature_safe").get<bool>();
        doc.result.isotypes.push_back(std::move(b));
    }
    for (const auto& e : j.at("modes")) {
        ModeReport m;
        m.gamma = e.at("gamma").get<Weight>();
        m.cas_g = rat_parse(e.at("cas").get<std::string>());
        m.hom_m = e.at("hom_m").get<long long>();
        m.hom_sym = e.at("hom_sym").get<long long>();
        m.verdict = verdict_parse(e.at("verdict").get<std::string>());
        if (e.contains("bound")) m.bound = rat_parse(e.at("bound").get<std::string>());
        if (e.contains("refined_terms")) {
            const json& t = e.at("refined_terms");
            RefinedTerms rt;
            rt.cas_gamma = rat_parse(t.at("cas_gamma").get<std::string>());
            rt.u_max = rat_parse(t.at("u_max").get<std::string>());
            rt.w_min = rat_parse(t.at("w_min").get<std::string>());
            rt.v_max = rat_parse(t.at("v_max").get<std::string>());
            m.refined_terms = rt;
        }
        doc.result.modes.push_back(std::move(m));
    }
    doc.result.summary = summary_parse(j.at("summary").get<std::string>());
    doc.result.partial = j.at("partial").get<bool>();
    doc.seconds = j.at("timing").at("seconds").get<double>();
    return doc;
}

std::string mode_label(const Weight& gamma) {
    std::string out;
    for (size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (gamma[i] != 1) out += std::to_string(gamma[i]);
        out += "ω" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

std::string report_markdown(const ReportDocument& doc) {
    std::ostringstream os;
    os << "| space | E | potential instabilities | note |\n";
    os << "|---|---|---|---|\n";
    std::string modes;
    for (const ModeReport* m : doc.result.unresolved()) {
        if (!modes.empty()) modes += ", ";
        modes += mode_label(m->gamma);
        if (m->verdict == Verdict::SemistableBound) modes += "°";
    }
    std::string note;
    switch (doc.result.summary) {
        case Summary::StableByCurvature: note = "SC"; break;
        case Summary::StableByFourier: note = "SF"; break;
        case Summary::SemistableByFourier: note = "SF₀"; break;
        case Summary::PotentialInstabilities: note = ""; break;
    }
    if (doc.result.partial) note += note.empty() ? "partial" : ", partial";
    os << "| " << doc.space << " | " << rat_str(doc.einstein.einstein_constant) << " | "
       << (modes.empty() ? "—" : modes) << " | " << note << " |\n";
    return os.str();
}

}  // namespace casbound
