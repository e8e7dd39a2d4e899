#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "casbound/cache.hpp"
#include "casbound/golden.hpp"
#include "casbound/report.hpp"

using namespace casbound;

namespace {

// Exit codes: 0 ok, 1 verification mismatch, 2 unknown space / bad usage,
// 3 not Einstein, 4 analysis truncated by --max-modes.
constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_unknown = 2;
constexpr int exit_not_einstein = 3;
constexpr int exit_partial = 4;

SpaceSpec resolve_space(const std::string& name, const std::string& config) {
    if (!name.empty()) return find_space(name);
    std::ifstream in(config);
    if (!in) throw UnknownSpace("cannot open config file " + config);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_space(ss.str());
}

int cmd_analyze(const std::string& name, const std::string& config, const std::string& format,
                long long max_modes, int jobs) {
    SpaceSpec sp = resolve_space(name, config);
    auto t0 = std::chrono::steady_clock::now();
    EinsteinData ein = einstein_check(sp);
    AnalyzeOptions opts;
    opts.jobs = jobs;
    opts.max_modes = max_modes;
    StabilityReport rep = analyze(sp, opts);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ReportDocument doc = make_report(sp, ein, std::move(rep), seconds);
    std::cout << (format == "md" ? report_markdown(doc) : report_json(doc));
    return doc.result.partial ? exit_partial : exit_ok;
}

int cmd_verify_tables(const std::vector<int>& tables, int rank_limit, int jobs) {
    AnalyzeOptions opts;
    opts.jobs = jobs;
    bool all_pass = true;
    for (int table : tables) {
        for (const RowCheck& rc : verify_table(table, rank_limit, opts)) {
            std::cout << "table " << table << "  " << rc.space << "  "
                      << (rc.pass ? "ok" : "MISMATCH") << "\n";
            for (const std::string& d : rc.diffs) std::cout << "  - " << d << "\n";
            for (const std::string& a : rc.audit) std::cout << "  ~ " << a << "\n";
            all_pass = all_pass && rc.pass;
        }
    }
    return all_pass ? exit_ok : exit_mismatch;
}

int cmd_list() {
    for (const SpaceSpec& s : catalog()) {
        EinsteinData ein = einstein_check(s);
        std::cout << s.name << "\t" << s.family << "\t" << s.g.str() << "/" << s.h_label << "\tE = "
                  << rat_str(ein.einstein_constant) << "\n";
    }
    return exit_ok;
}

int cmd_einstein(const std::string& name, const std::string& config) {
    SpaceSpec sp = resolve_space(name, config);
    EinsteinData ein = einstein_check(sp);
    std::cout << "space: " << sp.name << "\n";
    std::cout << "dim m: " << ein.dim_m.get_str() << "\n";
    std::cout << "isotropy:";
    for (const auto& [w, m] : ein.isotropy) {
        std::cout << " " << weight_str(w);
        if (m != 1) std::cout << "x" << m;
    }
    std::cout << "\n";
    std::cout << "casimir: " << rat_str(ein.common_casimir) << "\n";
    std::cout << "E = " << rat_str(ein.einstein_constant) << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stability of standard homogeneous Einstein metrics: exact per-mode verdicts"};
    app.require_subcommand(1);

    std::string space, config, format = "json", cache;
    long long max_modes = -1;
    int jobs = 1, rank_limit = 12;
    std::vector<int> tables;

    auto add_space_flags = [&](CLI::App* cmd) {
        auto* s = cmd->add_option("--space", space, "catalog space name");
        auto* c = cmd->add_option("--config", config, "space config file (JSON)");
        s->excludes(c);
    };

    CLI::App* an = app.add_subcommand("analyze", "run the full stability analysis of one space");
    add_space_flags(an);
    an->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "md"}));
    an->add_option("--max-modes", max_modes, "cap on analysed modes (report marked partial)");
    an->add_option("--jobs", jobs, "worker threads");
    an->add_option("--cache", cache, "cache directory (default $CASBOUND_CACHE_DIR)");

    CLI::App* vt = app.add_subcommand("verify-tables", "compare against the golden verdict tables");
    vt->add_option("--table", tables, "table number(s), 3-9")->required();
    vt->add_option("--rank-limit", rank_limit, "skip spaces with rank(g) above this");
    vt->add_option("--jobs", jobs, "worker threads");
    vt->add_option("--cache", cache, "cache directory");

    app.add_subcommand("list", "list the catalog with Einstein constants");

    CLI::App* ei = app.add_subcommand("einstein", "Einstein data of the standard metric");
    add_space_flags(ei);

    CLI11_PARSE(app, argc, argv);

    if (!cache.empty()) set_cache_dir(cache);

    try {
        if (an->parsed()) {
            if (space.empty() == config.empty()) {
                std::cerr << "analyze: exactly one of --space/--config required\n";
                return exit_unknown;
            }
            return cmd_analyze(space, config, format, max_modes, jobs);
        }
        if (vt->parsed()) return cmd_verify_tables(tables, rank_limit, jobs);
        if (ei->parsed()) {
            if (space.empty() == config.empty()) {
                std::cerr << "einstein: exactly one of --space/--config required\n";
                return exit_unknown;
            }
            return cmd_einstein(space, config);
        }
        return cmd_list();
    } catch (const NotEinstein& e) {
        std::cerr << "not Einstein; distinct Casimir eigenvalues:";
        for (const Rat& v : e.values) std::cerr << " " << rat_str(v);
        std::cerr << "\n";
        return exit_not_einstein;
    } catch (const UnknownSpace& e) {
        std::cerr << e.what() << "\n";
        return exit_unknown;
    } catch (const CasboundError& e) {
        std::cerr << e.what() << "\n";
        return exit_unknown;
    }
}
