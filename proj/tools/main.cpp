#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hclab/harness.hpp"
#include "hclab/series.hpp"

using namespace hclab;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CliConfig {
    Caps caps;
    std::vector<std::string> corpus_paths;
    std::string format = "text";
    std::string out_path;
    int jobs = 1;
    bool diagnostic = false;
};

// HC_LAB_CAPS=construction,lattice,iso overrides the cap flags.
void apply_env_caps(Caps& caps) {
    const char* env = std::getenv("HC_LAB_CAPS");
    if (!env) return;
    std::istringstream ss(env);
    std::string tok;
    int vals[3];
    int i = 0;
    while (i < 3 && std::getline(ss, tok, ',')) {
        try {
            vals[i] = std::stoi(tok);
        } catch (...) {
            throw Error("HC_LAB_CAPS must be three comma-separated integers");
        }
        ++i;
    }
    if (i != 3 || std::getline(ss, tok, ','))
        throw Error("HC_LAB_CAPS must be three comma-separated integers");
    caps.construction = vals[0];
    caps.lattice = vals[1];
    caps.isomorphism = vals[2];
}

std::vector<std::pair<GroupSpec, GroupPtr>> build_corpus(const CliConfig& cfg) {
    if (cfg.corpus_paths.empty()) return standard_corpus(cfg.caps.construction);
    std::vector<std::pair<GroupSpec, GroupPtr>> out;
    for (const auto& p : cfg.corpus_paths) {
        GroupSpec spec = GroupSpec::from_file(p);
        out.emplace_back(spec, load_group(p, cfg.caps.construction));
    }
    return out;
}

std::string subgroup_desc(const Subgroup& s) {
    std::ostringstream os;
    os << "order " << s.size() << " {";
    const auto& el = s.elements();
    for (std::size_t i = 0; i < el.size() && i < 12; ++i) {
        if (i) os << " ";
        os << s.parent()->label(el[i]);
    }
    if (el.size() > 12) os << " ...";
    os << "}";
    return os.str();
}

int cmd_info(const CliConfig& cfg, const std::string& spec_text) {
    GroupPtr g = realize(parse_group_spec(spec_text), cfg.caps.construction);
    auto lat = all_subgroups(g, cfg.caps.lattice);
    std::cout << "group " << g->name() << "\n";
    std::cout << "order " << g->order() << "\n";
    std::cout << "subgroups " << lat.size() << "\n";
    std::cout << "center " << center(g).size() << "\n";
    std::cout << "frattini " << frattini(lat).size() << "\n";
    std::cout << "fitting " << fitting(g).size() << "\n";
    std::cout << "generalized_fitting " << generalized_fitting(g).size() << "\n";
    std::cout << "hypercenter " << hypercenter(g).size() << "\n";
    std::cout << "nilpotent_residual " << nilpotent_residual(g).size() << "\n";
    std::cout << "nilpotent " << (is_nilpotent(g) ? "true" : "false") << "\n";
    std::cout << "supersolvable " << (is_supersolvable(g) ? "true" : "false") << "\n";
    std::cout << "solvable " << (is_solvable(g) ? "true" : "false") << "\n";
    for (int p : prime_divisors(g->order())) {
        auto syl = sylow_subgroups(g, p);
        const Subgroup& rep = syl.front();
        std::cout << "sylow p=" << p << " order=" << rep.size() << " count=" << syl.size()
                  << " cyclic=" << (is_cyclic(rep) ? "true" : "false")
                  << " normal=" << (syl.size() == 1 ? "true" : "false") << "\n";
    }
    return 0;
}

// Selector grammar: `order=k,index=j` into the sorted lattice, or a
// comma-separated list of generator element indices.
Subgroup select_subgroup(const GroupPtr& g, const SubgroupLattice& lat,
                         const std::string& selector) {
    if (selector.rfind("order=", 0) == 0) {
        int order = 0, index = 0;
        if (std::sscanf(selector.c_str(), "order=%d,index=%d", &order, &index) != 2)
            throw Error("bad selector: " + selector);
        int seen = 0;
        for (int i = 0; i < lat.size(); ++i)
            if (lat[i].size() == order) {
                if (seen == index) return lat[i];
                ++seen;
            }
        throw Error("selector out of range: only " + std::to_string(seen) +
                    " subgroups of order " + std::to_string(order));
    }
    std::vector<int> gens;
    std::istringstream ss(selector);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            gens.push_back(std::stoi(tok));
        } catch (...) {
            throw Error("bad selector token: " + tok);
        }
    }
    if (gens.empty()) throw Error("empty selector");
    return generated_subgroup(g, gens);
}

int cmd_check(const CliConfig& cfg, const std::string& predicate, const std::string& spec_text,
              const std::string& selector) {
    GroupPtr g = realize(parse_group_spec(spec_text), cfg.caps.construction);
    auto lat = all_subgroups(g, cfg.caps.lattice);
    Subgroup h = select_subgroup(g, lat, selector);
    std::cout << "group " << g->name() << "\n";
    std::cout << "subgroup " << subgroup_desc(h) << "\n";

    auto report = [&](const EmbeddingVerdict& v) {
        std::cout << "verdict " << (v.holds ? "true" : "false") << "\n";
        if (v.witness) std::cout << "witness " << subgroup_desc(*v.witness) << "\n";
        if (v.counterexample)
            std::cout << "counterexample g=" << v.counterexample->g << " ("
                      << g->label(v.counterexample->g) << ") x=" << v.counterexample->x << " ("
                      << g->label(v.counterexample->x) << ")\n";
        if (v.offending_subgroup)
            std::cout << "offending " << subgroup_desc(*v.offending_subgroup) << "\n";
        return v.holds ? 0 : 0;
    };

    if (predicate == "h") return report(is_h_subgroup(h));
    if (predicate == "hc") return report(is_hc_subgroup(h));
    if (predicate == "cnormal") return report(is_c_normal(h));
    if (predicate == "weaklyh") return report(is_weakly_h_subgroup(h));
    if (predicate == "quasinormal") return report(is_quasinormal_in(lat, h));
    if (predicate == "subnormal") {
        std::cout << "verdict " << (is_subnormal(h) ? "true" : "false") << "\n";
        return 0;
    }
    if (predicate == "normal") {
        std::cout << "verdict " << (is_normal(h) ? "true" : "false") << "\n";
        return 0;
    }
    throw Error("unknown predicate: " + predicate +
                " (expected h|hc|cnormal|weaklyh|quasinormal|subnormal|normal)");
}

ordered_json record_json(const StatementCheck& c) {
    ordered_json j;
    j["statement"] = c.statement;
    j["group"] = c.group;
    j["params"] = c.params;
    j["verdict"] = verdict_name(c.verdict);
    j["witness"] = c.witness;
    return j;
}

int cmd_verify(const CliConfig& cfg, std::vector<std::string> ids) {
    if (ids.size() == 1 && ids[0] == "all") {
        ids.clear();
        for (const auto& s : statement_registry()) ids.push_back(s.id);
    }
    for (const auto& id : ids)
        if (!find_statement(id)) {
            std::cerr << "unknown statement id: " << id << "\n";
            return 2;
        }

    HarnessConfig hcfg;
    hcfg.caps = cfg.caps;
    hcfg.diagnostic = cfg.diagnostic;
    hcfg.jobs = cfg.jobs;
    auto corpus = build_corpus(cfg);
    SuiteReport report = verify_suite(ids, corpus, hcfg);

    if (cfg.format == "records") {
        for (const auto& c : report.records) std::cout << record_json(c).dump() << "\n";
    } else {
        std::cout << "corpus " << report.corpus_version << " (" << corpus.size() << " groups)\n";
        std::cout << "statement        pass  vacuous     fail     skip  nonvacuous";
        if (cfg.diagnostic) std::cout << "  contrapositive";
        std::cout << "\n";
        char line[160];
        for (const auto& [id, t] : report.tallies) {
            std::snprintf(line, sizeof line, "%-12s %8d %8d %8d %8d  %s", id.c_str(), t.pass,
                          t.vacuous, t.fail, t.skipped, t.non_vacuous() > 0 ? "yes" : "NO");
            std::cout << line;
            if (cfg.diagnostic) std::cout << "  " << t.contrapositive;
            std::cout << "\n";
        }
        for (const auto& c : report.records)
            if (c.verdict == Verdict::Fail)
                std::cout << "FAIL " << c.statement << " " << c.group << " " << c.params
                          << " witness=" << c.witness << "\n";
        std::cout << "fails " << report.fail_count << "\n";
        std::cout << "skips " << report.skip_count << "\n";
        std::cout << "wall_ms " << report.wall_ms << "\n";
    }
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) throw Error("cannot open output file: " + cfg.out_path);
        for (const auto& c : report.records) out << record_json(c).dump() << "\n";
    }
    if (report.fail_count > 0) return 1;
    if (report.skip_count > 0) return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group embedding-property lab"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    CliConfig cfg;
    app.add_option("--cap-order", cfg.caps.construction, "construction order cap");
    app.add_option("--cap-lattice", cfg.caps.lattice, "lattice enumeration cap");
    app.add_option("--cap-iso", cfg.caps.isomorphism, "isomorphism test cap");
    app.add_option("--corpus", cfg.corpus_paths, "Cayley-table fixture paths replacing the default corpus");
    app.add_option("--format", cfg.format, "text|records")
        ->check(CLI::IsMember({"text", "records"}));
    app.add_option("--out", cfg.out_path, "write structured records to this path");
    app.add_option("--jobs", cfg.jobs, "parallel evaluation degree");
    app.add_flag("--diagnostic", cfg.diagnostic, "evaluate conclusions even when hypotheses fail");

    std::string spec_text, predicate, selector;
    std::vector<std::string> ids;

    CLI::App* info = app.add_subcommand("info", "characteristic subgroups and class flags");
    info->add_option("spec", spec_text, "group spec, e.g. S4, D8, EA(3,2), file:PATH")->required();

    CLI::App* check = app.add_subcommand("check", "embedding-predicate query");
    check->add_option("predicate", predicate, "h|hc|cnormal|weaklyh|quasinormal|subnormal|normal")
        ->required();
    check->add_option("spec", spec_text, "group spec")->required();
    check->add_option("selector", selector, "order=k,index=j or generator indices i,j,...")
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run statement checks over the corpus");
    verify->add_option("ids", ids, "statement ids or `all`")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        apply_env_caps(cfg.caps);
        if (info->parsed()) return cmd_info(cfg, spec_text);
        if (check->parsed()) return cmd_check(cfg, predicate, spec_text, selector);
        if (verify->parsed()) return cmd_verify(cfg, ids);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
