// kfam: generate, analyze, check, and exhaustively scan pure k-families.
//
// Exit codes: 0 all good, 1 conjecture finding, 2 usage error,
// 3 theorem violation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kfam/kfam.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTheorem = 3;

kfam::KFamily read_family(const std::string& path) {
    if (path == "-") return kfam::parse_facet_file(std::cin);
    std::ifstream in(path);
    if (!in) throw kfam::FormatError("cannot open '" + path + "'");
    return kfam::parse_facet_file(in);
}

void emit_family(const kfam::KFamily& s, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        kfam::write_facet_file(std::cout, s);
    } else {
        std::ofstream out(out_path);
        if (!out) throw kfam::FormatError("cannot open '" + out_path + "' for writing");
        kfam::write_facet_file(out, s);
    }
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

json report_json(const kfam::CheckReport& r) {
    json j;
    j["name"] = r.name;
    j["t"] = r.t;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["holds"] = r.holds;
    j["slack"] = r.slack;
    j["tight"] = r.tight;
    j["saturated"] = r.saturated;
    return j;
}

void print_report(const kfam::CheckReport& r) {
    std::cout << r.name << " t=" << r.t << " lhs=" << fmt12(r.lhs) << " rhs=" << fmt12(r.rhs)
              << (r.holds ? " holds" : " VIOLATED") << (r.tight ? " tight" : "")
              << (r.saturated ? " saturated" : "") << '\n';
}

json family_json(const kfam::KFamily& s) {
    json j;
    j["n"] = s.n;
    j["k"] = s.k;
    j["facets"] = s.facets;
    return j;
}

struct GenArgs {
    int n = 0, k = 0, len = 0, facets = 0;
    kfam::Seed seed = 0;
    std::string steps, gens, out;
};

kfam::GaleGenerators parse_gens(const std::string& text) {
    kfam::GaleGenerators g;
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        kfam::Facet f;
        std::istringstream vs(group);
        std::string tok;
        while (std::getline(vs, tok, ',')) {
            if (tok.empty()) continue;
            f.push_back(std::stoi(tok));
        }
        if (!f.empty()) g.generators.push_back(std::move(f));
    }
    if (g.generators.empty()) throw kfam::FormatError("gen shifted: empty generator list");
    return g;
}

int default_jobs() {
    if (const char* env = std::getenv("SPECTRA_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 0;   // auto
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra of pure simplicial k-families: generators, checkers, exhaustive scans"};
    app.require_subcommand(1);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate a named family as a facet file");
    gen->require_subcommand(1);
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", ga.out, "output path (default stdout)"); };
    auto* g_complete = gen->add_subcommand("complete", "all k-subsets of [1..n]");
    g_complete->add_option("--n", ga.n)->required();
    g_complete->add_option("--k", ga.k)->required();
    add_out(g_complete);
    auto* g_star = gen->add_subcommand("star", "hub of k-1 vertices plus one free vertex per facet");
    g_star->add_option("--n", ga.n)->required();
    g_star->add_option("--k", ga.k)->required();
    add_out(g_star);
    auto* g_simplex = gen->add_subcommand("simplex", "a single facet {1..k}");
    g_simplex->add_option("--k", ga.k)->required();
    add_out(g_simplex);
    auto* g_threshold = gen->add_subcommand("threshold", "threshold graph from a cone/isolated step string");
    g_threshold->add_option("--steps", ga.steps, "e.g. ciic")->required();
    add_out(g_threshold);
    auto* g_shifted = gen->add_subcommand("shifted", "order ideal of Gale generators");
    g_shifted->add_option("--n", ga.n)->required();
    g_shifted->add_option("--gens", ga.gens, "e.g. \"1,2,5;1,3,4\"")->required();
    add_out(g_shifted);
    auto* g_tree = gen->add_subcommand("tree", "random simplicial tree by leaf attachment");
    g_tree->add_option("--facets", ga.facets)->required();
    g_tree->add_option("--k", ga.k)->required();
    g_tree->add_option("--seed", ga.seed)->default_val(0);
    add_out(g_tree);
    auto* g_cycle = gen->add_subcommand("cycle", "cycle family: graph cycle coned up to k");
    g_cycle->add_option("--len", ga.len)->required();
    g_cycle->add_option("--k", ga.k)->required();
    add_out(g_cycle);

    std::string in_path = "-";
    bool as_json = false;
    auto* sp = app.add_subcommand("spectrum", "full descending Laplacian spectrum");
    sp->add_option("file", in_path, "facet file, '-' for stdin");
    sp->add_flag("--json", as_json, "emit a JSON object instead of one value per line");

    std::string an_path = "-";
    auto* an = app.add_subcommand("analyze", "combinatorial and spectral summary as JSON");
    an->add_option("file", an_path, "facet file, '-' for stdin");

    std::string check_id, check_path = "-", check_steps;
    long long check_t = 0;
    bool check_json = false;
    auto* ck = app.add_subcommand("check", "evaluate one inequality/equality family");
    ck->add_option("id", check_id, "brouwer|majorization|dr|tree-bound|threshold-cone|forbidden")
        ->required();
    ck->add_option("file", check_path, "facet file, '-' for stdin");
    ck->add_option("--t", check_t, "partial-sum index (default: all t)");
    ck->add_option("--steps", check_steps, "threshold steps (threshold-cone only)");
    ck->add_flag("--json", check_json);

    std::string ops_op, ops_a, ops_b, ops_mode = "vertex", ops_out;
    auto* op = app.add_subcommand("ops", "complement/union/join/cone on facet files");
    op->add_option("op", ops_op, "complement|union|join|cone")->required();
    op->add_option("file1", ops_a)->required();
    op->add_option("file2", ops_b, "second operand (union/join)");
    op->add_option("--mode", ops_mode, "union mode: vertex|facet")->capture_default_str();
    op->add_option("--out", ops_out);

    int se_n = 0, se_k = 0, se_jobs = default_jobs();
    long long se_tmax = 0;
    bool se_connected = false;
    std::string se_check = "brouwer", se_json;
    auto* se = app.add_subcommand("search", "exhaustive isomorphism-class scan with a checker");
    se->add_option("--n", se_n)->required();
    se->add_option("--k", se_k)->required();
    se->add_flag("--connected", se_connected, "ridge-connected families only");
    se->add_option("--check", se_check, "brouwer|majorization|forbidden")->capture_default_str();
    se->add_option("--t-max", se_tmax, "cap the partial-sum index");
    se->add_option("--jobs", se_jobs, "worker threads (0 = auto; SPECTRA_JOBS overrides default)");
    se->add_option("--json", se_json, "write the full report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            kfam::KFamily s;
            if (g_complete->parsed()) s = kfam::complete_family(ga.n, ga.k);
            else if (g_star->parsed()) s = kfam::star_family(ga.n, ga.k);
            else if (g_simplex->parsed()) s = kfam::simplex_family(ga.k);
            else if (g_threshold->parsed()) s = kfam::threshold_graph(kfam::parse_threshold_steps(ga.steps));
            else if (g_shifted->parsed()) s = kfam::shifted_from_generators(ga.n, parse_gens(ga.gens));
            else if (g_tree->parsed()) s = kfam::random_tree(ga.facets, ga.k, ga.seed);
            else s = kfam::cycle_family(ga.len, ga.k);
            emit_family(s, ga.out);
            return kExitOk;
        }

        if (sp->parsed()) {
            const auto s = read_family(in_path);
            const auto spec = kfam::spectrum(s);
            if (as_json) {
                json j;
                j["spectrum"] = spec.values;
                std::cout << j.dump() << '\n';
            } else {
                for (double v : spec.values) std::cout << fmt12(v) << '\n';
            }
            return kExitOk;
        }

        if (an->parsed()) {
            const auto s = read_family(an_path);
            json j;
            j["n"] = s.n;
            j["k"] = s.k;
            j["f_vector"] = kfam::f_vector(s);
            j["degrees"] = kfam::degree_sequence(s);
            j["conjugate_partition"] = kfam::conjugate_partition(s);
            j["spectrum"] = kfam::spectrum(s).values;
            json comps = json::array();
            for (const auto& c : kfam::ridge_components(s)) comps.push_back(family_json(c)["facets"]);
            j["ridge_components"] = comps;
            try {
                j["matching_number"] = kfam::matching_number(s);
            } catch (const kfam::SizeError&) {
                j["matching_number"] = nullptr;
            }
            try {
                j["is_tree"] = kfam::is_simplicial_tree(s);
            } catch (const kfam::SizeError&) {
                j["is_tree"] = nullptr;
            }
            try {
                j["is_shifted"] = kfam::is_shifted(s);
            } catch (const kfam::SizeError&) {
                j["is_shifted"] = nullptr;
            }
            std::cout << j.dump() << '\n';
            return kExitOk;
        }

        if (ck->parsed()) {
            std::vector<kfam::CheckReport> reports;
            if (check_id == "threshold-cone") {
                if (check_steps.empty()) throw kfam::FormatError("check threshold-cone: --steps is required");
                reports.push_back(kfam::check_threshold_cone_equality(
                    kfam::parse_threshold_steps(check_steps)));
            } else {
                const auto s = read_family(check_path);
                if (check_id == "brouwer") {
                    if (check_t > 0) {
                        reports.push_back(kfam::check_brouwer(s, check_t));
                    } else {
                        reports = kfam::check_brouwer_all(s).reports;
                    }
                } else if (check_id == "majorization") {
                    reports = kfam::check_majorization(s).reports;
                } else if (check_id == "dr") {
                    reports = kfam::check_dr_equality(s).reports;
                } else if (check_id == "tree-bound") {
                    if (check_t > 0) {
                        reports.push_back(kfam::check_tree_bound(s, check_t));
                    } else {
                        const auto len = static_cast<long long>(kfam::spectrum(s).values.size());
                        for (long long t = 1; t <= len; ++t)
                            reports.push_back(kfam::check_tree_bound(s, t));
                    }
                } else if (check_id == "forbidden") {
                    if (check_t <= 1) throw kfam::FormatError("check forbidden: need --t > 1");
                    reports.push_back(kfam::check_forbidden_lemma(s, check_t));
                } else {
                    throw kfam::FormatError("unknown checker id '" + check_id + "'");
                }
            }
            bool all_hold = true;
            if (check_json) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(report_json(r));
                std::cout << arr.dump() << '\n';
            }
            for (const auto& r : reports) {
                if (!check_json) print_report(r);
                all_hold = all_hold && r.holds;
            }
            return all_hold ? kExitOk : kExitFinding;
        }

        if (op->parsed()) {
            const auto a = read_family(ops_a);
            kfam::KFamily out;
            if (ops_op == "complement") {
                out = kfam::complement(a);
            } else if (ops_op == "cone") {
                out = kfam::cone(a);
            } else if (ops_op == "union" || ops_op == "join") {
                if (ops_b.empty()) throw kfam::FormatError("ops " + ops_op + ": second operand required");
                const auto b = read_family(ops_b);
                if (ops_op == "join") {
                    out = kfam::simplicial_join(a, b);
                } else {
                    const auto mode = (ops_mode == "facet") ? kfam::UnionMode::FacetDisjoint
                                                            : kfam::UnionMode::VertexDisjoint;
                    out = kfam::disjoint_union(a, b, mode);
                }
            } else {
                throw kfam::FormatError("unknown op '" + ops_op + "'");
            }
            emit_family(out, ops_out);
            return kExitOk;
        }

        if (se->parsed()) {
            kfam::EnumSpec spec;
            spec.n = se_n;
            spec.k = se_k;
            spec.connected_only = se_connected;
            spec.jobs = se_jobs;
            std::vector<long long> ts;
            if (se_tmax > 0) {
                for (long long t = 1; t <= se_tmax; ++t) ts.push_back(t);
            }
            const auto report = kfam::scan(spec, kfam::scan_checker_from_id(se_check), ts);
            std::cerr << "scanned " << report.families_scanned << " classes ("
                      << report.masks_examined << " subsets) in "
                      << fmt12(report.runtime_seconds) << " s\n";
            if (!se_json.empty()) {
                json j;
                j["n"] = spec.n;
                j["k"] = spec.k;
                j["connected_only"] = spec.connected_only;
                j["checker"] = se_check;
                j["masks_examined"] = report.masks_examined;
                j["families_scanned"] = report.families_scanned;
                j["runtime_seconds"] = report.runtime_seconds;
                json cex = json::array();
                for (const auto& c : report.counterexamples) {
                    json e;
                    e["family"] = family_json(c.family);
                    e["checker"] = c.checker;
                    e["t"] = c.t;
                    e["lhs"] = c.lhs;
                    e["rhs"] = c.rhs;
                    cex.push_back(e);
                }
                j["counterexamples"] = cex;
                json leaders;
                for (const auto& [t, recs] : report.tightness_leaders) {
                    json arr = json::array();
                    for (const auto& rec : recs) {
                        json e;
                        e["family"] = family_json(rec.family);
                        e["slack"] = rec.slack;
                        arr.push_back(e);
                    }
                    leaders[std::to_string(t)] = arr;
                }
                j["tightness_leaders"] = leaders;
                j["verdict"] = report.pass() ? "PASS" : "COUNTEREXAMPLE";
                std::ofstream jout(se_json);
                if (!jout) throw kfam::FormatError("cannot open '" + se_json + "' for writing");
                jout << j.dump(2) << '\n';
            }
            for (const auto& c : report.counterexamples) {
                std::cout << "COUNTEREXAMPLE checker=" << c.checker << " t=" << c.t
                          << " lhs=" << fmt12(c.lhs) << " rhs=" << fmt12(c.rhs) << " facets=";
                for (const auto& f : c.family.facets) {
                    for (std::size_t i = 0; i < f.size(); ++i)
                        std::cout << (i ? "," : " ") << f[i];
                }
                std::cout << '\n';
            }
            return report.pass() ? kExitOk : kExitFinding;
        }
    } catch (const kfam::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << '\n';
        return kExitTheorem;
    } catch (const kfam::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
