// parpart_cli.cpp - command-line driver: generate, construct, verify, report
#include "parpart/bags.hpp"
#include "parpart/clique_decomp.hpp"
#include "parpart/ham_power.hpp"
#include "parpart/io.hpp"
#include "parpart/subsets.hpp"
#include "parpart/synth.hpp"
#include "parpart/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace parpart;
using nlohmann::json;

namespace {

struct GlobalOptions {
    std::string format = "text";
    int threads = 0;
};

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

void print_conditions_text(const std::vector<ConditionReport>& reports) {
    std::cout << "condition            lhs            rhs  relation  holds\n";
    for (const auto& r : reports) {
        std::printf("%-12s %14s %14s  %8s  %s\n", r.id.c_str(), r.lhs.str().c_str(),
                    r.rhs.str().c_str(), r.relation.c_str(), r.holds ? "yes" : "NO");
    }
}

json conditions_json(const std::vector<ConditionReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(condition_to_json(r));
    return out;
}

void emit_report(const GlobalOptions& global, const RunReport& report,
                 const std::string& report_path) {
    if (!report_path.empty()) write_json_file(report_path, report.to_json());
    if (global.format == "json") {
        std::cout << canonical_dump(report.to_json());
    } else {
        for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
        if (!report.conditions.empty()) print_conditions_text(report.conditions);
        std::cout << "defects processed: " << report.defects_processed
                  << ", repair swaps: " << report.repair_swaps
                  << ", rearrangements: " << report.rearrangements << "\n"
                  << "activations: " << report.activations
                  << " (conflicted: " << report.conflicted_activations
                  << ", swaps: " << report.activation_swaps << ")\n";
        for (const auto& v : report.verification) std::cout << "verified: " << v << "\n";
    }
}

int handle_condition_unmet(const ConditionUnmet& e, const GlobalOptions& global) {
    std::cerr << "conditions unmet: " << e.what() << "\n";
    if (global.format == "json") std::cout << canonical_dump(conditions_json(e.failed));
    else print_conditions_text(e.failed);
    return 2;
}

SystemFile load_system(const std::string& path) {
    return system_from_json(read_json_file(path));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructors and verifiers for non-close parpartition families\n"
                 "and bag-avoiding Hamiltonian cycle powers"};
    app.require_subcommand(1);

    GlobalOptions global;
    if (const char* env = std::getenv("PARPART_THREADS")) global.threads = std::atoi(env);
    app.add_option("--threads", global.threads, "worker threads for scans (0 = library default)");
    app.add_option("--format", global.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- reduce ----
    auto* reduce = app.add_subcommand("reduce", "build the subset triple system for (n,k,alpha,beta)");
    int r_n = 0, r_k = 0;
    std::string r_alpha, r_beta, r_out;
    reduce->add_option("--n", r_n, "ground set size")->required();
    reduce->add_option("--k", r_k, "subset size")->required();
    reduce->add_option("--alpha", r_alpha, "threshold as p/q")->required();
    reduce->add_option("--beta", r_beta, "threshold as p/q")->required();
    reduce->add_option("-o,--out", r_out, "output system file")->required();

    // ---- synth ----
    auto* synth = app.add_subcommand("synth", "seeded synthetic systems");
    synth->require_subcommand(1);
    auto* dense = synth->add_subcommand("dense", "g1 with a min-degree floor; g2, g3 empty");
    int d_m = 0, d_delta = 0;
    std::uint64_t d_seed = 0;
    std::string d_out;
    dense->add_option("--m", d_m)->required();
    dense->add_option("--delta", d_delta, "min degree floor")->required();
    dense->add_option("--seed", d_seed)->required();
    dense->add_option("-o,--out", d_out)->required();

    auto* pair = synth->add_subcommand("pair", "fill g2, g3 of an existing system");
    std::string p_sys, p_out;
    int p_d2 = 0, p_d3 = 0;
    std::uint64_t p_seed = 0;
    pair->add_option("--sys", p_sys, "input system; its g1 is the forbidden graph")->required();
    pair->add_option("--d2", p_d2, "max degree target for g2")->required();
    pair->add_option("--d3", p_d3, "max degree target for g3")->required();
    pair->add_option("--seed", p_seed)->required();
    pair->add_option("-o,--out", p_out)->required();

    auto* triple = synth->add_subcommand("triple", "dense g1 plus bounded-degree g2, g3, one seed");
    int t_m = 0, t_delta = 0, t_d2 = 0, t_d3 = 0;
    std::uint64_t t_seed = 0;
    std::string t_out;
    triple->add_option("--m", t_m)->required();
    triple->add_option("--delta", t_delta)->required();
    triple->add_option("--d2", t_d2)->required();
    triple->add_option("--d3", t_d3)->required();
    triple->add_option("--seed", t_seed)->required();
    triple->add_option("-o,--out", t_out)->required();

    // ---- conditions ----
    auto* conditions = app.add_subcommand("conditions", "evaluate the degree conditions for a system");
    std::string c_sys;
    int c_l = 0;
    long long c_q = 1;
    conditions->add_option("--sys", c_sys)->required();
    conditions->add_option("--l", c_l)->required();
    conditions->add_option("--q", c_q, "segment count parameter (default 1)");

    // ---- decompose ----
    auto* decompose = app.add_subcommand("decompose", "bag-free almost-l-decomposition of g1");
    std::string dc_sys, dc_out, dc_mode = "best_effort", dc_report;
    int dc_l = 0;
    bool dc_audit = false;
    decompose->add_option("--sys", dc_sys)->required();
    decompose->add_option("--l", dc_l)->required();
    decompose->add_option("--mode", dc_mode)->check(CLI::IsMember({"guaranteed", "best_effort"}));
    decompose->add_option("-o,--out", dc_out)->required();
    decompose->add_option("--report", dc_report, "write the run report to this file");
    decompose->add_flag("--audit", dc_audit, "count all bad candidates per activation");

    // ---- hampower ----
    auto* hampower = app.add_subcommand("hampower", "bag-avoiding (l-1)-th power of a Hamiltonian cycle");
    std::string h_sys, h_out, h_mode = "best_effort", h_report;
    int h_l = 0;
    long long h_q = 0;
    bool h_audit = false;
    hampower->add_option("--sys", h_sys)->required();
    hampower->add_option("--l", h_l)->required();
    hampower->add_option("--q", h_q, "segment count parameter (defaults to m)");
    hampower->add_option("--mode", h_mode)->check(CLI::IsMember({"guaranteed", "best_effort"}));
    hampower->add_option("-o,--out", h_out)->required();
    hampower->add_option("--report", h_report);
    hampower->add_flag("--audit", h_audit);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "independent certification of an artifact");
    std::string v_sys, v_artifact, v_alpha, v_beta;
    int v_l = 0;
    long long v_q = 0;
    std::uint64_t v_audit_seed = 1;
    verify->add_option("--sys", v_sys)->required();
    verify->add_option("--artifact", v_artifact, "family or order file")->required();
    verify->add_option("--l", v_l, "window length for order artifacts (default: family's l)");
    verify->add_option("--q", v_q, "run the spanning-segment audit against this bound");
    verify->add_option("--alpha", v_alpha, "override threshold p/q for subset-level checks");
    verify->add_option("--beta", v_beta);
    verify->add_option("--audit-seed", v_audit_seed, "seed for audit sampling");

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "exhaustive search for small instances (m <= 20)");
    std::string o_sys;
    int o_l = 0, o_target = 0;
    oracle->add_option("--sys", o_sys)->required();
    oracle->add_option("--l", o_l)->required();
    oracle->add_option("--target", o_target, "number of disjoint cliques sought")->required();

    CLI11_PARSE(app, argc, argv);
    apply_threads(global.threads);

    try {
        if (*reduce) {
            const Threshold alpha = Threshold::parse(r_alpha);
            const Threshold beta = Threshold::parse(r_beta);
            KSubsetUniverse u(r_n, r_k);
            SystemFile file{build_triple_system(u, alpha, beta),
                            {{"n", r_n}, {"k", r_k}, {"alpha", alpha.str()}, {"beta", beta.str()}}};
            write_json_file(r_out, system_to_json(file));
            const auto degrees = reduction_degrees(r_n, r_k, alpha, beta);
            const auto degeneracy = reduction_degeneracies(r_n, r_k, alpha, beta);
            if (global.format == "json") {
                json j{{"m", u.subset_count()},
                       {"deg1", degrees.deg1},
                       {"deg2", degrees.deg2},
                       {"deg3", degrees.deg3},
                       {"warnings", degeneracy.warnings}};
                std::cout << canonical_dump(j);
            } else {
                std::cout << "m = " << u.subset_count() << ", deg1 = " << degrees.deg1
                          << ", deg2 = " << degrees.deg2 << ", deg3 = " << degrees.deg3 << "\n";
                for (const auto& w : degeneracy.warnings) std::cout << "warning: " << w << "\n";
            }
        } else if (*dense) {
            Graph g1 = gen_dense(d_m, d_delta, d_seed);
            SystemFile file{TripleGraphSystem(std::move(g1), Graph(d_m), Graph(d_m)),
                            {{"seed", d_seed},
                             {"params", {{"kind", "dense"}, {"m", d_m}, {"delta", d_delta}}}}};
            write_json_file(d_out, system_to_json(file));
            std::cout << "delta1 = " << file.sys.delta1() << "\n";
        } else if (*pair) {
            SystemFile in = load_system(p_sys);
            const int m = in.sys.vertex_count();
            auto [g2, g3] = gen_sparse_pair(m, p_d2, p_d3, in.sys.g1(), p_seed);
            Graph g1 = in.sys.g1();
            SystemFile file{TripleGraphSystem(std::move(g1), std::move(g2), std::move(g3)),
                            {{"seed", p_seed},
                             {"params", {{"kind", "pair"}, {"d2", p_d2}, {"d3", p_d3}}},
                             {"base", in.provenance}}};
            write_json_file(p_out, system_to_json(file));
            std::cout << "Delta2 = " << file.sys.delta2_max()
                      << ", Delta3 = " << file.sys.delta3_max() << "\n";
        } else if (*triple) {
            SystemFile file{make_synthetic_system(t_m, t_delta, t_d2, t_d3, t_seed),
                            {{"seed", t_seed},
                             {"params",
                              {{"kind", "triple"},
                               {"m", t_m},
                               {"delta", t_delta},
                               {"d2", t_d2},
                               {"d3", t_d3}}}}};
            write_json_file(t_out, system_to_json(file));
            std::cout << "delta1 = " << file.sys.delta1() << ", Delta2 = " << file.sys.delta2_max()
                      << ", Delta3 = " << file.sys.delta3_max() << "\n";
        } else if (*conditions) {
            SystemFile file = load_system(c_sys);
            auto reports = check_conditions(file.sys.vertex_count(), c_l, c_q, file.sys.delta1(),
                                            file.sys.delta2_max(), file.sys.delta3_max());
            if (auto prov = file.subset_provenance()) {
                auto subset = check_subset_conditions(prov->n, prov->k, c_l, prov->alpha, prov->beta);
                reports.insert(reports.end(), subset.begin(), subset.end());
            }
            if (global.format == "json") std::cout << canonical_dump(conditions_json(reports));
            else print_conditions_text(reports);
        } else if (*decompose) {
            SystemFile file = load_system(dc_sys);
            const RunMode mode =
                dc_mode == "guaranteed" ? RunMode::guaranteed : RunMode::best_effort;
            const BuildOptions opts{dc_audit};
            RunReport report;
            if (auto prov = file.subset_provenance()) {
                auto result = theorem2_driver(prov->n, prov->k, dc_l, Threshold(prov->alpha),
                                              Threshold(prov->beta), mode, opts);
                write_json_file(dc_out, family_to_json(result.family, &result.parts));
                report = std::move(result.report);
            } else {
                report.command = "decompose";
                report.params = {{"l", dc_l}, {"mode", dc_mode}};
                auto reports = check_conditions(file.sys.vertex_count(), dc_l, 1, file.sys.delta1(),
                                                file.sys.delta2_max(), file.sys.delta3_max());
                for (const auto& r : reports)
                    if (r.id == "2.1" || r.id == "2.2") report.conditions.push_back(r);
                if (mode == RunMode::guaranteed) require_conditions(report.conditions);
                auto family = bagfree_decomposition(file.sys, dc_l, opts, &report);
                write_json_file(dc_out, family_to_json(family));
            }
            emit_report(global, report, dc_report);
        } else if (*hampower) {
            SystemFile file = load_system(h_sys);
            const RunMode mode = h_mode == "guaranteed" ? RunMode::guaranteed : RunMode::best_effort;
            const BuildOptions opts{h_audit};
            RunReport report;
            if (auto prov = file.subset_provenance()) {
                auto result = theorem5_driver(prov->n, prov->k, h_l, Threshold(prov->alpha),
                                              Threshold(prov->beta), mode, opts);
                SubsetProvenance sp{prov->n, prov->k, prov->alpha, prov->beta};
                write_json_file(h_out, order_to_json(result.order, &result.subsets_in_order, &sp));
                report = std::move(result.report);
            } else {
                const long long q = h_q > 0 ? h_q : file.sys.vertex_count();
                report.command = "hampower";
                report.params = {{"l", h_l}, {"q", q}, {"mode", h_mode}};
                auto reports = check_conditions(file.sys.vertex_count(), h_l, q, file.sys.delta1(),
                                                file.sys.delta2_max(), file.sys.delta3_max());
                for (const auto& r : reports)
                    if (r.id == "1.1" || r.id == "1.2") report.conditions.push_back(r);
                if (mode == RunMode::guaranteed) require_conditions(report.conditions);
                auto order = bagfree_ham_power(file.sys, h_l, q, opts, &report);
                write_json_file(h_out, order_to_json(order));
            }
            emit_report(global, report, h_report);
        } else if (*verify) {
            SystemFile file = load_system(v_sys);
            const json artifact = read_json_file(v_artifact);
            json checks = json::array();
            json audits = json::object();
            bool all_ok = true;
            auto push_check = [&](const std::string& name, const std::vector<Violation>& violations) {
                json v = json::array();
                for (const auto& viol : violations) v.push_back(viol.what);
                checks.push_back({{"name", name}, {"ok", violations.empty()}, {"violations", v}});
                all_ok = all_ok && violations.empty();
            };
            auto push_bag_check = [&](const std::string& name, const std::vector<BagFound>& bags) {
                json v = json::array();
                for (const auto& b : bags)
                    v.push_back({{"pair", {b.first, b.second}},
                                 {"e2", {b.e2.first, b.e2.second}},
                                 {"e3", {b.e3.first, b.e3.second}}});
                checks.push_back({{"name", name}, {"ok", bags.empty()}, {"violations", v}});
                all_ok = all_ok && bags.empty();
            };
            auto push_audit = [&](const std::string& name, const CountAudit& audit) {
                audits[name] = {{"samples", audit.samples},
                                {"min_count", audit.min_count},
                                {"required", audit.required},
                                {"pass", audit.pass}};
            };
            std::optional<Threshold> alpha, beta;
            if (!v_alpha.empty()) alpha = Threshold::parse(v_alpha);
            if (!v_beta.empty()) beta = Threshold::parse(v_beta);
            if (auto prov = file.subset_provenance()) {
                if (!alpha) alpha = Threshold(prov->alpha);
                if (!beta) beta = Threshold(prov->beta);
            }
            std::vector<ConditionReport> condition_reports;
            if (artifact.contains("blocks")) {
                CliqueFamily family = family_from_json(artifact);
                const int l = v_l > 0 ? v_l : family.l;
                condition_reports =
                    check_conditions(file.sys.vertex_count(), l, v_q > 0 ? v_q : 1,
                                     file.sys.delta1(), file.sys.delta2_max(), file.sys.delta3_max());
                push_check("decomposition", verify_decomposition(file.sys.g1(), family, l));
                push_bag_check("bag_free",
                               scan_bags_exhaustive(family.blocks, file.sys.g2(), file.sys.g3()));
                push_audit("swap_candidates",
                           audit_swap_candidates(file.sys.g1(), family, 100, v_audit_seed));
                if (artifact.contains("parpartitions") && alpha && beta) {
                    ParpartitionFamily parts;
                    parts.n = artifact["n"].get<int>();
                    parts.k = artifact["k"].get<int>();
                    parts.l = l;
                    parts.alpha = alpha->value();
                    parts.beta = beta->value();
                    for (const auto& pj : artifact["parpartitions"]) {
                        Parpartition p;
                        for (const auto& bj : pj) p.blocks.push_back(bj.get<std::vector<int>>());
                        parts.parpartitions.push_back(std::move(p));
                    }
                    push_check("parpartition_family", verify_parpartition_family(parts));
                }
            } else if (artifact.contains("order")) {
                CyclicOrder order = order_from_json(artifact);
                if (v_l <= 0) throw std::invalid_argument("order artifacts need --l");
                condition_reports =
                    check_conditions(file.sys.vertex_count(), v_l, v_q > 0 ? v_q : 1,
                                     file.sys.delta1(), file.sys.delta2_max(), file.sys.delta3_max());
                push_check("ham_power", verify_ham_power(file.sys.g1(), order, v_l));
                push_bag_check("bag_free_windows", scan_order_bags_exhaustive(order, v_l,
                                                                              file.sys.g2(),
                                                                              file.sys.g3()));
                if (v_q > 0)
                    push_audit("spanning_segments",
                               audit_spanning_segments(file.sys.g1(), order, v_l, v_q, 50,
                                                       v_audit_seed));
                if (artifact.contains("subsets") && alpha && beta) {
                    std::vector<std::vector<int>> subsets;
                    for (const auto& sj : artifact["subsets"])
                        subsets.push_back(sj.get<std::vector<int>>());
                    push_check("subset_order", verify_subset_order(subsets, v_l, *alpha, *beta));
                }
            } else {
                throw std::invalid_argument("artifact is neither a family nor an order file");
            }
            json out{{"checks", checks},
                     {"conditions", conditions_json(condition_reports)},
                     {"audits", audits}};
            if (global.format == "json") {
                std::cout << canonical_dump(out);
            } else {
                for (const auto& c : checks) {
                    std::cout << (c["ok"].get<bool>() ? "[ ok ] " : "[FAIL] ")
                              << c["name"].get<std::string>() << "\n";
                    for (const auto& v : c["violations"])
                        std::cout << "   " << (v.is_string() ? v.get<std::string>() : v.dump())
                                  << "\n";
                }
                for (auto it = audits.begin(); it != audits.end(); ++it)
                    std::cout << "audit " << it.key() << ": min " << it.value()["min_count"]
                              << " required " << it.value()["required"]
                              << (it.value()["pass"].get<bool>() ? " (pass)" : " (FAIL)") << "\n";
            }
            return all_ok ? 0 : 1;
        } else if (*oracle) {
            SystemFile file = load_system(o_sys);
            auto result = brute_force_search(file.sys, o_l, o_target);
            if (global.format == "json") {
                json j{{"exists", result.exists}, {"witness", result.witness}};
                std::cout << canonical_dump(j);
            } else {
                std::cout << (result.exists ? "exists" : "does not exist") << "\n";
                if (result.exists)
                    for (const auto& block : result.witness) {
                        for (Vertex v : block) std::cout << v << " ";
                        std::cout << "\n";
                    }
            }
            return result.exists ? 0 : 1;
        }
    } catch (const ConditionUnmet& e) {
        return handle_condition_unmet(e, global);
    } catch (const RepairFailure& e) {
        std::cerr << "repair failure in " << e.stage << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
