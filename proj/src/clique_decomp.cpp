// clique_decomp.cpp
#include "parpart/clique_decomp.hpp"

#include "parpart/bags.hpp"
#include "parpart/verify.hpp"

#include <algorithm>
#include <optional>

namespace parpart {

CliqueFamily initial_decomposition(int m, int l) {
    if (l < 2) throw std::domain_error("decomposition needs l >= 2");
    if (m < l) throw std::domain_error("decomposition needs m >= l");
    CliqueFamily family;
    family.m = m;
    family.l = l;
    family.blocks.reserve(m / l);
    for (int b = 0; b + l <= m; b += l) {
        std::vector<Vertex> block(l);
        for (int t = 0; t < l; ++t) block[t] = b + t;
        family.blocks.push_back(std::move(block));
    }
    return family;
}

namespace {

int count_block_defects(const Graph& g1, const std::vector<Vertex>& block) {
    int defects = 0;
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j)
            if (!g1.has_edge(block[i], block[j])) ++defects;
    return defects;
}

// First missing pair by (min id, max id); blocks are kept sorted.
std::optional<std::pair<Vertex, Vertex>> first_defect_pair(const Graph& g1,
                                                           const std::vector<Vertex>& block) {
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j)
            if (!g1.has_edge(block[i], block[j])) return std::make_pair(block[i], block[j]);
    return std::nullopt;
}

// Shared candidate enumeration; host_ok[b] marks admissible donor blocks.
std::vector<SwapCandidate> candidates_impl(const Graph& g1, const CliqueFamily& family,
                                           int a1_block, Vertex a1,
                                           const std::vector<char>& host_ok) {
    const auto a1_mask = g1.make_mask(family.blocks[a1_block]);
    std::vector<SwapCandidate> out;
    for (size_t b = 0; b < family.blocks.size(); ++b) {
        if (static_cast<int>(b) == a1_block || !host_ok[b]) continue;
        // condition (2): a1 adjacent to every vertex of the donor block
        const auto host_mask = g1.make_mask(family.blocks[b]);
        if (!g1.adjacent_to_all(a1, host_mask)) continue;
        // condition (1): b1 adjacent to every vertex of A1
        for (Vertex b1 : family.blocks[b])
            if (g1.adjacent_to_all(b1, a1_mask)) out.push_back({b1, static_cast<int>(b)});
    }
    std::sort(out.begin(), out.end(),
              [](const SwapCandidate& x, const SwapCandidate& y) { return x.b1 < y.b1; });
    return out;
}

void apply_swap(CliqueFamily& family, int a1_block, Vertex a1, const SwapCandidate& c) {
    auto& ablk = family.blocks[a1_block];
    auto& bblk = family.blocks[c.host_block];
    *std::find(ablk.begin(), ablk.end(), a1) = c.b1;
    *std::find(bblk.begin(), bblk.end(), c.b1) = a1;
    std::sort(ablk.begin(), ablk.end());
    std::sort(bblk.begin(), bblk.end());
}

} // namespace

std::vector<SwapCandidate> find_swap_candidates(const Graph& g1, const CliqueFamily& family,
                                                int a1_block, Vertex a1) {
    if (a1_block < 0 || a1_block >= static_cast<int>(family.blocks.size()))
        throw std::out_of_range("block index out of range");
    const auto& block = family.blocks[a1_block];
    if (std::find(block.begin(), block.end(), a1) == block.end())
        throw std::invalid_argument("a1 is not a member of the named block");
    std::vector<char> host_ok(family.blocks.size());
    for (size_t b = 0; b < family.blocks.size(); ++b)
        host_ok[b] = count_block_defects(g1, family.blocks[b]) == 0;
    return candidates_impl(g1, family, a1_block, a1, host_ok);
}

CliqueFamily repair_decomposition(const Graph& g1, CliqueFamily family, RunReport* report) {
    if (family.m != g1.vertex_count())
        throw std::invalid_argument("family and graph disagree on m");
    const int blocks = static_cast<int>(family.blocks.size());
    std::vector<int> defects(blocks);
    long long total_defects = 0;
    for (int b = 0; b < blocks; ++b) {
        defects[b] = count_block_defects(g1, family.blocks[b]);
        total_defects += defects[b];
    }
    std::vector<char> host_ok(blocks);

    while (total_defects > 0) {
        int a1_block = 0;
        while (defects[a1_block] == 0) ++a1_block;
        const auto pair = first_defect_pair(g1, family.blocks[a1_block]);
        const Defect defect{a1_block, pair->first, pair->second};

        for (int b = 0; b < blocks; ++b) host_ok[b] = defects[b] == 0;
        const std::vector<char> any_host(blocks, 1);

        // Defect-free donors first. When none qualifies (dense defect
        // patterns can leave the restricted pool empty), any donor block
        // works: condition (2) turns every new donor pair into a real edge,
        // and the departing b1 can only lower the donor's defect count.
        bool swapped = false;
        for (const std::vector<char>* hosts :
             {static_cast<const std::vector<char>*>(&host_ok), &any_host}) {
            for (Vertex endpoint : {defect.a1, defect.a2}) {
                const auto cands = candidates_impl(g1, family, a1_block, endpoint, *hosts);
                if (cands.empty()) continue;
                const SwapCandidate& chosen = cands.front();
                apply_swap(family, a1_block, endpoint, chosen);
                const long long before = defects[a1_block] + defects[chosen.host_block];
                defects[a1_block] = count_block_defects(g1, family.blocks[a1_block]);
                defects[chosen.host_block] =
                    count_block_defects(g1, family.blocks[chosen.host_block]);
                const long long after = defects[a1_block] + defects[chosen.host_block];
                if (after >= before)
                    throw BagCheckFailure("defect count failed to decrease after a swap");
                total_defects += after - before;
                if (report) {
                    report->defects_processed += 1;
                    report->repair_swaps += 1;
                }
                swapped = true;
                break;
            }
            if (swapped) break;
        }
        if (!swapped)
            throw RepairFailure("repair_decomposition", defect, 0,
                                "no swap candidate for defect (" + std::to_string(defect.a1) + "," +
                                    std::to_string(defect.a2) + ") in block " +
                                    std::to_string(a1_block));
    }
    std::sort(family.blocks.begin(), family.blocks.end()); // canonical file order
    return family;
}

namespace {

// Would activating `edge` with endpoint a1 swapped for candidate c leave a
// bag anywhere? Only block pairs touching the two rewritten blocks can
// change, so only those are scanned; the swap is simulated in place.
bool candidate_is_bad(const TripleGraphSystem& sys, Graph& g3_active, CliqueFamily& family,
                      int a1_block, Vertex a1, const SwapCandidate& c, const Edge& edge) {
    apply_swap(family, a1_block, a1, c);
    g3_active.add_edge(edge.first, edge.second);
    bool bad = false;
    const int blocks = static_cast<int>(family.blocks.size());
    for (int other = 0; other < blocks && !bad; ++other) {
        if (other != a1_block &&
            forms_bag(family.blocks[a1_block], family.blocks[other], sys.g2(), g3_active))
            bad = true;
        if (!bad && other != c.host_block && other != a1_block &&
            forms_bag(family.blocks[c.host_block], family.blocks[other], sys.g2(), g3_active))
            bad = true;
    }
    g3_active.remove_edge(edge.first, edge.second);
    apply_swap(family, a1_block, c.b1, SwapCandidate{a1, c.host_block}); // undo
    return bad;
}

} // namespace

CliqueFamily bagfree_decomposition(const TripleGraphSystem& sys, int l, const BuildOptions& opts,
                                   RunReport* report) {
    const int m = sys.vertex_count();
    CliqueFamily family = repair_decomposition(sys.g1(), initial_decomposition(m, l), report);

    std::vector<int> block_of(m, -1);
    for (size_t b = 0; b < family.blocks.size(); ++b)
        for (Vertex v : family.blocks[b]) block_of[v] = static_cast<int>(b);

    std::vector<char> host_ok(family.blocks.size(), 1); // all blocks are cliques now

    Graph g3_active(m);
    for (const Edge& edge : sys.g3().edge_list()) {
        if (report) report->activations += 1;
        const int ba = block_of[edge.first];
        const int bb = block_of[edge.second];
        bool conflict = false;
        if (ba >= 0 && bb >= 0 && ba != bb) {
            g3_active.add_edge(edge.first, edge.second);
            conflict = forms_bag(family.blocks[ba], family.blocks[bb], sys.g2(), g3_active)
                           .has_value();
            g3_active.remove_edge(edge.first, edge.second);
        }
        if (conflict) {
            if (report) report->conflicted_activations += 1;
            bool resolved = false;
            for (Vertex endpoint : {edge.first, edge.second}) {
                const int a1_block = block_of[endpoint];
                const auto cands = candidates_impl(sys.g1(), family, a1_block, endpoint, host_ok);
                int rejected = 0;
                int bad_total = 0;
                std::optional<SwapCandidate> chosen;
                for (const auto& c : cands) {
                    if (candidate_is_bad(sys, g3_active, family, a1_block, endpoint, c, edge)) {
                        if (!chosen) ++rejected;
                        ++bad_total;
                        continue;
                    }
                    if (!chosen) {
                        chosen = c;
                        if (!opts.audit) break;
                    }
                }
                if (report) {
                    ActivationRecord rec;
                    rec.edge = edge;
                    rec.swapped_endpoint = chosen ? endpoint : -1;
                    rec.rejected = rejected;
                    rec.bad_total = opts.audit ? bad_total : -1;
                    report->activation_records.push_back(rec);
                }
                if (!chosen) continue;
                apply_swap(family, a1_block, endpoint, *chosen);
                block_of[endpoint] = chosen->host_block;
                block_of[chosen->b1] = a1_block;
                if (report) report->activation_swaps += 1;
                resolved = true;
                break;
            }
            if (!resolved)
                throw RepairFailure("bagfree_decomposition",
                                    Defect{block_of[edge.first], edge.first, edge.second}, 0,
                                    "no bag-avoiding swap candidate while activating edge (" +
                                        std::to_string(edge.first) + "," +
                                        std::to_string(edge.second) + ")");
        }
        g3_active.add_edge(edge.first, edge.second);
    }

    if (!family_bag_scan(family.blocks, sys.g2(), sys.g3()).empty())
        throw BagCheckFailure("post-construction bag scan found a violation");
    std::sort(family.blocks.begin(), family.blocks.end());
    return family;
}

Theorem2Result theorem2_driver(int n, int k, int l, const Threshold& alpha, const Threshold& beta,
                               RunMode mode, const BuildOptions& opts) {
    Theorem2Result result;
    result.report.command = "theorem2";
    result.report.params = {{"n", n},          {"k", k},
                            {"l", l},          {"alpha", alpha.str()},
                            {"beta", beta.str()}, {"mode", to_string(mode)}};

    const KSubsetUniverse universe(n, k);
    const ReductionDegrees degrees = reduction_degrees(n, k, alpha, beta);
    const DegeneracyInfo degeneracy = reduction_degeneracies(n, k, alpha, beta);
    result.report.warnings = degeneracy.warnings;

    auto conditions = check_conditions(universe.subset_count(), l, 1, degrees.deg1, degrees.deg2,
                                       degrees.deg3);
    auto subset_conditions =
        check_subset_conditions(n, k, l, alpha.value(), beta.value());
    for (const auto& c : conditions)
        if (c.id == "2.1" || c.id == "2.2") result.report.conditions.push_back(c);
    for (const auto& c : subset_conditions) result.report.conditions.push_back(c);

    if (mode == RunMode::guaranteed) {
        std::vector<ConditionReport> gate;
        for (const auto& c : result.report.conditions)
            if (c.id == "2.1" || c.id == "2.2" || c.id == "k^2*l<=n/3") gate.push_back(c);
        require_conditions(gate);
    }

    const TripleGraphSystem sys = build_triple_system(universe, alpha, beta);
    result.family = bagfree_decomposition(sys, l, opts, &result.report);
    result.parts = family_to_parpartitions(universe, result.family, sys.g1(), alpha, beta);

    // Both theorem properties are re-verified at the subset level; the
    // construction never self-certifies.
    const auto violations = verify_parpartition_family(result.parts);
    if (!violations.empty())
        throw BagCheckFailure("subset-level verification failed: " + violations.front().what);
    result.report.verification.push_back("parpartition_family: no repeated subset, no close pair");
    return result;
}

} // namespace parpart
