// synth.cpp
#include "parpart/synth.hpp"

#include <algorithm>
#include <numeric>

namespace parpart {

namespace {

void shuffle_in_place(std::vector<int>& values, SplitMix64& rng) {
    for (size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[rng.next_below(i)]);
}

} // namespace

Graph gen_dense(int m, int delta_target, SplitMix64& rng) {
    if (m < 1) throw std::invalid_argument("gen_dense needs m >= 1");
    if (delta_target > m - 1) throw std::invalid_argument("degree floor above m-1");
    std::vector<Edge> all;
    all.reserve(static_cast<size_t>(m) * (m - 1) / 2);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) all.emplace_back(u, v);
    std::vector<int> perm(all.size());
    std::iota(perm.begin(), perm.end(), 0);
    shuffle_in_place(perm, rng);

    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    for (int idx : perm) {
        const auto& [u, v] = all[idx];
        if (g.degree(u) > delta_target && g.degree(v) > delta_target) g.remove_edge(u, v);
    }
    return g;
}

Graph gen_dense(int m, int delta_target, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return gen_dense(m, delta_target, rng);
}

namespace {

Graph gen_bounded_degree(int m, int delta_target, const Graph& forbidden, SplitMix64& rng) {
    Graph g(m);
    if (delta_target == 0) return g;
    std::vector<int> visit(m);
    std::iota(visit.begin(), visit.end(), 0);
    shuffle_in_place(visit, rng);
    std::vector<Vertex> candidates;
    for (int u : visit) {
        while (g.degree(u) < delta_target) {
            candidates.clear();
            for (int v = 0; v < m; ++v) {
                if (v == u || g.degree(v) >= delta_target) continue;
                if (forbidden.has_edge(u, v) || g.has_edge(u, v)) continue;
                candidates.push_back(v);
            }
            if (candidates.empty()) break;
            g.add_edge(u, candidates[rng.next_below(candidates.size())]);
        }
    }
    if (max_degree(g) < delta_target)
        throw InsufficientRoom("the complement of the forbidden graph cannot host max degree " +
                               std::to_string(delta_target));
    return g;
}

} // namespace

std::pair<Graph, Graph> gen_sparse_pair(int m, int delta2_target, int delta3_target,
                                        const Graph& forbidden, SplitMix64& rng) {
    if (forbidden.vertex_count() != m)
        throw std::invalid_argument("forbidden graph has a different vertex count");
    if (delta2_target < 0 || delta3_target < 0)
        throw std::invalid_argument("negative degree target");
    Graph g2 = gen_bounded_degree(m, delta2_target, forbidden, rng);
    Graph g3 = gen_bounded_degree(m, delta3_target, forbidden, rng);
    return {std::move(g2), std::move(g3)};
}

std::pair<Graph, Graph> gen_sparse_pair(int m, int delta2_target, int delta3_target,
                                        const Graph& forbidden, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return gen_sparse_pair(m, delta2_target, delta3_target, forbidden, rng);
}

TripleGraphSystem make_synthetic_system(int m, int delta1_target, int delta2_target,
                                        int delta3_target, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Graph g1 = gen_dense(m, delta1_target, rng);
    auto [g2, g3] = gen_sparse_pair(m, delta2_target, delta3_target, g1, rng);
    return TripleGraphSystem(std::move(g1), std::move(g2), std::move(g3));
}

} // namespace parpart
