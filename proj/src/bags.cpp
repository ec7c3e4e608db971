// bags.cpp
#include "parpart/bags.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parpart {

namespace {

// Crossing edges (u in A, v in B) of g, in lexicographic (u,v) order.
void collect_crossings(const std::vector<Vertex>& a, const std::vector<Vertex>& b, const Graph& g,
                       std::vector<Edge>& out) {
    out.clear();
    for (Vertex u : a)
        for (Vertex v : b)
            if (g.has_edge(u, v)) out.emplace_back(u, v);
}

} // namespace

std::optional<BagWitness> forms_bag(const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                                    const Graph& g2, const Graph& g3) {
    std::vector<Vertex> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    for (Vertex u : sa)
        if (std::binary_search(sb.begin(), sb.end(), u))
            throw std::domain_error("bag test requires disjoint vertex sets");

    std::vector<Edge> cross2, cross3;
    collect_crossings(sa, sb, g2, cross2);
    if (cross2.empty()) return std::nullopt;
    collect_crossings(sa, sb, g3, cross3);
    if (cross3.empty()) return std::nullopt;

    for (const Edge& e2 : cross2)
        for (const Edge& e3 : cross3)
            if (e3.first != e2.first && e3.second != e2.second)
                return BagWitness{e2, e3};
    return std::nullopt;
}

std::vector<BagViolation> family_bag_scan_serial(const std::vector<std::vector<Vertex>>& blocks,
                                                 const Graph& g2, const Graph& g3) {
    std::vector<BagViolation> out;
    const int n = static_cast<int>(blocks.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (auto w = forms_bag(blocks[i], blocks[j], g2, g3))
                out.push_back({i, j, *w});
    return out;
}

std::vector<BagViolation> family_bag_scan(const std::vector<std::vector<Vertex>>& blocks,
                                          const Graph& g2, const Graph& g3) {
    const int n = static_cast<int>(blocks.size());
    std::vector<std::pair<int, int>> index; // p -> (i,j), i < j
    index.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) index.emplace_back(i, j);
    const int pairs = static_cast<int>(index.size());
    std::vector<char> hit(pairs, 0);
    std::vector<BagWitness> witnesses(pairs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (int p = 0; p < pairs; ++p) {
        auto w = forms_bag(blocks[index[p].first], blocks[index[p].second], g2, g3);
        if (w) { hit[p] = 1; witnesses[p] = *w; }
    }
    std::vector<BagViolation> out;
    for (int p = 0; p < pairs; ++p)
        if (hit[p]) out.push_back({index[p].first, index[p].second, witnesses[p]});
    return out;
}

namespace {

std::vector<Vertex> window_vertices(const CyclicOrder& order, int start, int len) {
    const int m = order.size();
    std::vector<Vertex> out(len);
    for (int t = 0; t < len; ++t) out[t] = order.seq[(start + t) % m];
    return out;
}

bool windows_disjoint(int s1, int s2, int len, int m) {
    const int d1 = ((s2 - s1) % m + m) % m;
    const int d2 = ((s1 - s2) % m + m) % m;
    return d1 >= len && d2 >= len;
}

} // namespace

std::vector<BagViolation> window_bag_scan_serial(const CyclicOrder& order, int l, const Graph& g2,
                                                 const Graph& g3) {
    const int m = order.size();
    std::vector<BagViolation> out;
    for (int i = 0; i < m; ++i) {
        const std::vector<Vertex> wi = window_vertices(order, i, l);
        for (int j = i + 1; j < m; ++j) {
            if (!windows_disjoint(i, j, l, m)) continue;
            if (auto w = forms_bag(wi, window_vertices(order, j, l), g2, g3))
                out.push_back({i, j, *w});
        }
    }
    return out;
}

std::vector<BagViolation> window_bag_scan(const CyclicOrder& order, int l, const Graph& g2,
                                          const Graph& g3) {
    const int m = order.size();
    std::vector<char> hit(static_cast<size_t>(m) * m, 0);
    std::vector<BagWitness> witnesses(static_cast<size_t>(m) * m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < m; ++i) {
        const std::vector<Vertex> wi = window_vertices(order, i, l);
        for (int j = i + 1; j < m; ++j) {
            if (!windows_disjoint(i, j, l, m)) continue;
            if (auto w = forms_bag(wi, window_vertices(order, j, l), g2, g3)) {
                hit[static_cast<size_t>(i) * m + j] = 1;
                witnesses[static_cast<size_t>(i) * m + j] = *w;
            }
        }
    }
    std::vector<BagViolation> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (hit[static_cast<size_t>(i) * m + j])
                out.push_back({i, j, witnesses[static_cast<size_t>(i) * m + j]});
    return out;
}

std::vector<ColoredPath> enumerate_witness_paths(Vertex a1, const std::vector<Vertex>& targets,
                                                 const Graph& red_edges, const Graph& g2,
                                                 const Graph& g3, PathPattern pattern) {
    const Graph& first = pattern == PathPattern::blue_red_green ? g3 : g2;
    const Graph& last = pattern == PathPattern::blue_red_green ? g2 : g3;
    std::vector<char> is_target(red_edges.vertex_count(), 0);
    for (Vertex t : targets) is_target.at(t) = 1;
    std::vector<ColoredPath> out;
    for (Vertex x1 : first.neighbors(a1)) {
        if (x1 == a1) continue;
        for (Vertex x2 : red_edges.neighbors(x1)) {
            if (x2 == a1 || x2 == x1) continue;
            for (Vertex x3 : last.neighbors(x2)) {
                if (x3 == a1 || x3 == x1 || x3 == x2) continue;
                if (!is_target[x3]) continue;
                out.push_back({{a1, x1, x2, x3}, pattern});
            }
        }
    }
    return out;
}

} // namespace parpart
