// graph.cpp
#include "parpart/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace parpart {

Graph::Graph(int m) : m_(m) {
    if (m < 0) throw std::invalid_argument("negative vertex count");
    if (m > kMaxVertices) throw std::invalid_argument("vertex count exceeds kMaxVertices");
    words_ = (m + 63) / 64;
    bits_.assign(static_cast<size_t>(m) * words_, 0);
    degree_.assign(m, 0);
}

Graph Graph::from_edges(int m, const std::vector<Edge>& edges) {
    Graph g(m);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    if (has_edge(u, v)) return;
    mutable_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    mutable_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
    ++degree_[u];
    ++degree_[v];
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !has_edge(u, v)) return;
    mutable_row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    mutable_row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    --degree_[u];
    --degree_[v];
    --edge_count_;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(edge_count_));
    for (Vertex u = 0; u < m_; ++u) {
        const std::uint64_t* r = row(u);
        for (int w = u >> 6; w < words_; ++w) {
            std::uint64_t word = r[w];
            if (w == (u >> 6)) word &= ~((std::uint64_t{2} << (u & 63)) - 1); // keep v > u
            while (word) {
                int b = __builtin_ctzll(word);
                word &= word - 1;
                edges.emplace_back(u, (w << 6) + b);
            }
        }
    }
    return edges;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    out.reserve(degree_[v]);
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
            int b = __builtin_ctzll(word);
            word &= word - 1;
            out.push_back((w << 6) + b);
        }
    }
    return out;
}

bool Graph::adjacent_to_all(Vertex v, const std::vector<std::uint64_t>& mask) const {
    check_vertex(v);
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w)
        if (mask[w] & ~r[w]) return false;
    return true;
}

std::vector<std::uint64_t> Graph::make_mask(const std::vector<Vertex>& vertices) const {
    std::vector<std::uint64_t> mask(words_, 0);
    for (Vertex v : vertices) {
        check_vertex(v);
        mask[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    return mask;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::domain_error("min_degree of empty graph");
    int best = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::domain_error("max_degree of empty graph");
    int best = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<Vertex> set = s;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (!g.has_edge(set[i], set[j])) return false;
    if (!set.empty()) {
        // range errors surface even for singletons
        (void)g.degree(set.front());
        (void)g.degree(set.back());
    }
    return true;
}

TripleGraphSystem::TripleGraphSystem(Graph g1, Graph g2, Graph g3)
    : g1_(std::move(g1)), g2_(std::move(g2)), g3_(std::move(g3)) {
    if (g1_.vertex_count() != g2_.vertex_count() || g1_.vertex_count() != g3_.vertex_count())
        throw std::invalid_argument("triple system graphs must share one vertex set");
    refresh_degree_cache();
}

void TripleGraphSystem::refresh_degree_cache() {
    const int m = g1_.vertex_count();
    delta1_ = m == 0 ? 0 : min_degree(g1_);
    delta2_max_ = m == 0 ? 0 : max_degree(g2_);
    delta3_max_ = m == 0 ? 0 : max_degree(g3_);
}

std::vector<DisjointnessViolation> assert_triple_disjointness(const TripleGraphSystem& sys) {
    std::vector<DisjointnessViolation> out;
    for (const Edge& e : sys.g1().edge_list()) {
        if (sys.g2().has_edge(e.first, e.second)) out.push_back({e, 2});
        if (sys.g3().has_edge(e.first, e.second)) out.push_back({e, 3});
    }
    return out;
}

} // namespace parpart
