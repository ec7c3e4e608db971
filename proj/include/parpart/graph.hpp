// graph.hpp - bitset-backed simple graphs and the shared three-graph container
#pragma once

#include "types.hpp"

#include <cstdint>
#include <vector>

namespace parpart {

// Memory guard for the m x m adjacency bitsets; everything this project
// runs on is far below it.
inline constexpr int kMaxVertices = 20000;

// Simple undirected graph on dense vertex ids 0..m-1. Adjacency is stored
// as one bitset row per vertex, so the repair loops' "is b1 adjacent to all
// of A?" queries become word-parallel subset tests. Immutable after
// construction except through add_edge/remove_edge; all reads are safe for
// concurrent use.
class Graph {
public:
    explicit Graph(int m);
    static Graph from_edges(int m, const std::vector<Edge>& edges);

    int vertex_count() const { return m_; }
    long long edge_count() const { return edge_count_; }
    int degree(Vertex v) const { check_vertex(v); return degree_[v]; }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    // Canonically sorted (u<v) edge list.
    std::vector<Edge> edge_list() const;
    std::vector<Vertex> neighbors(Vertex v) const;

    int words() const { return words_; }
    const std::uint64_t* row(Vertex v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

    // mask must have words() entries; true iff every vertex in mask is adjacent to v.
    bool adjacent_to_all(Vertex v, const std::vector<std::uint64_t>& mask) const;

    std::vector<std::uint64_t> make_mask(const std::vector<Vertex>& vertices) const;

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= m_) throw std::out_of_range("vertex id out of range");
    }
    std::uint64_t* mutable_row(Vertex v) { return bits_.data() + static_cast<size_t>(v) * words_; }

    int m_ = 0;
    int words_ = 0;
    long long edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_;
};

int min_degree(const Graph& g);
int max_degree(const Graph& g);

// True iff all pairs of distinct vertices in s are adjacent. s is treated
// as a set; duplicates collapse.
bool is_clique(const Graph& g, const std::vector<Vertex>& s);

// Three simple graphs on one vertex set with E1 disjoint from E2 and E3
// (E2 and E3 may overlap). Degree summaries are cached at construction.
class TripleGraphSystem {
public:
    TripleGraphSystem(Graph g1, Graph g2, Graph g3);

    const Graph& g1() const { return g1_; }
    const Graph& g2() const { return g2_; }
    const Graph& g3() const { return g3_; }
    int vertex_count() const { return g1_.vertex_count(); }

    int delta1() const { return delta1_; }
    int delta2_max() const { return delta2_max_; }
    int delta3_max() const { return delta3_max_; }

    // Recompute the cached degree summaries after mutating a member graph.
    void refresh_degree_cache();

private:
    Graph g1_;
    Graph g2_;
    Graph g3_;
    int delta1_ = 0;
    int delta2_max_ = 0;
    int delta3_max_ = 0;
};

struct DisjointnessViolation {
    Edge edge;
    int other_graph = 0; // 2 or 3: the graph sharing the edge with g1
};

// Empty iff E1 is disjoint from both E2 and E3 (report-style, never throws).
std::vector<DisjointnessViolation> assert_triple_disjointness(const TripleGraphSystem& sys);

} // namespace parpart
