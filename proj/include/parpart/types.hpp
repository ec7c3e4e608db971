// types.hpp - shared domain types for decompositions, cyclic orders, parpartitions
#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parpart {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>; // canonical (min,max)

inline Edge make_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("self-loop edge");
    return u < v ? Edge{u, v} : Edge{v, u};
}

enum class RunMode { guaranteed, best_effort };

inline std::string to_string(RunMode m) {
    return m == RunMode::guaranteed ? "guaranteed" : "best_effort";
}

// A family of pairwise vertex-disjoint l-vertex blocks, each intended as a
// K_l copy in G1 once repair completes. Blocks and members are kept sorted.
struct CliqueFamily {
    int m = 0;
    int l = 0;
    std::vector<std::vector<Vertex>> blocks;
};

// A cyclic permutation of all m vertices plus its inverse. The (l-1)-th
// power is always derived from positions, never stored.
struct CyclicOrder {
    std::vector<Vertex> seq; // seq[i] = vertex at position i
    std::vector<int> pos;    // pos[v] = position of vertex v

    static CyclicOrder identity(int m) {
        CyclicOrder o;
        o.seq.resize(m);
        o.pos.resize(m);
        for (int i = 0; i < m; ++i) { o.seq[i] = i; o.pos[i] = i; }
        return o;
    }

    static CyclicOrder from_sequence(std::vector<Vertex> s) {
        CyclicOrder o;
        o.pos.assign(s.size(), -1);
        for (size_t i = 0; i < s.size(); ++i) {
            Vertex v = s[i];
            if (v < 0 || v >= static_cast<int>(s.size()) || o.pos[v] != -1)
                throw std::invalid_argument("sequence is not a permutation of [m]");
            o.pos[v] = static_cast<int>(i);
        }
        o.seq = std::move(s);
        return o;
    }

    int size() const { return static_cast<int>(seq.size()); }
};

// r consecutive positions starting at start, indices mod m.
struct SegmentWindow {
    int start = 0;
    int length = 0;
};

// A family of l pairwise-disjoint k-subsets of [n]; its union may be a
// proper subset of [n]. Blocks are sorted sets of sorted elements.
struct Parpartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

struct ParpartitionFamily {
    int n = 0;
    int k = 0;
    int l = 0;
    Rational alpha;
    Rational beta;
    std::vector<Parpartition> parpartitions;
};

// A pair inside a block that must be a G1 edge but is not.
struct Defect {
    int block_index = -1;
    Vertex a1 = -1; // smaller id
    Vertex a2 = -1;
};

// A vertex b1 outside the defective block that can replace the defect
// endpoint: b1 is adjacent to all of A1 and a1 is adjacent to all of b1's
// host block.
struct SwapCandidate {
    Vertex b1 = -1;
    int host_block = -1;
};

// A pair at cycle distance d in [1, l-1] missing from G1.
struct PowerDefect {
    int position = 0; // position of the earlier endpoint
    int distance = 0;
    Vertex u = -1;
    Vertex v = -1;
};

struct RepairFailure : std::runtime_error {
    RepairFailure(std::string stage_, Defect defect_, int candidates_found_,
                  const std::string& what_)
        : std::runtime_error(what_), stage(std::move(stage_)), defect(defect_),
          candidates_found(candidates_found_) {}
    std::string stage;
    Defect defect;
    int candidates_found = 0;
};

// Internal bug guard: a construction claimed success but the post-scan found
// a violation.
struct BagCheckFailure : std::logic_error {
    using std::logic_error::logic_error;
};

struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace parpart
