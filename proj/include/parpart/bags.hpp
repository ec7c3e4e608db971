// bags.hpp - alternating-(l,2,l,2)-bag detection and colored witness paths
//
// Everything here is the three-graph bag: two disjoint K_l copies in G1
// joined by a G2 edge and a G3 edge that share no endpoint. The two-graph
// variant (both crossing edges drawn from one graph) is not implemented;
// with G2 = G3 the three-graph form subsumes it.
#pragma once

#include "graph.hpp"
#include "types.hpp"

#include <array>
#include <optional>
#include <vector>

namespace parpart {

// Two disjoint K_l copies joined by vertex-disjoint crossing edges e2 (G2)
// and e3 (G3). Edges are stored A-side first.
struct BagWitness {
    Edge e2; // (vertex in A, vertex in B)
    Edge e3;
};

// Returns the lexicographically least witness over (e2, e3), ordered by
// (e2.A, e2.B, e3.A, e3.B), or nullopt when the pair forms no bag. A and B
// must be disjoint; clique-ness in G1 is the caller's responsibility.
std::optional<BagWitness> forms_bag(const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                                    const Graph& g2, const Graph& g3);

struct BagViolation {
    int first = -1;  // pair indices (block index or window start)
    int second = -1;
    BagWitness witness;
};

// Exhaustive scan over all pairs of blocks; empty output certifies
// bag-freeness. Blocks must be pairwise vertex-disjoint.
std::vector<BagViolation> family_bag_scan(const std::vector<std::vector<Vertex>>& blocks,
                                          const Graph& g2, const Graph& g3);
std::vector<BagViolation> family_bag_scan_serial(const std::vector<std::vector<Vertex>>& blocks,
                                                 const Graph& g2, const Graph& g3);

// Scan over the m length-l windows of a cyclic order (the m K_l copies of
// the (l-1)-th power). Only disjoint window pairs (cyclic separation >= l in
// both directions) are scanned.
std::vector<BagViolation> window_bag_scan(const CyclicOrder& order, int l, const Graph& g2,
                                          const Graph& g3);
std::vector<BagViolation> window_bag_scan_serial(const CyclicOrder& order, int l, const Graph& g2,
                                                 const Graph& g3);

// 4-vertex witness paths (x0,x1,x2,x3) with the middle edge red (a certified
// clique edge, supplied via red_edges) and the outer edges colored per the
// pattern: blue = G3, green = G2.
enum class PathPattern { blue_red_green, green_red_blue };

struct ColoredPath {
    std::array<Vertex, 4> v{};
    PathPattern pattern = PathPattern::blue_red_green;
};

// All paths with x0 = a1, (x0,x1) in the first color, (x1,x2) in red_edges,
// (x2,x3) in the last color, x3 restricted to targets, vertices distinct.
std::vector<ColoredPath> enumerate_witness_paths(Vertex a1, const std::vector<Vertex>& targets,
                                                 const Graph& red_edges, const Graph& g2,
                                                 const Graph& g3, PathPattern pattern);

} // namespace parpart
