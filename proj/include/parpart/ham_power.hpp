// ham_power.hpp - (l-1)-th powers of Hamiltonian cycles by segment
// rearrangement, made bag-free under incremental E3 insertion via center swaps
#pragma once

#include "clique_decomp.hpp" // BuildOptions
#include "graph.hpp"
#include "report.hpp"
#include "subsets.hpp"
#include "types.hpp"

#include <vector>

namespace parpart {

// The 2p vertices within cycle distance p of v. 1 <= p <= (m-1)/2.
std::vector<Vertex> power_neighbors(const CyclicOrder& order, int p, Vertex v);

// All pairs at cycle distance d in [1, p] missing from g1, in canonical
// (position, distance) order.
std::vector<PowerDefect> power_defects(const CyclicOrder& order, const Graph& g1, int p);

// Length-(2l-1) windows disjoint from c0 whose vertex sets span a complete
// bipartite graph with c0 in g1; start positions scanned in increasing
// order, stopping at `limit` results.
std::vector<SegmentWindow> find_spanning_segments(const Graph& g1, const CyclicOrder& order,
                                                  const SegmentWindow& c0, int limit);

// Repair the (l-1)-th power: for each missing pair, rearrange the cycle so
// the 2l-2 positions around the defect trade places with a fully-joined
// disjoint window. The set of in-power missing pairs strictly shrinks.
CyclicOrder repair_ham_power(const Graph& g1, CyclicOrder order, int l,
                             RunReport* report = nullptr);

// Exchange the center vertices of two disjoint, completely E1-joined
// (2l-1)-windows; rechecks the precondition and keeps the power intact.
CyclicOrder swap_centers(const CyclicOrder& order, int a1_pos, int c_pos, int l, const Graph& g1);

// repair_ham_power, then activate E3 edges one at a time from an empty set;
// before an activation that would create a bag between disjoint l-windows,
// swap the endpoint with a non-bad spanning-segment center.
CyclicOrder bagfree_ham_power(const TripleGraphSystem& sys, int l, long long q,
                              const BuildOptions& opts = {}, RunReport* report = nullptr);

struct Theorem5Result {
    CyclicOrder order;
    std::vector<std::vector<int>> subsets_in_order;
    RunReport report;
};

// End-to-end driver: the cyclic ordering of all k-subsets of [n] whose
// l-windows are parpartitions and whose disjoint windows are never
// (alpha,beta)-close. Requires alpha + beta >= 1; guaranteed mode checks
// conditions (1.1)/(1.2) with q = m.
Theorem5Result theorem5_driver(int n, int k, int l, const Threshold& alpha, const Threshold& beta,
                               RunMode mode, const BuildOptions& opts = {});

} // namespace parpart
