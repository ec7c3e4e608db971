// clique_decomp.hpp - almost-l-decomposition by defect repair, made bag-free
// under incremental E3 insertion
#pragma once

#include "graph.hpp"
#include "report.hpp"
#include "subsets.hpp"
#include "types.hpp"

#include <vector>

namespace parpart {

// Consecutive id blocks [0..l), [l..2l), ...; floor(m/l) blocks, the last
// m mod l vertices left unassigned.
CliqueFamily initial_decomposition(int m, int l);

// Swap candidates for defect endpoint a1 in block A1: vertices b1 assigned
// to a defect-free block B1 != A1 with (a,b1) in E1 for all a in A1 and
// (a1,b) in E1 for all b in B1, sorted by vertex id. Unassigned leftover
// vertices never qualify.
std::vector<SwapCandidate> find_swap_candidates(const Graph& g1, const CliqueFamily& family,
                                                int a1_block, Vertex a1);

// Process defects in lexicographic (block, pair) order, swapping the smaller
// endpoint with the least-id candidate (retrying the larger endpoint before
// failing). The defect count strictly decreases every iteration.
CliqueFamily repair_decomposition(const Graph& g1, CliqueFamily family,
                                  RunReport* report = nullptr);

struct BuildOptions {
    bool audit = false; // evaluate badness of every candidate, not just up to the first good one
};

// repair_decomposition, then activate E3 edges one at a time from an empty
// set in canonical order; before an activation that would create a bag,
// swap the edge's endpoint with a candidate that stays bag-free.
CliqueFamily bagfree_decomposition(const TripleGraphSystem& sys, int l,
                                   const BuildOptions& opts = {}, RunReport* report = nullptr);

struct Theorem2Result {
    CliqueFamily family;
    ParpartitionFamily parts;
    RunReport report;
};

// End-to-end driver over the subset reduction: build G1/G2/G3 from
// (n,k,alpha,beta), run bagfree_decomposition, map blocks to parpartitions,
// and re-verify both output properties at the subset level.
Theorem2Result theorem2_driver(int n, int k, int l, const Threshold& alpha, const Threshold& beta,
                               RunMode mode, const BuildOptions& opts = {});

} // namespace parpart
