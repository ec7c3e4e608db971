// verify.hpp - independent brute-force certification, exact condition checks,
// counting-bound audits, and a small-instance backtracking oracle
#pragma once

#include "graph.hpp"
#include "rational.hpp"
#include "subsets.hpp"
#include "types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parpart {

// One evaluated inequality with both sides exact. `holds` follows the
// condition's own direction (stored in `relation` for reporting).
struct ConditionReport {
    std::string id;       // "1.1", "2.2", "k^2*l<=n/3", ...
    Rational lhs;
    Rational rhs;
    std::string relation; // "<=" or ">="
    bool holds = false;
};

// The four numbered degree conditions:
//   (1.1)  m*((2l-1)^2-1)/(2l-1)^2 + (4l-3+q)/(2l-1)^2  <=  delta1
//   (1.2)  Delta2*Delta3  <=  (q-1) / (5l(2l-1))
//   (2.1)  m*(3l-1)/(3l)  <=  delta1
//   (2.2)  Delta2*Delta3  <=  (m-3) / (15 l^2)
std::vector<ConditionReport> check_conditions(long long m, int l, long long q, long long delta1,
                                              long long delta2_max, long long delta3_max);

// Subset-parameter hypotheses: k^2*l <= n/3, alpha+beta >= 1,
// alpha+beta >= (k+2)/k.
std::vector<ConditionReport> check_subset_conditions(int n, int k, int l, const Rational& alpha,
                                                     const Rational& beta);

struct ConditionUnmet : std::runtime_error {
    ConditionUnmet(std::string what_, std::vector<ConditionReport> failed_)
        : std::runtime_error(std::move(what_)), failed(std::move(failed_)) {}
    std::vector<ConditionReport> failed;
};

// Throws ConditionUnmet listing every report that does not hold.
void require_conditions(const std::vector<ConditionReport>& reports);

// Everything below reimplements its checks from the definitions (plain
// double loops over adjacency); the construction modules' fast paths are
// deliberately not reused, so outputs are never self-certified.

struct Violation {
    std::string what;
};

std::vector<Violation> verify_decomposition(const Graph& g1, const CliqueFamily& family, int l);
std::vector<Violation> verify_ham_power(const Graph& g1, const CyclicOrder& order, int l);

// A bag found by the exhaustive scan, with the first crossing edge pair the
// nested definition loops hit as witness.
struct BagFound {
    int first = -1;  // block index or window start
    int second = -1;
    Edge e2;
    Edge e3;
};

// Exhaustive bag scans from the definition: all block pairs (or all disjoint
// window pairs), all crossing (e2, e3) combinations.
std::vector<BagFound> scan_bags_exhaustive(const std::vector<std::vector<Vertex>>& blocks,
                                           const Graph& g2, const Graph& g3);
std::vector<BagFound> scan_order_bags_exhaustive(const CyclicOrder& order, int l, const Graph& g2,
                                                 const Graph& g3);

std::vector<Violation> verify_bag_free_family(const std::vector<std::vector<Vertex>>& blocks,
                                              const Graph& g2, const Graph& g3);
std::vector<Violation> verify_bag_free_order(const CyclicOrder& order, int l, const Graph& g2,
                                             const Graph& g3);

// Subset-level checks only; never trusts the graph reduction.
// Property (1): no k-subset appears in two parpartitions.
// Property (2): no two parpartitions are (alpha,beta)-close.
std::vector<Violation> verify_parpartition_family(const ParpartitionFamily& family);

// For a cyclic ordering of all k-subsets: every l-window is pairwise
// disjoint, and no two disjoint windows are (alpha,beta)-close.
std::vector<Violation> verify_subset_order(const std::vector<std::vector<int>>& subsets_in_order,
                                           int l, const Threshold& alpha, const Threshold& beta);

// Counting-bound audits against the proofs' guarantees.
struct CountAudit {
    long long samples = 0;
    long long min_count = 0;       // smallest candidate/segment count seen
    long long required = 0;        // the bound the proof promises
    bool pass = false;
    std::vector<long long> counts; // per sample, in draw order
};

// Swap-candidate counts for seeded (block, vertex) queries; the proof
// promises at least ceil(m/3) when condition (2.1) holds.
CountAudit audit_swap_candidates(const Graph& g1, const CliqueFamily& family, int samples,
                                 std::uint64_t seed);

// Spanning-segment counts for seeded window centers; the proof promises at
// least q when condition (1.1) holds.
CountAudit audit_spanning_segments(const Graph& g1, const CyclicOrder& order, int l, long long q,
                                   int samples, std::uint64_t seed);

// Exhaustive backtracking oracle: does g1 admit `target_count` pairwise
// vertex-disjoint l-cliques with an empty bag scan? Hard-capped at m <= 20.
struct OracleResult {
    bool exists = false;
    std::vector<std::vector<Vertex>> witness;
};
OracleResult brute_force_search(const TripleGraphSystem& sys, int l, int target_count);

} // namespace parpart
