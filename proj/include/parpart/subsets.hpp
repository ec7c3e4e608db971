// subsets.hpp - k-subset universe, subset-graph reduction, closeness oracle
#pragma once

#include "graph.hpp"
#include "rational.hpp"
#include "types.hpp"

#include <optional>
#include <vector>

namespace parpart {

// Bijection between vertex ids and k-subsets of [n] in colexicographic
// order. The ordering is a file-format contract: id 0 is {0,..,k-1}.
class KSubsetUniverse {
public:
    KSubsetUniverse(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    long long subset_count() const { return count_; }
    long long choose(int a, int b) const;

    long long rank(const std::vector<int>& subset) const;
    std::vector<int> unrank(long long id) const;

private:
    int n_ = 0;
    int k_ = 0;
    long long count_ = 0;
    std::vector<std::vector<long long>> choose_; // choose_[a][b] = C(a,b), b <= k
};

// Exact closed-form degrees of the reduction graphs:
//   deg1 = C(n-k, k)
//   deg2 = sum over integers 1 <= i < (1-alpha)k of C(k,i) * C(n-k,i)
//   deg3 = the same sum with beta.
struct ReductionDegrees {
    long long deg1 = 0;
    long long deg2 = 0;
    long long deg3 = 0;
};
ReductionDegrees reduction_degrees(int n, int k, const Threshold& alpha, const Threshold& beta);

// Vertices are the C(n,k) k-subsets of [n]; for ids u != v with subsets A,B:
//   (u,v) in E1 iff A and B are disjoint,
//   (u,v) in E2 iff |A cap B| > alpha*k (exact),
//   (u,v) in E3 iff |A cap B| > beta*k.
// E1 is automatically disjoint from E2 and E3. k > n/2 leaves E1 empty;
// builders report that as a warning, not an error.
TripleGraphSystem build_triple_system(const KSubsetUniverse& u, const Threshold& alpha,
                                      const Threshold& beta);
// Serial reference used by tests and the benchmark; identical output.
TripleGraphSystem build_triple_system_serial(const KSubsetUniverse& u, const Threshold& alpha,
                                             const Threshold& beta);

struct DegeneracyInfo {
    bool e1_empty = false;
    bool g2_empty = false;
    bool g3_empty = false;
    std::vector<std::string> warnings;
};
DegeneracyInfo reduction_degeneracies(int n, int k, const Threshold& alpha, const Threshold& beta);

// Witness for closeness: blocks A1 != B1 of P1 and A2 != B2 of P2 with
// |A1 cap A2| > alpha*k and |B1 cap B2| > beta*k.
struct CloseWitness {
    int a1_index = -1;
    int b1_index = -1;
    int a2_index = -1;
    int b2_index = -1;
};

bool are_close(const Parpartition& p1, const Parpartition& p2, const Threshold& alpha,
               const Threshold& beta, CloseWitness* witness = nullptr);

Parpartition sort_parpartition(Parpartition p);

// The clique/window -> parpartition mappings check every block against g1
// before unranking; a non-clique input raises IntegrityError.
ParpartitionFamily family_to_parpartitions(const KSubsetUniverse& u, const CliqueFamily& family,
                                           const Graph& g1, const Threshold& alpha,
                                           const Threshold& beta);
Parpartition window_to_parpartition(const KSubsetUniverse& u, const CyclicOrder& order, int start,
                                    int l, const Graph& g1);

} // namespace parpart
