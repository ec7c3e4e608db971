// subsets.cpp
#include "parpart/subsets.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace parpart {

KSubsetUniverse::KSubsetUniverse(int n, int k) : n_(n), k_(k) {
    if (k < 1 || k >= n) throw std::invalid_argument("k-subset universe needs 1 <= k < n");
    choose_.assign(n + 1, std::vector<long long>(k + 1, 0));
    for (int a = 0; a <= n; ++a) {
        choose_[a][0] = 1;
        for (int b = 1; b <= std::min(a, k); ++b)
            choose_[a][b] = choose_[a - 1][b - 1] + (a - 1 >= b ? choose_[a - 1][b] : 0);
    }
    count_ = choose_[n][k];
}

long long KSubsetUniverse::choose(int a, int b) const {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > k_) throw std::invalid_argument("choose table only covers b <= k");
    return choose_[a][b];
}

long long KSubsetUniverse::rank(const std::vector<int>& subset) const {
    if (static_cast<int>(subset.size()) != k_)
        throw std::invalid_argument("subset has wrong size");
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    long long id = 0;
    for (int i = 0; i < k_; ++i) {
        if (s[i] < 0 || s[i] >= n_) throw std::out_of_range("subset element out of [n]");
        if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("subset has repeated element");
        id += choose(s[i], i + 1);
    }
    return id;
}

std::vector<int> KSubsetUniverse::unrank(long long id) const {
    if (id < 0 || id >= count_) throw std::out_of_range("subset id out of range");
    std::vector<int> s(k_);
    long long rem = id;
    int c = n_ - 1;
    for (int i = k_; i >= 1; --i) {
        while (choose(c, i) > rem) --c;
        s[i - 1] = c;
        rem -= choose(c, i);
        --c;
    }
    return s;
}

ReductionDegrees reduction_degrees(int n, int k, const Threshold& alpha, const Threshold& beta) {
    KSubsetUniverse u(n, k);
    ReductionDegrees d;
    d.deg1 = (n - k >= k) ? u.choose(n - k, k) : 0;
    auto overlap_sum = [&](const Threshold& t) {
        // integers i with 1 <= i < (1-t)k, i.e. i*den < (den-num)*k
        long long out = 0;
        for (int i = 1; i <= k; ++i) {
            if (!(static_cast<long long>(i) * t.value().den() <
                  (t.value().den() - t.value().num()) * static_cast<long long>(k)))
                break;
            out += u.choose(k, i) * u.choose(n - k, i);
        }
        return out;
    };
    d.deg2 = overlap_sum(alpha);
    d.deg3 = overlap_sum(beta);
    return d;
}

DegeneracyInfo reduction_degeneracies(int n, int k, const Threshold& alpha, const Threshold& beta) {
    DegeneracyInfo info;
    ReductionDegrees d = reduction_degrees(n, k, alpha, beta);
    if (d.deg1 == 0) {
        info.e1_empty = true;
        info.warnings.push_back("G1 is empty (k > n/2): no disjoint k-subset pairs exist");
    }
    if (d.deg2 == 0) {
        info.g2_empty = true;
        info.warnings.push_back("G2 is empty: no pair of distinct k-subsets exceeds alpha*k overlap");
    }
    if (d.deg3 == 0) {
        info.g3_empty = true;
        info.warnings.push_back("G3 is empty: no pair of distinct k-subsets exceeds beta*k overlap");
    }
    return info;
}

namespace {

std::vector<std::uint64_t> subset_masks(const KSubsetUniverse& u) {
    if (u.n() > 63) throw std::invalid_argument("triple-system construction supports n <= 63");
    if (u.subset_count() > kMaxVertices)
        throw std::invalid_argument("C(n,k) exceeds the vertex cap");
    const int m = static_cast<int>(u.subset_count());
    std::vector<std::uint64_t> masks(m, 0);
    for (int id = 0; id < m; ++id) {
        std::uint64_t mask = 0;
        for (int e : u.unrank(id)) mask |= std::uint64_t{1} << e;
        masks[id] = mask;
    }
    return masks;
}

// Fill one adjacency row of all three graphs; rows are independent, which
// makes the parallel build race-free and bit-identical to the serial one.
void fill_rows(const std::vector<std::uint64_t>& masks, int k, const Threshold& alpha,
               const Threshold& beta, Graph& g1, Graph& g2, Graph& g3, int u, int v) {
    const int inter = std::popcount(masks[u] & masks[v]);
    if (inter == 0) g1.add_edge(u, v);
    if (inter < k) { // u != v as subsets
        if (alpha.exceeded_by(inter, k)) g2.add_edge(u, v);
        if (beta.exceeded_by(inter, k)) g3.add_edge(u, v);
    }
}

} // namespace

TripleGraphSystem build_triple_system_serial(const KSubsetUniverse& u, const Threshold& alpha,
                                             const Threshold& beta) {
    const std::vector<std::uint64_t> masks = subset_masks(u);
    const int m = static_cast<int>(masks.size());
    Graph g1(m), g2(m), g3(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            fill_rows(masks, u.k(), alpha, beta, g1, g2, g3, a, b);
    return TripleGraphSystem(std::move(g1), std::move(g2), std::move(g3));
}

TripleGraphSystem build_triple_system(const KSubsetUniverse& u, const Threshold& alpha,
                                      const Threshold& beta) {
    const std::vector<std::uint64_t> masks = subset_masks(u);
    const int m = static_cast<int>(masks.size());
    const int k = u.k();
    // Adjacency rows as raw bit rows per graph, one owner thread per row.
    const int words = (m + 63) / 64;
    std::vector<std::uint64_t> rows1(static_cast<size_t>(m) * words, 0);
    std::vector<std::uint64_t> rows2(static_cast<size_t>(m) * words, 0);
    std::vector<std::uint64_t> rows3(static_cast<size_t>(m) * words, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int a = 0; a < m; ++a) {
        std::uint64_t* r1 = rows1.data() + static_cast<size_t>(a) * words;
        std::uint64_t* r2 = rows2.data() + static_cast<size_t>(a) * words;
        std::uint64_t* r3 = rows3.data() + static_cast<size_t>(a) * words;
        for (int b = 0; b < m; ++b) {
            if (b == a) continue;
            const int inter = std::popcount(masks[a] & masks[b]);
            const std::uint64_t bit = std::uint64_t{1} << (b & 63);
            if (inter == 0) r1[b >> 6] |= bit;
            else if (inter < k) {
                if (alpha.exceeded_by(inter, k)) r2[b >> 6] |= bit;
                if (beta.exceeded_by(inter, k)) r3[b >> 6] |= bit;
            }
        }
    }
    auto to_graph = [&](const std::vector<std::uint64_t>& rows) {
        Graph g(m);
        for (int a = 0; a < m; ++a) {
            const std::uint64_t* r = rows.data() + static_cast<size_t>(a) * words;
            for (int w = a >> 6; w < words; ++w) {
                std::uint64_t word = r[w];
                if (w == (a >> 6)) word &= ~((std::uint64_t{2} << (a & 63)) - 1);
                while (word) {
                    int bit = __builtin_ctzll(word);
                    word &= word - 1;
                    g.add_edge(a, (w << 6) + bit);
                }
            }
        }
        return g;
    };
    return TripleGraphSystem(to_graph(rows1), to_graph(rows2), to_graph(rows3));
}

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    // both sorted
    int i = 0, j = 0, count = 0;
    while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

} // namespace

Parpartition sort_parpartition(Parpartition p) {
    for (auto& block : p.blocks) std::sort(block.begin(), block.end());
    std::sort(p.blocks.begin(), p.blocks.end());
    return p;
}

bool are_close(const Parpartition& p1, const Parpartition& p2, const Threshold& alpha,
               const Threshold& beta, CloseWitness* witness) {
    if (p1.block_count() < 2 || p2.block_count() < 2)
        throw std::domain_error("closeness needs two distinct sets per parpartition");
    const Parpartition q1 = sort_parpartition(p1);
    const Parpartition q2 = sort_parpartition(p2);
    const int k = static_cast<int>(q1.blocks.front().size());
    for (const auto& b : q1.blocks)
        if (static_cast<int>(b.size()) != k) throw std::invalid_argument("ragged parpartition");
    for (const auto& b : q2.blocks)
        if (static_cast<int>(b.size()) != k) throw std::invalid_argument("parpartitions disagree on k");
    for (int a1 = 0; a1 < q1.block_count(); ++a1)
        for (int b1 = 0; b1 < q1.block_count(); ++b1) {
            if (a1 == b1) continue;
            for (int a2 = 0; a2 < q2.block_count(); ++a2) {
                if (!alpha.exceeded_by(intersection_size(q1.blocks[a1], q2.blocks[a2]), k))
                    continue;
                for (int b2 = 0; b2 < q2.block_count(); ++b2) {
                    if (a2 == b2) continue;
                    if (beta.exceeded_by(intersection_size(q1.blocks[b1], q2.blocks[b2]), k)) {
                        if (witness) *witness = {a1, b1, a2, b2};
                        return true;
                    }
                }
            }
        }
    return false;
}

ParpartitionFamily family_to_parpartitions(const KSubsetUniverse& u, const CliqueFamily& family,
                                           const Graph& g1, const Threshold& alpha,
                                           const Threshold& beta) {
    ParpartitionFamily out;
    out.n = u.n();
    out.k = u.k();
    out.l = family.l;
    out.alpha = alpha.value();
    out.beta = beta.value();
    out.parpartitions.reserve(family.blocks.size());
    for (const auto& block : family.blocks) {
        if (!is_clique(g1, block))
            throw IntegrityError("block is not a G1 clique; refusing to emit a parpartition");
        Parpartition p;
        for (Vertex v : block) p.blocks.push_back(u.unrank(v));
        out.parpartitions.push_back(sort_parpartition(std::move(p)));
    }
    return out;
}

Parpartition window_to_parpartition(const KSubsetUniverse& u, const CyclicOrder& order, int start,
                                    int l, const Graph& g1) {
    const int m = order.size();
    if (m == 0 || l < 1 || l > m) throw std::invalid_argument("bad window length");
    std::vector<Vertex> block;
    for (int t = 0; t < l; ++t) block.push_back(order.seq[(start + t) % m]);
    if (!is_clique(g1, block))
        throw IntegrityError("window is not a G1 clique; refusing to emit a parpartition");
    Parpartition p;
    for (Vertex v : block) p.blocks.push_back(u.unrank(v));
    return sort_parpartition(std::move(p));
}

} // namespace parpart
