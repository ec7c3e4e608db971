// verify.cpp
#include "parpart/verify.hpp"

#include "parpart/synth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace parpart {

std::vector<ConditionReport> check_conditions(long long m, int l, long long q, long long delta1,
                                              long long delta2_max, long long delta3_max) {
    if (l < 2) throw std::invalid_argument("conditions need l >= 2");
    if (q < 1) throw std::invalid_argument("conditions need q >= 1");
    std::vector<ConditionReport> out;
    const long long w = 2LL * l - 1;

    ConditionReport c11;
    c11.id = "1.1";
    c11.lhs = Rational(m * (w * w - 1) + (4LL * l - 3 + q), w * w);
    c11.rhs = Rational(delta1);
    c11.relation = "<=";
    c11.holds = c11.lhs <= c11.rhs;
    out.push_back(c11);

    ConditionReport c12;
    c12.id = "1.2";
    c12.lhs = Rational(delta2_max * delta3_max);
    c12.rhs = Rational(q - 1, 5LL * l * w);
    c12.relation = "<=";
    c12.holds = c12.lhs <= c12.rhs;
    out.push_back(c12);

    ConditionReport c21;
    c21.id = "2.1";
    c21.lhs = Rational(m * (3LL * l - 1), 3LL * l);
    c21.rhs = Rational(delta1);
    c21.relation = "<=";
    c21.holds = c21.lhs <= c21.rhs;
    out.push_back(c21);

    ConditionReport c22;
    c22.id = "2.2";
    c22.lhs = Rational(delta2_max * delta3_max);
    c22.rhs = Rational(m - 3, 15LL * l * l);
    c22.relation = "<=";
    c22.holds = c22.lhs <= c22.rhs;
    out.push_back(c22);

    return out;
}

std::vector<ConditionReport> check_subset_conditions(int n, int k, int l, const Rational& alpha,
                                                     const Rational& beta) {
    std::vector<ConditionReport> out;

    ConditionReport size;
    size.id = "k^2*l<=n/3";
    size.lhs = Rational(static_cast<long long>(k) * k * l);
    size.rhs = Rational(n, 3);
    size.relation = "<=";
    size.holds = size.lhs <= size.rhs;
    out.push_back(size);

    ConditionReport close1;
    close1.id = "alpha+beta>=1";
    close1.lhs = alpha + beta;
    close1.rhs = Rational(1);
    close1.relation = ">=";
    close1.holds = close1.lhs >= close1.rhs;
    out.push_back(close1);

    ConditionReport close2;
    close2.id = "alpha+beta>=(k+2)/k";
    close2.lhs = alpha + beta;
    close2.rhs = Rational(k + 2, k);
    close2.relation = ">=";
    close2.holds = close2.lhs >= close2.rhs;
    out.push_back(close2);

    return out;
}

void require_conditions(const std::vector<ConditionReport>& reports) {
    std::vector<ConditionReport> failed;
    std::ostringstream msg;
    for (const auto& r : reports) {
        if (r.holds) continue;
        failed.push_back(r);
        msg << (failed.size() > 1 ? "; " : "") << "condition " << r.id << " unmet: " << r.lhs.str()
            << " " << r.relation << " " << r.rhs.str() << " is false";
    }
    if (!failed.empty()) throw ConditionUnmet(msg.str(), std::move(failed));
}

namespace {

std::string describe_pair(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Definition-level bag test: all crossing (e2, e3) combinations, no shared
// code with the construction-side detector.
bool naive_bag(const std::vector<Vertex>& a, const std::vector<Vertex>& b, const Graph& g2,
               const Graph& g3, Edge* e2_out = nullptr, Edge* e3_out = nullptr) {
    for (Vertex u2 : a)
        for (Vertex v2 : b) {
            if (!g2.has_edge(u2, v2)) continue;
            for (Vertex u3 : a)
                for (Vertex v3 : b) {
                    if (u3 == u2 || v3 == v2) continue;
                    if (g3.has_edge(u3, v3)) {
                        if (e2_out) *e2_out = make_edge(u2, v2);
                        if (e3_out) *e3_out = make_edge(u3, v3);
                        return true;
                    }
                }
        }
    return false;
}

std::vector<Vertex> order_window(const CyclicOrder& order, int start, int len) {
    std::vector<Vertex> out(len);
    for (int t = 0; t < len; ++t) out[t] = order.seq[(start + t) % order.size()];
    return out;
}

bool separated(int s1, int s2, int len, int m) {
    const int d1 = ((s2 - s1) % m + m) % m;
    const int d2 = ((s1 - s2) % m + m) % m;
    return d1 >= len && d2 >= len;
}

} // namespace

std::vector<Violation> verify_decomposition(const Graph& g1, const CliqueFamily& family, int l) {
    std::vector<Violation> out;
    const int m = g1.vertex_count();
    if (family.m != m)
        out.push_back({"family.m disagrees with the graph vertex count"});
    if (family.l != l)
        out.push_back({"family.l = " + std::to_string(family.l) + ", expected " + std::to_string(l)});
    if (static_cast<int>(family.blocks.size()) != m / l)
        out.push_back({"block count " + std::to_string(family.blocks.size()) + " != floor(m/l) = " +
                       std::to_string(m / l)});
    std::vector<int> owner(m, -1);
    for (size_t b = 0; b < family.blocks.size(); ++b) {
        const auto& block = family.blocks[b];
        if (static_cast<int>(block.size()) != l) {
            out.push_back({"block " + std::to_string(b) + " has size " + std::to_string(block.size())});
            continue;
        }
        for (Vertex v : block) {
            if (v < 0 || v >= m) {
                out.push_back({"block " + std::to_string(b) + " contains out-of-range vertex " +
                               std::to_string(v)});
                continue;
            }
            if (owner[v] != -1)
                out.push_back({"vertex " + std::to_string(v) + " appears in blocks " +
                               std::to_string(owner[v]) + " and " + std::to_string(b)});
            owner[v] = static_cast<int>(b);
        }
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!g1.has_edge(block[i], block[j]))
                    out.push_back({"block " + std::to_string(b) + " misses G1 edge " +
                                   describe_pair(block[i], block[j])});
    }
    return out;
}

std::vector<Violation> verify_ham_power(const Graph& g1, const CyclicOrder& order, int l) {
    std::vector<Violation> out;
    const int m = g1.vertex_count();
    if (order.size() != m) {
        out.push_back({"order length disagrees with the graph vertex count"});
        return out;
    }
    std::vector<char> seen(m, 0);
    for (Vertex v : order.seq) {
        if (v < 0 || v >= m || seen[v]) {
            out.push_back({"order is not a permutation of the vertex set"});
            return out;
        }
        seen[v] = 1;
    }
    for (int i = 0; i < m; ++i)
        for (int d = 1; d <= l - 1; ++d) {
            const Vertex u = order.seq[i];
            const Vertex v = order.seq[(i + d) % m];
            if (!g1.has_edge(u, v))
                out.push_back({"power pair at positions (" + std::to_string(i) + ",+" +
                               std::to_string(d) + ") = " + describe_pair(u, v) + " not in G1"});
        }
    return out;
}

std::vector<BagFound> scan_bags_exhaustive(const std::vector<std::vector<Vertex>>& blocks,
                                           const Graph& g2, const Graph& g3) {
    const int n = static_cast<int>(blocks.size());
    std::vector<char> bad(static_cast<size_t>(n) * n, 0);
    std::vector<std::pair<Edge, Edge>> found(static_cast<size_t>(n) * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Edge e2, e3;
            if (naive_bag(blocks[i], blocks[j], g2, g3, &e2, &e3)) {
                bad[static_cast<size_t>(i) * n + j] = 1;
                found[static_cast<size_t>(i) * n + j] = {e2, e3};
            }
        }
    std::vector<BagFound> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bad[static_cast<size_t>(i) * n + j]) {
                const auto& [e2, e3] = found[static_cast<size_t>(i) * n + j];
                out.push_back({i, j, e2, e3});
            }
    return out;
}

std::vector<BagFound> scan_order_bags_exhaustive(const CyclicOrder& order, int l, const Graph& g2,
                                                 const Graph& g3) {
    const int m = order.size();
    std::vector<char> bad(static_cast<size_t>(m) * m, 0);
    std::vector<std::pair<Edge, Edge>> found(static_cast<size_t>(m) * m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < m; ++i) {
        const std::vector<Vertex> wi = order_window(order, i, l);
        for (int j = i + 1; j < m; ++j) {
            if (!separated(i, j, l, m)) continue;
            Edge e2, e3;
            if (naive_bag(wi, order_window(order, j, l), g2, g3, &e2, &e3)) {
                bad[static_cast<size_t>(i) * m + j] = 1;
                found[static_cast<size_t>(i) * m + j] = {e2, e3};
            }
        }
    }
    std::vector<BagFound> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (bad[static_cast<size_t>(i) * m + j]) {
                const auto& [e2, e3] = found[static_cast<size_t>(i) * m + j];
                out.push_back({i, j, e2, e3});
            }
    return out;
}

namespace {

std::string bag_text(const char* kind, const BagFound& b) {
    return std::string(kind) + " " + std::to_string(b.first) + " and " + std::to_string(b.second) +
           " form an alternating bag via e2=" + describe_pair(b.e2.first, b.e2.second) +
           " e3=" + describe_pair(b.e3.first, b.e3.second);
}

} // namespace

std::vector<Violation> verify_bag_free_family(const std::vector<std::vector<Vertex>>& blocks,
                                              const Graph& g2, const Graph& g3) {
    std::vector<Violation> out;
    for (const auto& b : scan_bags_exhaustive(blocks, g2, g3)) out.push_back({bag_text("blocks", b)});
    return out;
}

std::vector<Violation> verify_bag_free_order(const CyclicOrder& order, int l, const Graph& g2,
                                             const Graph& g3) {
    std::vector<Violation> out;
    for (const auto& b : scan_order_bags_exhaustive(order, l, g2, g3))
        out.push_back({bag_text("windows", b)});
    return out;
}

namespace {

int raw_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

} // namespace

std::vector<Violation> verify_parpartition_family(const ParpartitionFamily& family) {
    std::vector<Violation> out;
    const Threshold alpha{family.alpha};
    const Threshold beta{family.beta};

    std::map<std::vector<int>, int> first_use;
    for (size_t p = 0; p < family.parpartitions.size(); ++p) {
        const Parpartition sorted = sort_parpartition(family.parpartitions[p]);
        for (const auto& block : sorted.blocks) {
            if (static_cast<int>(block.size()) != family.k)
                out.push_back({"parpartition " + std::to_string(p) + " has a block of size " +
                               std::to_string(block.size())});
            for (int e : block)
                if (e < 0 || e >= family.n)
                    out.push_back({"parpartition " + std::to_string(p) + " has element " +
                                   std::to_string(e) + " outside [n]"});
            auto [it, fresh] = first_use.emplace(block, static_cast<int>(p));
            if (!fresh && it->second != static_cast<int>(p))
                out.push_back({"subset repeated across parpartitions " +
                               std::to_string(it->second) + " and " + std::to_string(p)});
        }
        for (size_t i = 0; i < sorted.blocks.size(); ++i)
            for (size_t j = i + 1; j < sorted.blocks.size(); ++j)
                if (raw_intersection(sorted.blocks[i], sorted.blocks[j]) > 0)
                    out.push_back({"parpartition " + std::to_string(p) + " has overlapping blocks"});
    }

    const int count = static_cast<int>(family.parpartitions.size());
    std::vector<char> close(static_cast<size_t>(count) * count, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (are_close(family.parpartitions[i], family.parpartitions[j], alpha, beta))
                close[static_cast<size_t>(i) * count + j] = 1;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (close[static_cast<size_t>(i) * count + j])
                out.push_back({"parpartitions " + std::to_string(i) + " and " + std::to_string(j) +
                               " are close"});
    return out;
}

std::vector<Violation> verify_subset_order(const std::vector<std::vector<int>>& subsets_in_order,
                                           int l, const Threshold& alpha, const Threshold& beta) {
    std::vector<Violation> out;
    const int m = static_cast<int>(subsets_in_order.size());
    if (m == 0) {
        out.push_back({"empty subset order"});
        return out;
    }
    auto window_parpartition = [&](int start) {
        Parpartition p;
        for (int t = 0; t < l; ++t) p.blocks.push_back(subsets_in_order[(start + t) % m]);
        return sort_parpartition(std::move(p));
    };
    for (int i = 0; i < m; ++i) {
        for (int s = 0; s < l; ++s)
            for (int t = s + 1; t < l; ++t) {
                const auto& a = subsets_in_order[(i + s) % m];
                const auto& b = subsets_in_order[(i + t) % m];
                std::vector<int> sa = a, sb = b;
                std::sort(sa.begin(), sa.end());
                std::sort(sb.begin(), sb.end());
                if (raw_intersection(sa, sb) > 0) {
                    out.push_back({"window " + std::to_string(i) + " has overlapping subsets at offsets " +
                                   std::to_string(s) + "," + std::to_string(t)});
                }
            }
    }
    if (!out.empty()) return out; // close-pair scan assumes well-formed windows
    std::vector<char> close(static_cast<size_t>(m) * m, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < m; ++i) {
        const Parpartition pi = window_parpartition(i);
        for (int j = i + 1; j < m; ++j) {
            if (!separated(i, j, l, m)) continue;
            if (are_close(pi, window_parpartition(j), alpha, beta))
                close[static_cast<size_t>(i) * m + j] = 1;
        }
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (close[static_cast<size_t>(i) * m + j])
                out.push_back({"windows " + std::to_string(i) + " and " + std::to_string(j) +
                               " are close"});
    return out;
}

CountAudit audit_swap_candidates(const Graph& g1, const CliqueFamily& family, int samples,
                                 std::uint64_t seed) {
    CountAudit audit;
    const int m = g1.vertex_count();
    audit.samples = samples;
    audit.required = (m + 2) / 3; // ceil(m/3)
    SplitMix64 rng(seed);
    const int blocks = static_cast<int>(family.blocks.size());
    audit.min_count = m;
    for (int s = 0; s < samples; ++s) {
        const int a1_block = static_cast<int>(rng.next_below(blocks));
        const Vertex a1 = family.blocks[a1_block][rng.next_below(family.blocks[a1_block].size())];
        long long count = 0;
        for (int b = 0; b < blocks; ++b) {
            if (b == a1_block) continue;
            bool host_ok = true;
            for (Vertex v : family.blocks[b])
                if (!g1.has_edge(a1, v)) { host_ok = false; break; }
            if (!host_ok) continue;
            for (Vertex b1 : family.blocks[b]) {
                bool adjacent_all = true;
                for (Vertex a : family.blocks[a1_block])
                    if (!g1.has_edge(a, b1)) { adjacent_all = false; break; }
                if (adjacent_all) ++count;
            }
        }
        audit.counts.push_back(count);
        audit.min_count = std::min(audit.min_count, count);
    }
    audit.pass = audit.min_count >= audit.required;
    return audit;
}

CountAudit audit_spanning_segments(const Graph& g1, const CyclicOrder& order, int l, long long q,
                                   int samples, std::uint64_t seed) {
    CountAudit audit;
    const int m = order.size();
    const int len = 2 * l - 1;
    audit.samples = samples;
    audit.required = q;
    SplitMix64 rng(seed);
    audit.min_count = m;
    for (int s = 0; s < samples; ++s) {
        const int center = static_cast<int>(rng.next_below(m));
        const int c0 = ((center - (l - 1)) % m + m) % m;
        const std::vector<Vertex> w0 = order_window(order, c0, len);
        long long count = 0;
        for (int j = 0; j < m; ++j) {
            if (!separated(c0, j, len, m)) continue;
            bool complete = true;
            for (int t = 0; t < len && complete; ++t) {
                const Vertex w = order.seq[(j + t) % m];
                for (Vertex u : w0)
                    if (!g1.has_edge(u, w)) { complete = false; break; }
            }
            if (complete) ++count;
        }
        audit.counts.push_back(count);
        audit.min_count = std::min(audit.min_count, count);
    }
    audit.pass = audit.min_count >= audit.required;
    return audit;
}

namespace {

struct OracleSearch {
    const Graph& g1;
    const Graph& g2;
    const Graph& g3;
    int l;
    int target;
    int m;
    std::vector<char> used;
    std::vector<std::vector<Vertex>> chosen;

    bool extend_clique(std::vector<Vertex>& block, Vertex min_next) {
        if (static_cast<int>(block.size()) == l) {
            for (const auto& prior : chosen)
                if (naive_bag(prior, block, g2, g3)) return false;
            chosen.push_back(block);
            if (search()) return true;
            chosen.pop_back();
            return false;
        }
        for (Vertex v = min_next; v < m; ++v) {
            if (used[v]) continue;
            bool adjacent_all = true;
            for (Vertex u : block)
                if (!g1.has_edge(u, v)) { adjacent_all = false; break; }
            if (!adjacent_all) continue;
            used[v] = 1;
            block.push_back(v);
            if (extend_clique(block, v + 1)) return true;
            block.pop_back();
            used[v] = 0;
        }
        return false;
    }

    bool search() {
        if (static_cast<int>(chosen.size()) == target) return true;
        Vertex v = 0;
        while (v < m && used[v]) ++v;
        if (v == m) return false;
        const int unused = m - static_cast<int>(std::count(used.begin(), used.end(), 1));
        if (unused < (target - static_cast<int>(chosen.size())) * l) return false;
        // either open a block whose least member is v ...
        used[v] = 1;
        std::vector<Vertex> block{v};
        if (extend_clique(block, v + 1)) return true;
        // ... or leave v unused for good (it stays marked, in no block)
        const bool found = search();
        used[v] = 0;
        return found;
    }
};

} // namespace

OracleResult brute_force_search(const TripleGraphSystem& sys, int l, int target_count) {
    const int m = sys.vertex_count();
    if (m > 20) throw std::domain_error("brute_force_search is capped at m <= 20");
    if (l < 2) throw std::invalid_argument("oracle needs l >= 2");
    if (target_count < 0 || static_cast<long long>(target_count) * l > m)
        return {false, {}};
    OracleSearch s{sys.g1(), sys.g2(), sys.g3(), l, target_count, m,
                   std::vector<char>(m, 0), {}};
    OracleResult result;
    result.exists = s.search();
    if (result.exists) result.witness = s.chosen;
    return result;
}

} // namespace parpart
