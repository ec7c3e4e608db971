// ham_power.cpp
#include "parpart/ham_power.hpp"

#include "parpart/bags.hpp"
#include "parpart/verify.hpp"

#include <algorithm>
#include <optional>

namespace parpart {

namespace {

int mod(int a, int m) { return (a % m + m) % m; }

bool windows_disjoint(int s1, int len1, int s2, int len2, int m) {
    // [s1, s1+len1) and [s2, s2+len2) mod m share no position
    const int d12 = mod(s2 - s1, m);
    const int d21 = mod(s1 - s2, m);
    return d12 >= len1 && d21 >= len2;
}

std::vector<Vertex> window_vertices(const CyclicOrder& order, int start, int len) {
    const int m = order.size();
    std::vector<Vertex> out(len);
    for (int t = 0; t < len; ++t) out[t] = order.seq[mod(start + t, m)];
    return out;
}

} // namespace

std::vector<Vertex> power_neighbors(const CyclicOrder& order, int p, Vertex v) {
    const int m = order.size();
    if (p < 1 || 2 * p > m - 1) throw std::domain_error("power needs 1 <= p <= (m-1)/2");
    if (v < 0 || v >= m) throw std::out_of_range("vertex out of range");
    std::vector<Vertex> out;
    out.reserve(2 * p);
    const int i = order.pos[v];
    for (int d = 1; d <= p; ++d) {
        out.push_back(order.seq[mod(i - d, m)]);
        out.push_back(order.seq[mod(i + d, m)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PowerDefect> power_defects(const CyclicOrder& order, const Graph& g1, int p) {
    const int m = order.size();
    if (p < 1 || 2 * p > m - 1) throw std::domain_error("power needs 1 <= p <= (m-1)/2");
    if (g1.vertex_count() != m) throw std::invalid_argument("order and graph disagree on m");
    std::vector<PowerDefect> out;
    for (int i = 0; i < m; ++i)
        for (int d = 1; d <= p; ++d) {
            const Vertex u = order.seq[i];
            const Vertex v = order.seq[mod(i + d, m)];
            if (!g1.has_edge(u, v)) out.push_back({i, d, u, v});
        }
    return out;
}

std::vector<SegmentWindow> find_spanning_segments(const Graph& g1, const CyclicOrder& order,
                                                  const SegmentWindow& c0, int limit) {
    const int m = order.size();
    if (4 * ((c0.length + 1) / 2) - 3 > m)
        throw std::invalid_argument("graph too small for disjoint spanning windows");
    const auto c0_mask = g1.make_mask(window_vertices(order, c0.start, c0.length));
    std::vector<SegmentWindow> out;
    for (int j = 0; j < m && static_cast<int>(out.size()) < limit; ++j) {
        if (!windows_disjoint(c0.start, c0.length, j, c0.length, m)) continue;
        bool complete = true;
        for (int t = 0; t < c0.length; ++t)
            if (!g1.adjacent_to_all(order.seq[mod(j + t, m)], c0_mask)) {
                complete = false;
                break;
            }
        if (complete) out.push_back({j, c0.length});
    }
    return out;
}

namespace {

// Completeness of S x W in g1 for two arbitrary equal-length windows.
bool windows_span_complete(const Graph& g1, const CyclicOrder& order, int s_start, int w_start,
                           int len) {
    const auto s_mask = g1.make_mask(window_vertices(order, s_start, len));
    const int m = order.size();
    for (int t = 0; t < len; ++t)
        if (!g1.adjacent_to_all(order.seq[mod(w_start + t, m)], s_mask)) return false;
    return true;
}

// The rearranged cycle: forward from position i+1 to j+l-2, then backward
// from i down to j'-l+2 where j' = j+2l-3. All pairs newly within power
// distance lie in S x W*, which the caller guarantees is complete in g1.
CyclicOrder rewrite_cycle(const CyclicOrder& order, int i, int j, int l) {
    const int m = order.size();
    std::vector<Vertex> seq;
    seq.reserve(m);
    const int fwd = mod(j + l - 2 - i, m); // number of forward steps
    for (int t = 0; t < fwd; ++t) seq.push_back(order.seq[mod(i + 1 + t, m)]);
    for (int t = 0; t < m - fwd; ++t) seq.push_back(order.seq[mod(i - t, m)]);
    return CyclicOrder::from_sequence(std::move(seq));
}

} // namespace

CyclicOrder repair_ham_power(const Graph& g1, CyclicOrder order, int l, RunReport* report) {
    const int m = order.size();
    if (l < 2) throw std::domain_error("power repair needs l >= 2");
    if (m < 4 * l) throw std::domain_error("power repair needs m >= 4l");
    if (g1.vertex_count() != m) throw std::invalid_argument("order and graph disagree on m");
    const int p = l - 1;
    const int seg = 2 * l - 2;

    auto defect_pairs = [&](const CyclicOrder& o) {
        std::vector<Edge> pairs;
        for (const auto& d : power_defects(o, g1, p)) pairs.push_back(make_edge(d.u, d.v));
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    };

    std::vector<Edge> previous = defect_pairs(order);
    while (true) {
        const auto defects = power_defects(order, g1, p);
        if (defects.empty()) break;
        const PowerDefect& defect = defects.front();
        const int i = defect.position;
        const int s_start = mod(i - l + 2, m);

        // Widen S by one position to a (2l-1)-window and search through the
        // spanning-segment machinery first; fall back to a direct scan for a
        // (2l-2)-window fully joined to S, which is all the rewrite needs.
        std::optional<int> w_start;
        const auto widened = find_spanning_segments(g1, order, {s_start, 2 * l - 1}, 1);
        if (!widened.empty()) {
            w_start = widened.front().start;
        } else {
            for (int j = 0; j < m; ++j) {
                if (!windows_disjoint(s_start, seg, j, seg, m)) continue;
                if (windows_span_complete(g1, order, s_start, j, seg)) {
                    w_start = j;
                    break;
                }
            }
        }
        if (!w_start)
            throw RepairFailure("repair_ham_power", Defect{-1, defect.u, defect.v}, 0,
                                "no spanning window for the power defect at position " +
                                    std::to_string(i) + " distance " +
                                    std::to_string(defect.distance));

        order = rewrite_cycle(order, i, *w_start, l);
        const std::vector<Edge> current = defect_pairs(order);
        if (current.size() >= previous.size() ||
            !std::includes(previous.begin(), previous.end(), current.begin(), current.end()))
            throw BagCheckFailure("rearrangement failed to shrink the missing-pair set");
        previous = std::move(current);
        if (report) {
            report->rearrangements += 1;
            report->defects_processed += 1;
        }
    }
    return order;
}

CyclicOrder swap_centers(const CyclicOrder& order, int a1_pos, int c_pos, int l, const Graph& g1) {
    const int m = order.size();
    if (a1_pos < 0 || a1_pos >= m || c_pos < 0 || c_pos >= m)
        throw std::out_of_range("position out of range");
    CyclicOrder out = order;
    if (a1_pos == c_pos) return out;
    const int len = 2 * l - 1;
    const int s1 = mod(a1_pos - (l - 1), m);
    const int s2 = mod(c_pos - (l - 1), m);
    if (!windows_disjoint(s1, len, s2, len, m))
        throw std::domain_error("center windows overlap");
    if (!windows_span_complete(g1, order, s1, s2, len))
        throw std::domain_error("center windows are not completely joined in G1");
    const Vertex a = out.seq[a1_pos];
    const Vertex c = out.seq[c_pos];
    out.seq[a1_pos] = c;
    out.seq[c_pos] = a;
    out.pos[a] = c_pos;
    out.pos[c] = a1_pos;
    return out;
}

namespace {

// Bag between any pair of disjoint l-windows where the first window covers
// one of the given positions; used to re-scan exactly the windows whose
// contents an endpoint swap changed.
bool any_bag_touching_positions(const CyclicOrder& order, int l, const Graph& g2,
                                const Graph& g3_active, const std::vector<int>& positions) {
    const int m = order.size();
    std::vector<char> starts(m, 0);
    for (int p : positions)
        for (int t = 0; t < l; ++t) starts[mod(p - t, m)] = 1;
    for (int s1 = 0; s1 < m; ++s1) {
        if (!starts[s1]) continue;
        const auto w1 = window_vertices(order, s1, l);
        for (int s2 = 0; s2 < m; ++s2) {
            if (!windows_disjoint(s1, l, s2, l, m)) continue;
            if (forms_bag(w1, window_vertices(order, s2, l), g2, g3_active)) return true;
        }
    }
    return false;
}

bool center_is_bad(const TripleGraphSystem& sys, Graph& g3_active, CyclicOrder& order, int l,
                   int a1_pos, int c_pos, const Edge& edge) {
    const Vertex a = order.seq[a1_pos];
    const Vertex c = order.seq[c_pos];
    order.seq[a1_pos] = c;
    order.seq[c_pos] = a;
    order.pos[a] = c_pos;
    order.pos[c] = a1_pos;
    g3_active.add_edge(edge.first, edge.second);
    const bool bad =
        any_bag_touching_positions(order, l, sys.g2(), g3_active, {a1_pos, c_pos});
    g3_active.remove_edge(edge.first, edge.second);
    order.seq[a1_pos] = a;
    order.seq[c_pos] = c;
    order.pos[a] = a1_pos;
    order.pos[c] = c_pos;
    return bad;
}

} // namespace

CyclicOrder bagfree_ham_power(const TripleGraphSystem& sys, int l, long long q,
                              const BuildOptions& opts, RunReport* report) {
    if (q < 1) throw std::invalid_argument("bagfree_ham_power needs q >= 1");
    const int m = sys.vertex_count();
    CyclicOrder order = repair_ham_power(sys.g1(), CyclicOrder::identity(m), l, report);

    Graph g3_active(m);
    for (const Edge& edge : sys.g3().edge_list()) {
        if (report) report->activations += 1;
        // a new bag must use this edge, so only window pairs holding its
        // endpoints can newly conflict
        bool conflict = false;
        {
            g3_active.add_edge(edge.first, edge.second);
            const int px = order.pos[edge.first];
            const int py = order.pos[edge.second];
            for (int sx = 0; sx < l && !conflict; ++sx) {
                const int s1 = mod(px - sx, m);
                const auto w1 = window_vertices(order, s1, l);
                for (int sy = 0; sy < l && !conflict; ++sy) {
                    const int s2 = mod(py - sy, m);
                    if (!windows_disjoint(s1, l, s2, l, m)) continue;
                    if (forms_bag(w1, window_vertices(order, s2, l), sys.g2(), g3_active))
                        conflict = true;
                }
            }
            g3_active.remove_edge(edge.first, edge.second);
        }
        if (conflict) {
            if (report) report->conflicted_activations += 1;
            bool resolved = false;
            for (Vertex endpoint : {edge.first, edge.second}) {
                const int a1_pos = order.pos[endpoint];
                const SegmentWindow c1{mod(a1_pos - (l - 1), m), 2 * l - 1};
                const auto segments = find_spanning_segments(sys.g1(), order, c1, m);
                int rejected = 0;
                int bad_total = 0;
                std::optional<int> chosen_pos;
                for (const auto& seg : segments) {
                    const int c_pos = mod(seg.start + l - 1, m);
                    if (center_is_bad(sys, g3_active, order, l, a1_pos, c_pos, edge)) {
                        if (!chosen_pos) ++rejected;
                        ++bad_total;
                        continue;
                    }
                    if (!chosen_pos) {
                        chosen_pos = c_pos;
                        if (!opts.audit) break;
                    }
                }
                if (report) {
                    ActivationRecord rec;
                    rec.edge = edge;
                    rec.swapped_endpoint = chosen_pos ? endpoint : -1;
                    rec.rejected = rejected;
                    rec.bad_total = opts.audit ? bad_total : -1;
                    report->activation_records.push_back(rec);
                }
                if (!chosen_pos) continue;
                order = swap_centers(order, a1_pos, *chosen_pos, l, sys.g1());
                if (report) report->activation_swaps += 1;
                resolved = true;
                break;
            }
            if (!resolved)
                throw RepairFailure("bagfree_ham_power", Defect{-1, edge.first, edge.second}, 0,
                                    "no bag-avoiding center while activating edge (" +
                                        std::to_string(edge.first) + "," +
                                        std::to_string(edge.second) + ")");
        }
        g3_active.add_edge(edge.first, edge.second);
    }

    if (!window_bag_scan(order, l, sys.g2(), sys.g3()).empty())
        throw BagCheckFailure("post-construction window bag scan found a violation");
    return order;
}

Theorem5Result theorem5_driver(int n, int k, int l, const Threshold& alpha, const Threshold& beta,
                               RunMode mode, const BuildOptions& opts) {
    Theorem5Result result;
    result.report.command = "theorem5";
    result.report.params = {{"n", n},          {"k", k},
                            {"l", l},          {"alpha", alpha.str()},
                            {"beta", beta.str()}, {"mode", to_string(mode)}};

    const auto subset_conditions = check_subset_conditions(n, k, l, alpha.value(), beta.value());
    for (const auto& c : subset_conditions)
        if (c.id == "alpha+beta>=1") require_conditions({c});

    const KSubsetUniverse universe(n, k);
    const long long m = universe.subset_count();
    const long long q = m; // the driver always instantiates the conditions at q = m
    const ReductionDegrees degrees = reduction_degrees(n, k, alpha, beta);
    const DegeneracyInfo degeneracy = reduction_degeneracies(n, k, alpha, beta);
    result.report.warnings = degeneracy.warnings;
    result.report.params["q"] = q;
    // epsilon fixed as 1/(2(2l-1)^2); with it the rewritten threshold's
    // denominator (2l-1)^2*eps - 1 is nonpositive, so the gate below checks
    // condition (1.1) at q = m directly instead.
    const long long w = 2LL * l - 1;
    result.report.params["epsilon"] = Rational(1, 2 * w * w).str();

    auto conditions = check_conditions(m, l, q, degrees.deg1, degrees.deg2, degrees.deg3);
    for (const auto& c : conditions)
        if (c.id == "1.1" || c.id == "1.2") result.report.conditions.push_back(c);
    for (const auto& c : subset_conditions) result.report.conditions.push_back(c);

    if (mode == RunMode::guaranteed) {
        std::vector<ConditionReport> gate;
        for (const auto& c : result.report.conditions)
            if (c.id == "1.1" || c.id == "1.2") gate.push_back(c);
        require_conditions(gate);
    }

    const TripleGraphSystem sys = build_triple_system(universe, alpha, beta);
    result.order = bagfree_ham_power(sys, l, q, opts, &result.report);
    result.subsets_in_order.reserve(m);
    for (Vertex v : result.order.seq) result.subsets_in_order.push_back(universe.unrank(v));

    const auto violations = verify_subset_order(result.subsets_in_order, l, alpha, beta);
    if (!violations.empty())
        throw BagCheckFailure("subset-level verification failed: " + violations.front().what);
    result.report.verification.push_back(
        "subset_order: all windows disjoint, no close disjoint window pair");
    return result;
}

} // namespace parpart
