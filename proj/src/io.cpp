// io.cpp
#include "parpart/io.hpp"

#include <fstream>
#include <sstream>

namespace parpart {

nlohmann::json condition_to_json(const ConditionReport& r) {
    return {{"id", r.id},
            {"lhs", r.lhs.str()},
            {"rhs", r.rhs.str()},
            {"relation", r.relation},
            {"holds", r.holds}};
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["params"] = params;
    j["warnings"] = warnings;
    j["counters"] = {{"defects_processed", defects_processed},
                     {"repair_swaps", repair_swaps},
                     {"rearrangements", rearrangements},
                     {"activations", activations},
                     {"conflicted_activations", conflicted_activations},
                     {"activation_swaps", activation_swaps}};
    nlohmann::json acts = nlohmann::json::array();
    for (const auto& a : activation_records) {
        nlohmann::json rec = {{"edge", {a.edge.first, a.edge.second}},
                              {"swapped_endpoint", a.swapped_endpoint},
                              {"rejected", a.rejected}};
        if (a.bad_total >= 0) rec["bad_total"] = a.bad_total;
        acts.push_back(rec);
    }
    j["activation_records"] = acts;
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : conditions) conds.push_back(condition_to_json(c));
    j["conditions"] = conds;
    j["verification"] = verification;
    return j;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edge_list()) edges.push_back({e.first, e.second});
    return edges;
}

Graph graph_from_json(const nlohmann::json& j, int m) {
    Graph g(m);
    if (!j.is_array()) throw std::invalid_argument("edge list must be a JSON array");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u,v]");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

std::optional<SubsetProvenance> SystemFile::subset_provenance() const {
    if (!provenance.is_object()) return std::nullopt;
    if (!provenance.contains("n") || !provenance.contains("k") ||
        !provenance.contains("alpha") || !provenance.contains("beta"))
        return std::nullopt;
    SubsetProvenance p;
    p.n = provenance["n"].get<int>();
    p.k = provenance["k"].get<int>();
    p.alpha = Rational::parse(provenance["alpha"].get<std::string>());
    p.beta = Rational::parse(provenance["beta"].get<std::string>());
    return p;
}

nlohmann::json system_to_json(const SystemFile& file) {
    nlohmann::json j;
    j["m"] = file.sys.vertex_count();
    j["g1"] = graph_to_json(file.sys.g1());
    j["g2"] = graph_to_json(file.sys.g2());
    j["g3"] = graph_to_json(file.sys.g3());
    if (!file.provenance.is_null()) j["provenance"] = file.provenance;
    return j;
}

SystemFile system_from_json(const nlohmann::json& j) {
    if (!j.contains("m")) throw std::invalid_argument("system file misses 'm'");
    const int m = j["m"].get<int>();
    Graph g1 = graph_from_json(j.value("g1", nlohmann::json::array()), m);
    Graph g2 = graph_from_json(j.value("g2", nlohmann::json::array()), m);
    Graph g3 = graph_from_json(j.value("g3", nlohmann::json::array()), m);
    SystemFile file{TripleGraphSystem(std::move(g1), std::move(g2), std::move(g3)),
                    j.contains("provenance") ? j["provenance"] : nlohmann::json()};
    return file;
}

nlohmann::json family_to_json(const CliqueFamily& family, const ParpartitionFamily* parts) {
    nlohmann::json j;
    j["m"] = family.m;
    j["l"] = family.l;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : family.blocks) blocks.push_back(b);
    j["blocks"] = blocks;
    if (parts) {
        j["n"] = parts->n;
        j["k"] = parts->k;
        j["alpha"] = parts->alpha.str();
        j["beta"] = parts->beta.str();
        nlohmann::json ps = nlohmann::json::array();
        for (const auto& p : parts->parpartitions) ps.push_back(p.blocks);
        j["parpartitions"] = ps;
    }
    return j;
}

CliqueFamily family_from_json(const nlohmann::json& j) {
    CliqueFamily family;
    family.m = j.at("m").get<int>();
    family.l = j.at("l").get<int>();
    for (const auto& b : j.at("blocks")) family.blocks.push_back(b.get<std::vector<Vertex>>());
    return family;
}

nlohmann::json order_to_json(const CyclicOrder& order, const std::vector<std::vector<int>>* subsets,
                             const SubsetProvenance* prov) {
    nlohmann::json j;
    j["m"] = order.size();
    j["order"] = order.seq;
    if (subsets) {
        nlohmann::json ss = nlohmann::json::array();
        for (const auto& s : *subsets) ss.push_back(s);
        j["subsets"] = ss;
    }
    if (prov) {
        j["n"] = prov->n;
        j["k"] = prov->k;
        j["alpha"] = prov->alpha.str();
        j["beta"] = prov->beta.str();
    }
    return j;
}

CyclicOrder order_from_json(const nlohmann::json& j) {
    return CyclicOrder::from_sequence(j.at("order").get<std::vector<Vertex>>());
}

std::string canonical_dump(const nlohmann::json& j) {
    return j.dump() + "\n";
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << canonical_dump(j);
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
    return j;
}

} // namespace parpart
