// io.hpp - canonical JSON file formats for systems, families, and orders
#pragma once

#include "graph.hpp"
#include "report.hpp"
#include "subsets.hpp"
#include "types.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace parpart {

// All files are canonical: object keys sorted, edge/block lists sorted,
// compact encoding, newline-terminated. Identical inputs produce
// byte-identical files.

struct SubsetProvenance {
    int n = 0;
    int k = 0;
    Rational alpha;
    Rational beta;
};

struct SystemFile {
    TripleGraphSystem sys;
    nlohmann::json provenance; // null when absent
    std::optional<SubsetProvenance> subset_provenance() const;
};

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j, int m);

nlohmann::json system_to_json(const SystemFile& file);
SystemFile system_from_json(const nlohmann::json& j);

// Family files always carry {blocks, l, m}; subset-backed runs add
// {alpha, beta, k, n, parpartitions}.
nlohmann::json family_to_json(const CliqueFamily& family,
                              const ParpartitionFamily* parts = nullptr);
CliqueFamily family_from_json(const nlohmann::json& j);

// Order files always carry {m, order}; subset-backed runs add
// {alpha, beta, k, n, subsets}.
nlohmann::json order_to_json(const CyclicOrder& order,
                             const std::vector<std::vector<int>>* subsets = nullptr,
                             const SubsetProvenance* prov = nullptr);
CyclicOrder order_from_json(const nlohmann::json& j);

std::string canonical_dump(const nlohmann::json& j);
void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

} // namespace parpart
