// synth.hpp - seeded synthetic triple systems for the guaranteed-regime tests
#pragma once

#include "graph.hpp"

#include <cstdint>
#include <stdexcept>

namespace parpart {

// The single PRNG used everywhere generation happens; it is part of the
// file-format contract so artifacts regenerate bit-identically across
// implementations. SplitMix64 over an explicit 64-bit seed:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Bounded draws are next() % n (the bias is irrelevant at these ranges and
// keeps the contract trivial to restate).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("next_below(0)");
        return next() % n;
    }

private:
    std::uint64_t state_;
};

struct InsufficientRoom : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Start from K_m and remove a random maximal set of edges subject to
// min degree >= delta_target (greedy over a seeded shuffle of all edges).
Graph gen_dense(int m, int delta_target, SplitMix64& rng);
Graph gen_dense(int m, int delta_target, std::uint64_t seed);

// Two graphs with max degree <= the targets whose edges avoid `forbidden`;
// E2 and E3 may overlap each other. Throws InsufficientRoom when a positive
// target cannot be reached anywhere in the complement of `forbidden`.
std::pair<Graph, Graph> gen_sparse_pair(int m, int delta2_target, int delta3_target,
                                        const Graph& forbidden, SplitMix64& rng);
std::pair<Graph, Graph> gen_sparse_pair(int m, int delta2_target, int delta3_target,
                                        const Graph& forbidden, std::uint64_t seed);

// Convenience: g1 = gen_dense, then (g2,g3) = gen_sparse_pair avoiding g1,
// all drawn sequentially from one stream seeded with `seed`.
TripleGraphSystem make_synthetic_system(int m, int delta1_target, int delta2_target,
                                        int delta3_target, std::uint64_t seed);

} // namespace parpart
