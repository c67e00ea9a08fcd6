#pragma once

#include <cstddef>
#include <vector>

#include "qpmut/seed.hpp"

namespace qpmut {

struct ExploreEdge {
    std::size_t from = 0;
    int vertex = 0;
    std::size_t to = 0;
};

struct ExploreResult {
    std::vector<Seed> seeds;  // one representative per node, discovery order
    std::vector<ExploreEdge> edges;
    std::size_t distinct_clusters = 0;
    std::size_t distinct_variables = 0;
    // True when every discovered node was fully expanded, i.e. the exchange
    // graph closed within the depth budget.
    bool closure = false;
    // True when a resource cap stopped the sweep early (partial result).
    bool capped = false;
};

// Breadth-first sweep of the exchange graph, deduplicating seeds up to
// simultaneous permutation of the mutable indices (sorted canonical cluster
// plus permuted B-matrix).
ExploreResult explore(const Seed& s, int max_depth, std::size_t max_seeds = 10000,
                      std::size_t max_terms = 1000000);

// Canonical node key used for the deduplication, exposed for tests.
std::string seed_canonical_key(const Seed& s);

}  // namespace qpmut
