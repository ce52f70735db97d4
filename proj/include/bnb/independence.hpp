#pragma once

#include "bnb/graph.hpp"

#include <vector>

namespace bnb {

struct IndependentSet {
    int size = 0;
    std::vector<Vertex> members; // ascending
};

/// Maximum independent set of a forest by the include/exclude tree DP.
/// Each component is rooted at its lowest vertex; ties are broken by
/// excluding the current vertex, so witnesses are reproducible.
IndependentSet alpha_forest(const Forest &g);

} // namespace bnb
