#pragma once

// Structural decomposition of a tree into leaves, branch vertices and
// degree-2 vertices, together with the derived leaf sets, the R(T) set,
// the interior subgraph and the per-branch-vertex loss table.
//
// Conventions:
//  * a leaf has degree 1, a branch vertex degree >= 3;
//  * a degree-2 vertex is external when it lies on an endpath (a path to a
//    leaf whose internal vertices all have degree 2), internal otherwise;
//  * on a path every degree-2 vertex is external and R(T), Int(T) are empty.

#include "bnb/graph.hpp"

#include <map>
#include <set>
#include <string_view>
#include <vector>

namespace bnb {

struct LossEntry {
    int max = 0;  // farthest leaf of L(b), 0 when L(b) is empty
    int sum = 0;  // total distance to the leaves of L(b)
    int loss = 0; // sum - max

    friend bool operator==(const LossEntry &, const LossEntry &) = default;
};

struct TreeProfile {
    std::vector<Vertex> leaves;
    std::vector<Vertex> stems;
    std::vector<Vertex> branch;
    std::vector<Vertex> w_ext;
    std::vector<Vertex> w_int;
    std::map<Vertex, std::vector<Vertex>> leaf_sets;
    std::vector<Vertex> b0;
    std::vector<Vertex> b1;
    std::vector<Vertex> b2plus;
    std::vector<Vertex> r_set;
    std::map<Vertex, LossEntry> loss_table;
    Mapped<Forest> interior;

    [[nodiscard]] int b() const noexcept { return static_cast<int>(branch.size()); }
    [[nodiscard]] int rho() const noexcept { return static_cast<int>(r_set.size()); }
    [[nodiscard]] bool is_branch(Vertex v) const;
    [[nodiscard]] bool is_leaf(Vertex v) const;
};

TreeProfile profile(const Tree &t);

/// Leaves reachable from branch vertex b along endpaths. Throws
/// NotBranchVertex.
std::vector<Vertex> leaf_set(const Tree &t, Vertex b);

/// Tree obtained by suppressing every degree-2 vertex. Vertex ids of the
/// result are the kept host vertices in ascending order. Throws
/// DegeneratePath when t has no branch vertex.
Mapped<Tree> branch_leaf_representation(const Tree &t);

/// Graph on B(T) joining branch vertices whose connecting path contains no
/// other branch vertex. Throws NoBranchVertices.
Mapped<Forest> branch_representation(const Tree &t);

/// Subgraph induced by B_0 ∪ B_1 ∪ W_int; possibly empty.
Mapped<Forest> interior_subgraph(const Tree &t);

/// Union of the b-l paths for l in L(b); K_1 when L(b) is empty. Local
/// vertex of b is found through from_host(b). Throws NotBranchVertex.
Mapped<Tree> subtree_at_branch(const Tree &t, Vertex b);

enum class Shape { Path, Spider, Caterpillar, Other };

/// Every shape predicate that holds; {Other} when none do.
std::set<Shape> classify_shape(const Tree &t);

std::string_view to_string(Shape s);

} // namespace bnb
