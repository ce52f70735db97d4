#pragma once

// Tree corpora: exhaustive non-isomorphic enumeration, parametric families,
// and the edge-list / graph6 text formats.

#include "bnb/graph.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace bnb {

/// One tree per isomorphism class of order n (n >= 1), in a fixed order.
///
/// Rooted trees are generated as canonical level sequences by the
/// Beyer-Hedetniemi successor rule; a rooted tree is kept when its root is
/// a centroid and, for bicentroidal trees, when the half holding the root
/// is not smaller than the other half in level-sequence order. Vertex 0 is
/// the chosen centroid and vertices follow the level sequence.
std::vector<Tree> enumerate_trees(int n);

/// Streaming form of enumerate_trees; stops early when `visit` returns false.
void for_each_tree(int n, const std::function<bool(const Tree &)> &visit);

/// Level sequence (root at level 0) to tree; parent of i is the last j < i
/// one level up.
Tree tree_from_levels(const std::vector<int> &levels);

struct SpiderSpec {
    std::vector<int> legs;
};
struct CaterpillarSpec {
    std::vector<int> leaf_counts; // per listed spine vertex
    std::vector<int> spacing;     // edges between consecutive listed vertices; empty means all 1
};
struct DoubleSpiderSpec {
    std::vector<int> legs1;
    int bridge = 1;
    std::vector<int> legs2;
};
struct PathSpec {
    int n = 1;
};

using FamilySpec = std::variant<SpiderSpec, CaterpillarSpec, DoubleSpiderSpec, PathSpec>;

/// Labelled construction; throws BadSpec.
///   Spider:       head 0, then each leg outward from the head, in order.
///                 Order 1 + Σ legs.
///   DoubleSpider: b1 = 0, b2 = 1, then the bridge-1 inner bridge vertices
///                 from b1 to b2, then legs1, then legs2 (outward). Order
///                 2 + Σ legs1 + Σ legs2 + (bridge - 1).
///   Caterpillar:  listed spine vertices 0..k-1, then inner spacing
///                 vertices, then leaves. Order k + Σ(spacing-1) + Σ leaves.
///   Path:         0-1-...-(n-1).
Tree build_family(const FamilySpec &spec);

/// Expected order of build_family(spec), computed from the spec alone.
int family_order(const FamilySpec &spec);

/// Parses "spider:2,2,2", "dspider:2,2/5/2,2", "path:9",
/// "cat:leafcounts=2,1,2" or "cat:leafcounts=2,0,2;spacing=1,3".
FamilySpec parse_family(const std::string &text);

/// Lines "u v", '#' comments, blank lines ignored; order is one more than
/// the largest id (1 for empty input). Throws ParseError or NotATree.
Tree parse_edge_list(const std::string &text);
/// Sorted "u v" lines with u < v.
std::string emit_edge_list(const Tree &t);

/// graph6 for n < 63. Throws ParseError, UnsupportedLongForm or NotATree.
Tree parse_graph6(const std::string &text);
std::string emit_graph6(const Tree &t);

} // namespace bnb
