#pragma once

// Immutable forests and trees on dense vertex ids 0..n-1.
//
// Both types share their storage (adjacency, sorted edge list, all-pairs
// distance matrix) through a shared_ptr to const data, so copies are cheap
// and instances may be handed to concurrent workers freely.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bnb {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

// Distance between vertices in different components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

class Forest {
public:
    /// The empty forest (order 0).
    Forest();

    /// Validates and builds an acyclic simple graph. Edges are normalised to
    /// u < v and sorted. Throws BadVertexIndex or NotATree (self-loop,
    /// repeated edge, cycle).
    static Forest from_edges(int n, std::span<const Edge> edges);

    [[nodiscard]] int order() const noexcept;
    [[nodiscard]] int edge_count() const noexcept;
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept;
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const;
    [[nodiscard]] int degree(Vertex v) const;
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    /// Hop distance; kUnreachable across components.
    [[nodiscard]] int distance(Vertex u, Vertex v) const;
    /// Eccentricity within the component of v.
    [[nodiscard]] int eccentricity(Vertex v) const;

    [[nodiscard]] int component_count() const noexcept;
    /// Component label per vertex, labels numbered by lowest member.
    [[nodiscard]] const std::vector<int> &components() const noexcept;

    /// Index into edges() of the edge {u,v}, if present.
    [[nodiscard]] std::optional<int> edge_index(Vertex u, Vertex v) const;

    /// True when both refer to the same vertex count and edge set.
    [[nodiscard]] bool same_graph(const Forest &other) const noexcept;

    void check_vertex(Vertex v) const;

protected:
    struct Data;
    explicit Forest(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

/// A connected forest with at least one vertex.
class Tree : public Forest {
public:
    /// The single-vertex tree K_1.
    Tree();

    [[nodiscard]] int diameter() const noexcept;

    friend Tree build_tree(int n, std::span<const Edge> edges);

private:
    explicit Tree(Forest f) : Forest(std::move(f)) {}
};

/// Throws BadVertexIndex, or NotATree on cycles, disconnection or a wrong
/// edge count.
Tree build_tree(int n, std::span<const Edge> edges);
inline Tree build_tree(int n, std::initializer_list<Edge> edges)
{
    return build_tree(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// A graph extracted from a host, with each local vertex mapped back.
template <class G>
struct Mapped {
    G graph;
    std::vector<Vertex> to_host;

    [[nodiscard]] std::optional<Vertex> from_host(Vertex h) const
    {
        for (std::size_t i = 0; i < to_host.size(); ++i)
            if (to_host[i] == h)
                return static_cast<Vertex>(i);
        return std::nullopt;
    }
};

/// Subgraph of g induced by `vertices` (any order, duplicates rejected).
/// Local ids follow ascending host ids.
Mapped<Forest> induced_subgraph(const Forest &g, std::span<const Vertex> vertices);

/// Induced subgraph that must be connected and non-empty.
Mapped<Tree> induced_subtree(const Forest &g, std::span<const Vertex> vertices);

} // namespace bnb
