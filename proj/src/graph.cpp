#include "bnb/graph.hpp"

#include "bnb/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace bnb {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadVertexIndex: return "BadVertexIndex";
    case ErrorCode::DegeneratePath: return "DegeneratePath";
    case ErrorCode::NoBranchVertices: return "NoBranchVertices";
    case ErrorCode::NotBranchVertex: return "NotBranchVertex";
    case ErrorCode::StrengthExceedsEccentricity: return "StrengthExceedsEccentricity";
    case ErrorCode::NegativeStrength: return "NegativeStrength";
    case ErrorCode::HostMismatch: return "HostMismatch";
    case ErrorCode::NotBnIndependent: return "NotBnIndependent";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedLongForm: return "UnsupportedLongForm";
    case ErrorCode::Inconsistency: return "Inconsistency";
    }
    return "Unknown";
}

struct Forest::Data {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> adj;
    std::vector<int> dist; // n*n, row-major
    std::vector<int> ecc;
    std::vector<int> component;
    int component_count = 0;
};

namespace {

    std::vector<Edge> normalise(int n, std::span<const Edge> edges)
    {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (auto e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw Error(ErrorCode::BadVertexIndex,
                    "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" + std::to_string(n));
            if (e.u == e.v)
                throw Error(ErrorCode::NotATree, "self-loop at " + std::to_string(e.u));
            out.push_back(e.u < e.v ? e : Edge{e.v, e.u});
        }
        std::sort(out.begin(), out.end());
        auto dup = std::adjacent_find(out.begin(), out.end());
        if (dup != out.end())
            throw Error(ErrorCode::NotATree,
                "repeated edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
        return out;
    }

} // namespace

Forest::Forest() : data_(std::make_shared<const Data>()) {}

Forest Forest::from_edges(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw Error(ErrorCode::BadVertexIndex, "negative order");
    auto d = std::make_shared<Data>();
    d->n = n;
    d->edges = normalise(n, edges);
    d->adj.assign(n, {});
    for (auto e : d->edges) {
        d->adj[e.u].push_back(e.v);
        d->adj[e.v].push_back(e.u);
    }
    for (auto &a : d->adj)
        std::sort(a.begin(), a.end());

    // Components, lowest member first.
    d->component.assign(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (d->component[s] != -1)
            continue;
        int label = d->component_count++;
        std::vector<Vertex> stack{s};
        d->component[s] = label;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : d->adj[x])
                if (d->component[y] == -1) {
                    d->component[y] = label;
                    stack.push_back(y);
                }
        }
    }
    if (static_cast<int>(d->edges.size()) != n - d->component_count)
        throw Error(ErrorCode::NotATree, "graph contains a cycle");

    d->dist.assign(static_cast<std::size_t>(n) * n, kUnreachable);
    d->ecc.assign(n, 0);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
        int *row = d->dist.data() + static_cast<std::size_t>(s) * n;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        row[s] = 0;
        while (head < tail) {
            Vertex x = queue[head++];
            for (Vertex y : d->adj[x])
                if (row[y] == kUnreachable) {
                    row[y] = row[x] + 1;
                    queue[tail++] = y;
                }
        }
        d->ecc[s] = row[queue[tail - 1]];
    }
    return Forest(std::move(d));
}

int Forest::order() const noexcept { return data_->n; }
int Forest::edge_count() const noexcept { return static_cast<int>(data_->edges.size()); }
const std::vector<Edge> &Forest::edges() const noexcept { return data_->edges; }

void Forest::check_vertex(Vertex v) const
{
    if (v < 0 || v >= data_->n)
        throw Error(ErrorCode::BadVertexIndex,
            "vertex " + std::to_string(v) + " outside 0.." + std::to_string(data_->n - 1));
}

std::span<const Vertex> Forest::neighbors(Vertex v) const
{
    check_vertex(v);
    return data_->adj[v];
}

int Forest::degree(Vertex v) const
{
    check_vertex(v);
    return static_cast<int>(data_->adj[v].size());
}

bool Forest::adjacent(Vertex u, Vertex v) const { return distance(u, v) == 1; }

int Forest::distance(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return data_->dist[static_cast<std::size_t>(u) * data_->n + v];
}

int Forest::eccentricity(Vertex v) const
{
    check_vertex(v);
    return data_->ecc[v];
}

int Forest::component_count() const noexcept { return data_->component_count; }
const std::vector<int> &Forest::components() const noexcept { return data_->component; }

std::optional<int> Forest::edge_index(Vertex u, Vertex v) const
{
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    auto it = std::lower_bound(data_->edges.begin(), data_->edges.end(), e);
    if (it == data_->edges.end() || *it != e)
        return std::nullopt;
    return static_cast<int>(it - data_->edges.begin());
}

bool Forest::same_graph(const Forest &other) const noexcept
{
    return data_ == other.data_ || (data_->n == other.data_->n && data_->edges == other.data_->edges);
}

Tree::Tree() : Forest(Forest::from_edges(1, {})) {}

int Tree::diameter() const noexcept
{
    int best = 0;
    for (int e : data_->ecc)
        best = std::max(best, e);
    return best;
}

Tree build_tree(int n, std::span<const Edge> edges)
{
    if (n < 1)
        throw Error(ErrorCode::NotATree, "a tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw Error(ErrorCode::NotATree,
            std::to_string(edges.size()) + " edges for " + std::to_string(n) + " vertices");
    Forest f = Forest::from_edges(n, edges);
    if (f.component_count() != 1)
        throw Error(ErrorCode::NotATree, "graph is disconnected");
    return Tree(std::move(f));
}

Mapped<Forest> induced_subgraph(const Forest &g, std::span<const Vertex> vertices)
{
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    for (Vertex v : keep)
        g.check_vertex(v);
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw Error(ErrorCode::BadVertexIndex, "repeated vertex in induced subgraph request");

    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        local[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0)
            edges.push_back({local[e.u], local[e.v]});
    return {Forest::from_edges(static_cast<int>(keep.size()), edges), std::move(keep)};
}

Mapped<Tree> induced_subtree(const Forest &g, std::span<const Vertex> vertices)
{
    auto sub = induced_subgraph(g, vertices);
    return {build_tree(sub.graph.order(), sub.graph.edges()), std::move(sub.to_host)};
}

} // namespace bnb
