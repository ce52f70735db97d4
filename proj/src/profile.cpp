#include "bnb/profile.hpp"

#include "bnb/error.hpp"

#include <algorithm>
#include <string>

namespace bnb {

namespace {

    // Walks from `from` through `next` and on through degree-2 vertices.
    // Returns the first vertex of degree != 2 and collects the degree-2
    // vertices passed on the way.
    Vertex walk(const Tree &t, Vertex from, Vertex next, std::vector<Vertex> *passed)
    {
        Vertex prev = from, cur = next;
        while (t.degree(cur) == 2) {
            if (passed)
                passed->push_back(cur);
            auto nb = t.neighbors(cur);
            Vertex step = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = step;
        }
        return cur;
    }

    void require_branch(const Tree &t, Vertex b)
    {
        t.check_vertex(b);
        if (t.degree(b) < 3)
            throw Error(ErrorCode::NotBranchVertex, "vertex " + std::to_string(b) + " has degree " + std::to_string(t.degree(b)));
    }

    bool has_branch_vertex(const Tree &t)
    {
        for (Vertex v = 0; v < t.order(); ++v)
            if (t.degree(v) >= 3)
                return true;
        return false;
    }

    void sort_unique(std::vector<Vertex> &v)
    {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

} // namespace

bool TreeProfile::is_branch(Vertex v) const { return std::binary_search(branch.begin(), branch.end(), v); }
bool TreeProfile::is_leaf(Vertex v) const { return std::binary_search(leaves.begin(), leaves.end(), v); }

TreeProfile profile(const Tree &t)
{
    TreeProfile p;
    const int n = t.order();
    std::vector<Vertex> degree_two;
    for (Vertex v = 0; v < n; ++v) {
        int d = t.degree(v);
        if (d == 1)
            p.leaves.push_back(v);
        else if (d == 2)
            degree_two.push_back(v);
        else if (d >= 3)
            p.branch.push_back(v);
    }
    for (Vertex b : p.branch)
        p.leaf_sets[b];

    for (Vertex l : p.leaves) {
        p.stems.push_back(t.neighbors(l)[0]);
        Vertex end = walk(t, l, t.neighbors(l)[0], &p.w_ext);
        if (t.degree(end) >= 3)
            p.leaf_sets[end].push_back(l);
    }
    sort_unique(p.stems);
    sort_unique(p.w_ext);
    std::set_difference(degree_two.begin(), degree_two.end(), p.w_ext.begin(), p.w_ext.end(),
        std::back_inserter(p.w_int));

    for (auto &[b, ls] : p.leaf_sets) {
        std::sort(ls.begin(), ls.end());
        switch (ls.size()) {
        case 0: p.b0.push_back(b); break;
        case 1: p.b1.push_back(b); break;
        default: p.b2plus.push_back(b); break;
        }
        LossEntry e;
        for (Vertex l : ls) {
            int d = t.distance(b, l);
            e.sum += d;
            e.max = std::max(e.max, d);
        }
        e.loss = e.sum - e.max;
        p.loss_table[b] = e;
    }
    std::merge(p.b0.begin(), p.b0.end(), p.b1.begin(), p.b1.end(), std::back_inserter(p.r_set));

    std::vector<Vertex> interior = p.r_set;
    interior.insert(interior.end(), p.w_int.begin(), p.w_int.end());
    p.interior = induced_subgraph(t, interior);
    return p;
}

std::vector<Vertex> leaf_set(const Tree &t, Vertex b)
{
    require_branch(t, b);
    std::vector<Vertex> out;
    for (Vertex nb : t.neighbors(b)) {
        Vertex end = walk(t, b, nb, nullptr);
        if (t.degree(end) == 1)
            out.push_back(end);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Mapped<Tree> branch_leaf_representation(const Tree &t)
{
    if (!has_branch_vertex(t))
        throw Error(ErrorCode::DegeneratePath, "branch-leaf representation of a path is undefined");
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) != 2)
            kept.push_back(v);
    std::vector<int> local(t.order(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        local[kept[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (Vertex k : kept)
        for (Vertex nb : t.neighbors(k)) {
            Vertex end = walk(t, k, nb, nullptr);
            if (k < end)
                edges.push_back({local[k], local[end]});
        }
    return {build_tree(static_cast<int>(kept.size()), edges), std::move(kept)};
}

Mapped<Forest> branch_representation(const Tree &t)
{
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) >= 3)
            branch.push_back(v);
    if (branch.empty())
        throw Error(ErrorCode::NoBranchVertices, "tree has no branch vertex");
    std::vector<int> local(t.order(), -1);
    for (std::size_t i = 0; i < branch.size(); ++i)
        local[branch[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (Vertex b : branch)
        for (Vertex nb : t.neighbors(b)) {
            Vertex end = walk(t, b, nb, nullptr);
            if (t.degree(end) >= 3 && b < end)
                edges.push_back({local[b], local[end]});
        }
    return {Forest::from_edges(static_cast<int>(branch.size()), edges), std::move(branch)};
}

Mapped<Forest> interior_subgraph(const Tree &t) { return profile(t).interior; }

Mapped<Tree> subtree_at_branch(const Tree &t, Vertex b)
{
    require_branch(t, b);
    std::vector<Vertex> members{b};
    for (Vertex nb : t.neighbors(b)) {
        std::vector<Vertex> passed;
        Vertex end = walk(t, b, nb, &passed);
        if (t.degree(end) == 1) {
            members.insert(members.end(), passed.begin(), passed.end());
            members.push_back(end);
        }
    }
    return induced_subtree(t, members);
}

std::set<Shape> classify_shape(const Tree &t)
{
    std::set<Shape> out;
    int branch = 0;
    bool caterpillar = true;
    for (Vertex v = 0; v < t.order(); ++v) {
        if (t.degree(v) >= 3)
            ++branch;
        if (t.degree(v) <= 1)
            continue;
        int inner = 0;
        for (Vertex nb : t.neighbors(v))
            if (t.degree(nb) > 1)
                ++inner;
        if (inner > 2)
            caterpillar = false;
    }
    if (branch == 0)
        out.insert(Shape::Path);
    if (branch == 1)
        out.insert(Shape::Spider);
    if (caterpillar)
        out.insert(Shape::Caterpillar);
    if (out.empty())
        out.insert(Shape::Other);
    return out;
}

std::string_view to_string(Shape s)
{
    switch (s) {
    case Shape::Path: return "Path";
    case Shape::Spider: return "Spider";
    case Shape::Caterpillar: return "Caterpillar";
    case Shape::Other: return "Other";
    }
    return "Other";
}

} // namespace bnb
