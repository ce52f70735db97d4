#include "bnb/independence.hpp"

#include <algorithm>

namespace bnb {

IndependentSet alpha_forest(const Forest &g)
{
    const int n = g.order();
    std::vector<int> with(n, 1), without(n, 0), parent(n, -1);
    std::vector<bool> visited(n, false);
    std::vector<Vertex> roots;
    std::vector<Vertex> preorder;
    preorder.reserve(n);

    for (Vertex r = 0; r < n; ++r) {
        if (visited[r])
            continue;
        roots.push_back(r);
        std::vector<Vertex> stack{r};
        visited[r] = true;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            preorder.push_back(x);
            for (Vertex y : g.neighbors(x))
                if (!visited[y]) {
                    visited[y] = true;
                    parent[y] = x;
                    stack.push_back(y);
                }
        }
    }
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
        Vertex x = *it;
        if (parent[x] < 0)
            continue;
        with[parent[x]] += without[x];
        without[parent[x]] += std::max(with[x], without[x]);
    }

    IndependentSet out;
    std::vector<bool> in(n, false);
    for (Vertex x : preorder) {
        bool parent_in = parent[x] >= 0 && in[parent[x]];
        in[x] = !parent_in && with[x] > without[x];
    }
    for (Vertex r : roots)
        out.size += std::max(with[r], without[r]);
    for (Vertex v = 0; v < n; ++v)
        if (in[v])
            out.members.push_back(v);
    return out;
}

} // namespace bnb
