#include "support.hpp"

#include "bnb/corpus.hpp"

#include <algorithm>
#include <set>

namespace bnb::test {

Tree construction_tree()
{
    return build_tree(26,
        {{0, 10}, {0, 11}, {11, 12}, {0, 6}, {6, 7}, {7, 1}, {1, 13}, {1, 2}, {2, 8}, {8, 9}, {9, 4}, {4, 14},
            {14, 15}, {15, 16}, {4, 17}, {17, 18}, {18, 19}, {2, 3}, {3, 5}, {3, 20}, {20, 21}, {5, 22}, {22, 23},
            {5, 24}, {24, 25}});
}

Tree order18_tree()
{
    // v = 0, g = 1, u = 2, a = 3, c = 4, d = 5
    return build_tree(18,
        {{0, 3}, {0, 4}, {0, 1}, {1, 2}, {1, 6}, {1, 7}, {2, 5}, {2, 8}, {3, 9}, {3, 10}, {4, 11}, {4, 12},
            {5, 13}, {5, 14}, {6, 15}, {9, 16}, {13, 17}});
}

Tree d14() { return build_family(DoubleSpiderSpec{{2, 2}, 5, {2, 2}}); }

bool definition_bn_independent(const Forest &g, const std::vector<int> &f)
{
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (f[u] == 0 || f[v] == 0)
                continue;
            for (Vertex x = 0; x < n; ++x) {
                int du = g.distance(x, u), dv = g.distance(x, v);
                if (du <= f[u] && dv <= f[v] && (du != f[u] || dv != f[v]))
                    return false;
            }
        }
    return true;
}

namespace {

    bool pair_ok_bn(const Forest &g, Vertex u, int fu, Vertex v, int fv)
    {
        for (Vertex x = 0; x < g.order(); ++x) {
            int du = g.distance(x, u), dv = g.distance(x, v);
            if (du <= fu && dv <= fv && (du != fu || dv != fv))
                return false;
        }
        return true;
    }

    bool pair_ok_h(const Forest &g, Vertex u, int fu, Vertex v, int fv)
    {
        int d = g.distance(u, v);
        return d > fu && d > fv;
    }

    template <class Ok>
    int brute_max(const Tree &t, Ok ok)
    {
        const int n = t.order();
        std::vector<int> f(n, 0);
        int best = 0;
        std::function<void(Vertex, int)> go = [&](Vertex v, int weight) {
            if (v == n) {
                best = std::max(best, weight);
                return;
            }
            for (int s = 0; s <= t.eccentricity(v); ++s) {
                bool fine = true;
                if (s > 0)
                    for (Vertex u = 0; u < v && fine; ++u)
                        if (f[u] > 0 && !ok(t, u, f[u], v, s))
                            fine = false;
                if (!fine)
                    continue;
                f[v] = s;
                go(v + 1, weight + s);
                f[v] = 0;
            }
        };
        go(0, 0);
        return best;
    }

} // namespace

int brute_alpha_bn(const Tree &t) { return brute_max(t, pair_ok_bn); }

int brute_alpha_h(const Tree &t) { return brute_max(t, pair_ok_h); }

int brute_alpha(const Forest &g)
{
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const Edge &e : g.edges())
            if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) {
                ok = false;
                break;
            }
        if (ok)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

void for_each_strength_vector(const Forest &g, const std::function<bool(const std::vector<int> &)> &visit)
{
    const int n = g.order();
    std::vector<int> f(n, 0);
    while (true) {
        if (!visit(f))
            return;
        int i = 0;
        while (i < n && f[i] == g.eccentricity(i))
            f[i++] = 0;
        if (i == n)
            return;
        ++f[i];
    }
}

namespace {

    using Adj = std::vector<std::vector<int>>;

    std::vector<int> canonical_levels(const Adj &adj, int v, int parent, int depth)
    {
        std::vector<std::vector<int>> kids;
        for (int w : adj[v])
            if (w != parent)
                kids.push_back(canonical_levels(adj, w, v, depth + 1));
        std::sort(kids.begin(), kids.end(), std::greater<>());
        std::vector<int> seq{depth};
        for (const auto &k : kids)
            seq.insert(seq.end(), k.begin(), k.end());
        return seq;
    }

    int subtree_size(const Adj &adj, int v, int parent)
    {
        int s = 1;
        for (int w : adj[v])
            if (w != parent)
                s += subtree_size(adj, w, v);
        return s;
    }

    std::vector<int> tree_canonical(const Adj &adj)
    {
        const int n = static_cast<int>(adj.size());
        std::vector<int> worst(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : adj[v])
                worst[v] = std::max(worst[v], subtree_size(adj, w, v));
        int least = *std::min_element(worst.begin(), worst.end());
        std::vector<int> best;
        for (int v = 0; v < n; ++v)
            if (worst[v] == least) {
                auto seq = canonical_levels(adj, v, -1, 0);
                if (best.empty() || seq < best)
                    best = seq;
            }
        return best;
    }

    Adj decode_prufer(const std::vector<int> &seq, int n)
    {
        std::vector<int> degree(n, 1);
        for (int x : seq)
            ++degree[x];
        Adj adj(n);
        auto link = [&](int a, int b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        };
        for (int x : seq) {
            int leaf = 0;
            while (degree[leaf] != 1)
                ++leaf;
            link(leaf, x);
            --degree[leaf];
            --degree[x];
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1)
                (a < 0 ? a : b) = v;
        link(a, b);
        return adj;
    }

    // Non-increasing multiplicity vectors c_0 >= c_1 >= ... summing to total.
    void partitions(int total, int max_part, int slots, std::vector<int> &cur,
        const std::function<void(const std::vector<int> &)> &visit)
    {
        if (total == 0) {
            visit(cur);
            return;
        }
        if (slots == 0)
            return;
        for (int p = std::min(total, max_part); p >= 1; --p) {
            cur.push_back(p);
            partitions(total - p, p, slots - 1, cur, visit);
            cur.pop_back();
        }
    }

} // namespace

std::vector<int> canonical_form(const Tree &t)
{
    Adj adj(t.order());
    for (Vertex v = 0; v < t.order(); ++v)
        for (Vertex w : t.neighbors(v))
            adj[v].push_back(w);
    return tree_canonical(adj);
}

std::size_t prufer_class_count(int n)
{
    if (n <= 2)
        return 1;
    std::set<std::vector<int>> classes;
    std::vector<int> cur;
    partitions(n - 2, n - 2, n, cur, [&](const std::vector<int> &counts) {
        std::vector<int> seq;
        for (std::size_t label = 0; label < counts.size(); ++label)
            seq.insert(seq.end(), counts[label], static_cast<int>(label));
        do
            classes.insert(tree_canonical(decode_prufer(seq, n)));
        while (std::next_permutation(seq.begin(), seq.end()));
    });
    return classes.size();
}

} // namespace bnb::test
