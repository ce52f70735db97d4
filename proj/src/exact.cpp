#include "bnb/exact.hpp"

#include "bnb/error.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include <omp.h>

namespace bnb {

void SolveLimits::validate() const
{
    if (max_nodes == 0 || time_budget.count() <= 0)
        throw Error(ErrorCode::BadSpec, "solver budgets must be positive");
}

namespace {

    using Clock = std::chrono::steady_clock;

    // Node and wall-clock accounting. Parallel workers publish their node
    // counts into a shared counter in blocks.
    class Budget {
    public:
        Budget(const SolveLimits &limits, std::atomic<std::uint64_t> *shared_nodes = nullptr,
            std::atomic<bool> *shared_stop = nullptr)
            : max_nodes_(limits.max_nodes), deadline_(Clock::now() + limits.time_budget),
              shared_nodes_(shared_nodes), shared_stop_(shared_stop)
        {
        }

        bool tick()
        {
            if (exhausted_)
                return false;
            ++nodes_;
            if ((nodes_ & (kBlock - 1)) == 0) {
                std::uint64_t total = nodes_;
                if (shared_nodes_)
                    total = shared_nodes_->fetch_add(kBlock) + kBlock;
                if (total > max_nodes_ || Clock::now() > deadline_ || (shared_stop_ && shared_stop_->load()))
                    stop();
            }
            else if (!shared_nodes_ && nodes_ > max_nodes_)
                stop();
            return !exhausted_;
        }

        [[nodiscard]] bool exhausted() const noexcept { return exhausted_; }
        [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

    private:
        static constexpr std::uint64_t kBlock = 1024;

        void stop()
        {
            exhausted_ = true;
            if (shared_stop_)
                shared_stop_->store(true);
        }

        std::uint64_t max_nodes_;
        Clock::time_point deadline_;
        std::atomic<std::uint64_t> *shared_nodes_;
        std::atomic<bool> *shared_stop_;
        std::uint64_t nodes_ = 0;
        bool exhausted_ = false;
    };

    // Vertices by descending eccentricity, ties by index.
    std::vector<Vertex> search_order(const Tree &t)
    {
        std::vector<Vertex> order(t.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return t.eccentricity(a) > t.eccentricity(b); });
        return order;
    }

    struct EdgeTables {
        int n = 0;
        int m = 0;
        std::vector<Vertex> order;
        std::vector<int> cap;
        // ball[v]: edge ids ordered by distance from v of their far end, so
        // the edges covered at strength s form the prefix of length cov[v][s].
        std::vector<std::vector<int>> ball;
        std::vector<std::vector<int>> cov;
        std::vector<int> suffix_cap;
    };

    EdgeTables make_tables(const Tree &t, std::vector<int> cap)
    {
        EdgeTables tb;
        tb.n = t.order();
        tb.m = t.edge_count();
        tb.order = search_order(t);
        tb.cap = std::move(cap);
        tb.ball.resize(tb.n);
        tb.cov.resize(tb.n);
        for (Vertex v = 0; v < tb.n; ++v) {
            std::vector<Vertex> others;
            for (Vertex u = 0; u < tb.n; ++u)
                if (u != v)
                    others.push_back(u);
            std::stable_sort(others.begin(), others.end(),
                [&](Vertex a, Vertex b) { return t.distance(v, a) < t.distance(v, b); });
            for (Vertex u : others)
                for (Vertex w : t.neighbors(u))
                    if (t.distance(v, w) + 1 == t.distance(v, u)) {
                        tb.ball[v].push_back(*t.edge_index(u, w));
                        break;
                    }
            tb.cov[v].assign(tb.cap[v] + 1, 0);
            for (int s = 0; s <= tb.cap[v]; ++s)
                tb.cov[v][s] = static_cast<int>(std::count_if(
                    others.begin(), others.end(), [&](Vertex u) { return t.distance(v, u) <= s; }));
        }
        tb.suffix_cap.assign(tb.n + 1, 0);
        for (int i = tb.n - 1; i >= 0; --i)
            tb.suffix_cap[i] = tb.suffix_cap[i + 1] + tb.cap[tb.order[i]];
        return tb;
    }

    class EdgeSearch {
    public:
        EdgeSearch(const EdgeTables &tb, PruningRules rules, Budget budget, std::atomic<int> *global_best = nullptr)
            : tb_(tb), rules_(rules), budget_(budget), global_best_(global_best), owner_(tb.m, -1), f_(tb.n, 0),
              free_edges_(tb.m)
        {
        }

        // Largest admissible strength for v in the current state.
        int max_strength(Vertex v) const
        {
            int s = tb_.cap[v];
            if (rules_.partial_independence) {
                const auto &ball = tb_.ball[v];
                int reach = tb_.cov[v][s];
                int k = 0;
                while (k < reach && owner_[ball[k]] < 0)
                    ++k;
                while (s > 0 && tb_.cov[v][s] > k)
                    --s;
            }
            if (rules_.edge_budget)
                while (s > 0 && used_ + tb_.cov[v][s] > tb_.m)
                    --s;
            return s;
        }

        void place(Vertex v, int s)
        {
            f_[v] = s;
            weight_ += s;
            int c = tb_.cov[v][s];
            used_ += c;
            if (rules_.partial_independence) {
                for (int k = 0; k < c; ++k)
                    owner_[tb_.ball[v][k]] = v;
                free_edges_ -= c;
            }
        }

        void unplace(Vertex v)
        {
            int s = f_[v];
            int c = tb_.cov[v][s];
            if (rules_.partial_independence) {
                for (int k = 0; k < c; ++k)
                    owner_[tb_.ball[v][k]] = -1;
                free_edges_ += c;
            }
            used_ -= c;
            weight_ -= s;
            f_[v] = 0;
        }

        void dfs(int depth)
        {
            if (!budget_.tick())
                return;
            if (depth == tb_.n) {
                if (!rules_.partial_independence && !disjoint_cover())
                    return;
                if (weight_ > best_) {
                    best_ = weight_;
                    best_f_ = f_;
                    if (global_best_) {
                        int g = global_best_->load();
                        while (g < best_ && !global_best_->compare_exchange_weak(g, best_)) {
                        }
                    }
                }
                return;
            }
            if (rules_.completion_bound) {
                int rest = tb_.suffix_cap[depth];
                if (rules_.partial_independence)
                    rest = std::min(rest, free_edges_);
                else if (rules_.edge_budget)
                    rest = std::min(rest, tb_.m - used_);
                if (weight_ + rest <= best_)
                    return;
                if (global_best_ && weight_ + rest < global_best_->load())
                    return;
            }
            Vertex v = tb_.order[depth];
            for (int s = max_strength(v); s >= 1; --s) {
                place(v, s);
                dfs(depth + 1);
                unplace(v);
                if (budget_.exhausted())
                    return;
            }
            dfs(depth + 1);
        }

        [[nodiscard]] int best() const noexcept { return best_; }
        [[nodiscard]] const std::vector<int> &best_strengths() const noexcept { return best_f_; }
        [[nodiscard]] const Budget &budget() const noexcept { return budget_; }

    private:
        bool disjoint_cover() const
        {
            std::vector<char> taken(tb_.m, 0);
            for (Vertex v = 0; v < tb_.n; ++v)
                for (int k = 0; k < tb_.cov[v][f_[v]]; ++k) {
                    char &slot = taken[tb_.ball[v][k]];
                    if (slot)
                        return false;
                    slot = 1;
                }
            return true;
        }

        const EdgeTables &tb_;
        PruningRules rules_;
        Budget budget_;
        std::atomic<int> *global_best_;
        std::vector<int> owner_;
        std::vector<int> f_;
        int weight_ = 0;
        int used_ = 0;
        int free_edges_;
        int best_ = -1;
        std::vector<int> best_f_;
    };

    SolveResult finish(const Tree &t, int best, std::vector<int> strengths, bool exhausted, std::uint64_t nodes)
    {
        SolveResult r;
        if (strengths.empty()) {
            r.value = 0;
            r.witness = Broadcast(t);
        }
        else {
            r.value = best;
            r.witness = Broadcast(t, std::move(strengths));
        }
        r.status = exhausted ? SolveStatus::BudgetExceeded : SolveStatus::Optimal;
        r.nodes = nodes;
        return r;
    }

    std::vector<int> eccentricities(const Tree &t)
    {
        std::vector<int> e(t.order());
        for (Vertex v = 0; v < t.order(); ++v)
            e[v] = t.eccentricity(v);
        return e;
    }

    SolveResult run_edge_search(const Tree &t, std::vector<int> cap, const SolveLimits &limits, const PruningRules &rules)
    {
        limits.validate();
        EdgeTables tb = make_tables(t, std::move(cap));
        EdgeSearch search(tb, rules, Budget(limits));
        search.dfs(0);
        return finish(t, search.best(), search.best_strengths(), search.budget().exhausted(), search.budget().nodes());
    }

} // namespace

SolveResult alpha_bn_exact(const Tree &t, const SolveLimits &limits, const PruningRules &rules)
{
    return run_edge_search(t, eccentricities(t), limits, rules);
}

SolveResult alpha_bn_restricted(const Tree &t, const SolveLimits &limits)
{
    std::vector<int> cap = eccentricities(t);
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) != 1)
            cap[v] = std::min(cap[v], 1);
    return run_edge_search(t, std::move(cap), limits, {});
}

SolveResult alpha_bn_exact_parallel(const Tree &t, const SolveLimits &limits, int threads)
{
    limits.validate();
    if (t.order() < 3)
        return alpha_bn_exact(t, limits);
    EdgeTables tb = make_tables(t, eccentricities(t));
    const PruningRules rules{};

    // Tasks fix the strengths of the first two vertices of the search order,
    // listed in the order the serial search visits them.
    struct Task {
        int s0, s1;
    };
    std::vector<Task> tasks;
    {
        EdgeSearch probe(tb, rules, Budget(limits));
        Vertex v0 = tb.order[0], v1 = tb.order[1];
        for (int s0 = probe.max_strength(v0); s0 >= 0; --s0) {
            probe.place(v0, s0);
            for (int s1 = probe.max_strength(v1); s1 >= 0; --s1)
                tasks.push_back({s0, s1});
            probe.unplace(v0);
        }
    }

    std::atomic<int> global_best{-1};
    std::atomic<std::uint64_t> shared_nodes{0};
    std::atomic<bool> stop{false};
    struct Outcome {
        int best = -1;
        std::vector<int> strengths;
        std::uint64_t nodes = 0;
        bool exhausted = false;
    };
    std::vector<Outcome> outcomes(tasks.size());
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        EdgeSearch search(tb, rules, Budget(limits, &shared_nodes, &stop), &global_best);
        search.place(tb.order[0], tasks[i].s0);
        search.place(tb.order[1], tasks[i].s1);
        search.dfs(2);
        outcomes[i] = {search.best(), search.best_strengths(), search.budget().nodes(), search.budget().exhausted()};
    }

    int best = -1;
    std::size_t winner = 0;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        nodes += outcomes[i].nodes;
        exhausted = exhausted || outcomes[i].exhausted;
        if (outcomes[i].best > best) {
            best = outcomes[i].best;
            winner = i;
        }
    }
    std::vector<int> strengths = best >= 0 ? outcomes[winner].strengths : std::vector<int>{};
    return finish(t, best, std::move(strengths), exhausted, nodes);
}

SolveResult alpha_bn_enum(const Tree &t, const SolveLimits &limits) { return alpha_bn_enum_all(t, limits, 0).best; }

EnumResult alpha_bn_enum_all(const Tree &t, const SolveLimits &limits, std::size_t optima_cap)
{
    limits.validate();
    const int n = t.order();
    std::vector<int> ecc = eccentricities(t);
    std::vector<int> f(n, 0);
    Budget budget(limits);
    EnumResult out;
    int best = -1;
    std::vector<int> best_f;

    while (true) {
        if (!budget.tick())
            break;
        if (bn_independent_strengths(t, f)) {
            int w = std::accumulate(f.begin(), f.end(), 0);
            if (w > best) {
                best = w;
                best_f = f;
                out.optima.clear();
                out.optima_cap_hit = false;
            }
            if (w == best && optima_cap > 0) {
                if (out.optima.size() < optima_cap)
                    out.optima.emplace_back(t, f);
                else
                    out.optima_cap_hit = true;
            }
        }
        // Odometer step over the product of {0..e(v)}.
        int i = 0;
        while (i < n && f[i] == ecc[i])
            f[i++] = 0;
        if (i == n)
            break;
        ++f[i];
    }
    out.best = finish(t, best, std::move(best_f), budget.exhausted(), budget.nodes());
    return out;
}

namespace {

    class HearingSearch {
    public:
        HearingSearch(const Tree &t, Budget budget) : t_(t), order_(search_order(t)), budget_(budget), f_(t.order(), 0)
        {
        }

        void dfs(int depth)
        {
            if (!budget_.tick())
                return;
            const int n = t_.order();
            if (depth == n) {
                if (weight_ > best_) {
                    best_ = weight_;
                    best_f_ = f_;
                }
                return;
            }
            int rest = 0;
            for (int j = depth; j < n; ++j)
                rest += available(order_[j]);
            if (weight_ + rest <= best_)
                return;
            Vertex v = order_[depth];
            for (int s = available(v); s >= 1; --s) {
                f_[v] = s;
                weight_ += s;
                active_.push_back(v);
                dfs(depth + 1);
                active_.pop_back();
                weight_ -= s;
                f_[v] = 0;
                if (budget_.exhausted())
                    return;
            }
            dfs(depth + 1);
        }

        [[nodiscard]] int best() const noexcept { return best_; }
        [[nodiscard]] const std::vector<int> &best_strengths() const noexcept { return best_f_; }
        [[nodiscard]] const Budget &budget() const noexcept { return budget_; }

    private:
        // Largest strength u may take without hearing, or being heard by, a
        // placed broadcaster.
        int available(Vertex u) const
        {
            int s = t_.eccentricity(u);
            for (Vertex b : active_) {
                int d = t_.distance(u, b);
                if (d <= f_[b])
                    return 0;
                s = std::min(s, d - 1);
            }
            return s;
        }

        const Tree &t_;
        std::vector<Vertex> order_;
        Budget budget_;
        std::vector<int> f_;
        std::vector<Vertex> active_;
        int weight_ = 0;
        int best_ = -1;
        std::vector<int> best_f_;
    };

} // namespace

SolveResult alpha_h_exact(const Tree &t, const SolveLimits &limits)
{
    limits.validate();
    HearingSearch search(t, Budget(limits));
    search.dfs(0);
    return finish(t, search.best(), search.best_strengths(), search.budget().exhausted(), search.budget().nodes());
}

SolveResult solve_alpha_bn(const Tree &t, const SolveLimits &limits)
{
    switch (limits.mode) {
    case SolveMode::PureEnum: return alpha_bn_enum(t, limits);
    case SolveMode::Restricted: return alpha_bn_restricted(t, limits);
    case SolveMode::Pruned: break;
    }
    return alpha_bn_exact(t, limits);
}

} // namespace bnb
