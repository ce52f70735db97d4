#pragma once

// Exact maximum-weight broadcast searches.
//
//  alpha_bn_enum        full product of {0..e(v)} filtered by the pairwise
//                       boundary-independence test; ground truth for small n
//  alpha_bn_exact       depth-first search over edge ownership with pruning
//  alpha_bn_restricted  the same search with non-leaf strengths in {0,1}
//  alpha_h_exact        depth-first search for hearing independence
//
// The depth-first search relies on the fact that a broadcast on a forest is
// boundary independent exactly when the edge sets covered by distinct
// broadcasters are pairwise disjoint, and that a broadcaster v of strength s
// covers the |N_f(v)| - 1 >= s edges of its ball.

#include "bnb/broadcast.hpp"
#include "bnb/graph.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace bnb {

enum class SolveMode { PureEnum, Pruned, Restricted };

struct SolveLimits {
    std::uint64_t max_nodes = 4'000'000'000ULL;
    std::chrono::milliseconds time_budget{600'000};
    SolveMode mode = SolveMode::Pruned;

    /// Throws BadSpec unless both budgets are positive.
    void validate() const;
};

enum class SolveStatus { Optimal, BudgetExceeded };

struct SolveResult {
    int value = 0;          // best weight found; a lower bound when not optimal
    Broadcast witness{Forest{}}; // a broadcast attaining value
    SolveStatus status = SolveStatus::Optimal;
    std::uint64_t nodes = 0;

    [[nodiscard]] bool optimal() const noexcept { return status == SolveStatus::Optimal; }
};

/// Individually switchable pruning rules of the depth-first search.
struct PruningRules {
    bool partial_independence = true; // reject a strength whose ball meets an owned edge
    bool edge_budget = true;          // total covered edges stay within n - 1
    bool completion_bound = true;     // weight + optimistic remainder must beat the incumbent
};

struct EnumResult {
    SolveResult best;
    std::vector<Broadcast> optima; // every optimum, in enumeration order
    bool optima_cap_hit = false;
};

inline constexpr std::size_t kDefaultOptimaCap = 1'000'000;

SolveResult alpha_bn_enum(const Tree &t, const SolveLimits &limits = {});
EnumResult alpha_bn_enum_all(const Tree &t, const SolveLimits &limits = {}, std::size_t optima_cap = kDefaultOptimaCap);

SolveResult alpha_bn_exact(const Tree &t, const SolveLimits &limits = {}, const PruningRules &rules = {});

/// OpenMP variant of alpha_bn_exact. The top two levels of the search are
/// split into independent tasks sharing only the best weight found so far.
/// Returns the same value and witness as the serial search. threads <= 0
/// uses the OpenMP default.
SolveResult alpha_bn_exact_parallel(const Tree &t, const SolveLimits &limits = {}, int threads = 0);

SolveResult alpha_bn_restricted(const Tree &t, const SolveLimits &limits = {});

SolveResult alpha_h_exact(const Tree &t, const SolveLimits &limits = {});

/// Dispatches on limits.mode.
SolveResult solve_alpha_bn(const Tree &t, const SolveLimits &limits);

} // namespace bnb
