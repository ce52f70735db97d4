#pragma once

// Bounds and closed formulas for the boundary independence number of a tree,
// the constructive lower-bound broadcast, and the dispatching front end.

#include "bnb/broadcast.hpp"
#include "bnb/exact.hpp"
#include "bnb/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bnb {

struct LowerBoundWitness {
    int value = 0;
    Broadcast broadcast;
};

/// Builds the boundary independent broadcast of weight
/// n - b(T) - |W_int(T)| + α(Int(T)) from a maximum independent set X of
/// Int(T):
///   leaves of b in B_{>=2} ∪ (B_1 - X) broadcast exactly to b,
///   the leaf of b in X ∩ B_1 broadcasts one step past b,
///   members of X in B_0 ∪ W_int broadcast with strength 1.
/// The result is re-verified; a failure throws Inconsistency. Throws
/// NoBranchVertices on paths.
LowerBoundWitness lower_bound_witness(const Tree &t);

/// n - b(T) + ρ(T). Throws NoBranchVertices.
int upper_bound(const Tree &t);

/// n - b(T) + α(T[R(T)]). Throws NoBranchVertices.
int conjectured_upper(const Tree &t);

/// n - 1 for paths and generalized spiders. Throws ShapeMismatch.
int formula_path_spider(const Tree &t);

/// n - 1 - min(⌈d(b1,b2)/2⌉, loss(b1), loss(b2)) for exactly two branch
/// vertices. Throws ShapeMismatch.
int formula_two_branch(const Tree &t);

/// n - b(T) + ρ(T) for caterpillars with no internal degree-2 vertex whose
/// branch vertices induce a path and whose R(T) is empty or independent.
/// Throws ShapeMismatch.
int formula_caterpillar(const Tree &t);

struct FormulaValue {
    std::string name; // "PathSpider", "TwoBranch" or "Caterpillar"
    int value = 0;
};

/// First applicable formula in the order path/spider, two-branch,
/// caterpillar.
std::optional<FormulaValue> applicable_formula(const Tree &t);

struct BoundsReport {
    int n = 0;
    int b_t = 0;
    int rho = 0;
    int w_int_size = 0;
    int alpha_int = 0;
    int alpha_r = 0; // α(T[R(T)])
    bool is_path = false;
    std::optional<int> lower;
    std::optional<int> upper;
    std::optional<int> conjectured;
    std::optional<FormulaValue> formula;
    std::optional<int> exact;
    bool exact_budget_exceeded = false;
    std::optional<int> exact_lower_found; // best weight found when the budget ran out
    std::uint64_t exact_nodes = 0;
    std::optional<Broadcast> witness_lower;
    std::optional<Broadcast> witness_exact;

    /// Whether exact <= conjectured; unset without both values.
    [[nodiscard]] std::optional<bool> question1_holds() const;
};

struct ComputeOptions {
    bool run_exact = true;
    SolveLimits limits{};
};

/// Fills every applicable bound and formula and, when requested, the exact
/// value. Throws Inconsistency if the exact value leaves [lower, upper] or
/// disagrees with an applicable formula. Budget exhaustion is reported
/// through exact_budget_exceeded.
BoundsReport compute(const Tree &t, const ComputeOptions &options = {});

/// Checks on the full set of optimal broadcasts of a small tree.
struct OptimaReport {
    std::size_t optima = 0;
    bool skipped = false;                 // optima cap hit, checks not run
    bool no_leaf_hears_nonleaf = true;    // holds on every optimum
    std::optional<Broadcast> leaf_hearing_offender;
    std::size_t restricted_optima = 0;    // optima with all non-leaf strengths <= 1
    bool restricted_optimum_exists = false;
    // Among optima where only leaves exceed strength 1: how many have a
    // leaf overdominating some branch vertex by exactly two.
    std::size_t leaf_only_family = 0;
    std::size_t overdominate_by_two = 0;
};

OptimaReport optimal_broadcast_properties(const Tree &t, const std::vector<Broadcast> &all_optima, bool cap_hit = false);

} // namespace bnb
