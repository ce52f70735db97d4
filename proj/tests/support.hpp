#pragma once

// Fixtures and brute-force oracles shared by the test binaries. The oracles
// only use distances and eccentricities of the host; none of them call the
// library's broadcast predicates or solvers.

#include "bnb/error.hpp"
#include "bnb/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace bnb::test {

template <class F>
std::optional<ErrorCode> error_code_of(F &&f)
{
    try {
        f();
    }
    catch (const Error &e) {
        return e.code();
    }
    return std::nullopt;
}

// ---- fixtures ----

/// n = 26, b = 6, |W_int| = 4, α(Int) = 4, ρ = 3.
/// b1..b6 = 0..5, w1..w4 = 6..9 (internal degree-2 vertices).
///   b1 (B≥2): leaf 10, leg 11-12, and 6-7 towards b2
///   b2 (B1):  leaf 13, neighbours 7 and b3
///   b3 (B0):  neighbours b2, b4 and 8-9 towards b5
///   b5 (B≥2): legs 14-15-16 and 17-18-19
///   b4 (B1):  neighbours b3, b6 and leg 20-21
///   b6 (B≥2): legs 22-23 and 24-25
Tree construction_tree();

/// n = 18, b = 6, B0 = {0}, B1 = {2}, W_int empty; 0 and 2 are not adjacent.
Tree order18_tree();

/// Double spider with two legs of length 2 at each head and heads 5 apart.
Tree d14();

// ---- oracles ----

/// Maximum weight of a boundary independent broadcast, by extending partial
/// assignments vertex by vertex and testing the neighbourhood/boundary
/// definition on every broadcaster pair. No bounding.
int brute_alpha_bn(const Tree &t);

/// Same for hearing independence.
int brute_alpha_h(const Tree &t);

/// Subset enumeration; order at most 24.
int brute_alpha(const Forest &g);

/// Definition-level test on a raw strength vector.
bool definition_bn_independent(const Forest &g, const std::vector<int> &f);

/// Calls visit on every strength vector with 0 <= f(v) <= e(v); stops when
/// visit returns false.
void for_each_strength_vector(const Forest &g, const std::function<bool(const std::vector<int> &)> &visit);

/// Minimum canonical level sequence over centroid rootings; equal exactly
/// for isomorphic trees.
std::vector<int> canonical_form(const Tree &t);

/// Number of unlabelled trees of order n from Prüfer sequences whose label
/// multiplicities are non-increasing, deduplicated by the minimum canonical
/// level sequence over centroid rootings.
std::size_t prufer_class_count(int n);

} // namespace bnb::test
