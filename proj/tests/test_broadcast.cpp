#include "support.hpp"

#include "bnb/bounds.hpp"
#include "bnb/broadcast.hpp"
#include "bnb/corpus.hpp"
#include "bnb/independence.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bnb;
using bnb::test::error_code_of;

namespace {

Tree path(int n) { return build_family(PathSpec{n}); }
Tree star(int k) { return build_family(SpiderSpec{std::vector<int>(k, 1)}); }

bool contains(const std::vector<Vertex> &v, Vertex x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Maximal by definition: no single-step increase stays boundary independent.
// Lowering strengths preserves boundary independence, so any larger
// independent broadcast passes through such a step.
bool maximal_by_definition(const Forest &g, std::vector<int> f)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f[v] == g.eccentricity(v))
            continue;
        ++f[v];
        bool ok = test::definition_bn_independent(g, f);
        --f[v];
        if (ok)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("make_broadcast validation")
{
    Tree p3 = path(3);
    Broadcast f = make_broadcast(p3, {2, 0, 0});
    CHECK(f.weight() == 2);
    CHECK(error_code_of([&] { make_broadcast(p3, {3, 0, 0}); }) == ErrorCode::StrengthExceedsEccentricity);
    CHECK(error_code_of([&] { make_broadcast(p3, {0, -1, 0}); }) == ErrorCode::NegativeStrength);
    CHECK(error_code_of([&] { make_broadcast(p3, {0, 1}); }) == ErrorCode::BadVertexIndex);

    Tree k13 = star(3);
    Broadcast leaves = make_broadcast(k13, {0, 1, 1, 1});
    CHECK(leaves.weight() == 3);
    CHECK(leaves.broadcasters() == std::vector<Vertex>{1, 2, 3});

    Broadcast zero(p3);
    CHECK(zero.weight() == 0);
    CHECK(zero.broadcasters().empty());
}

TEST_CASE("forest hosts use per-component eccentricity")
{
    std::vector<Edge> edges{{0, 1}, {2, 3}, {3, 4}};
    Forest g = Forest::from_edges(5, edges);
    Broadcast f(g, {1, 0, 2, 0, 0});
    CHECK(f.weight() == 3);
    CHECK(error_code_of([&] { (void)Broadcast(g, {2, 0, 0, 0, 0}); }) == ErrorCode::StrengthExceedsEccentricity);
    CHECK_FALSE(f.hears(2, 0));
}

TEST_CASE("analyze on P5 with both ends at strength 2")
{
    Tree p5 = path(5);
    Broadcast f = make_broadcast(p5, {2, 0, 0, 0, 2});
    BroadcastAnalysis a = analyze(f);
    CHECK(a.v_plus == std::vector<Vertex>{0, 4});
    CHECK(a.v_one.empty());
    CHECK(a.v_plusplus == std::vector<Vertex>{0, 4});
    CHECK(a.sets.at(0).neighbourhood == std::vector<Vertex>{0, 1, 2});
    CHECK(a.sets.at(0).boundary == std::vector<Vertex>{2});
    CHECK(a.sets.at(4).neighbourhood == std::vector<Vertex>{2, 3, 4});
    CHECK(a.sets.at(4).boundary == std::vector<Vertex>{2});
    CHECK(a.undominated.empty());

    std::vector<Edge> covered_by_0;
    for (std::size_t i = 0; i < p5.edges().size(); ++i)
        if (contains(a.covered_by[i], 0))
            covered_by_0.push_back(p5.edges()[i]);
    CHECK(covered_by_0 == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(a.uncovered_edges.empty());
}

TEST_CASE("private boundary by the reduction rule")
{
    Broadcast f = make_broadcast(path(3), {0, 1, 0});
    BroadcastAnalysis a = analyze(f);
    CHECK(a.sets.at(1).private_boundary == std::vector<Vertex>{0, 1, 2});
    CHECK(a.v_one == std::vector<Vertex>{1});

    // A single broadcaster owns its whole neighbourhood.
    Tree t = test::d14();
    Broadcast g = make_broadcast(t, {3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    BroadcastAnalysis b = analyze(g);
    CHECK(b.sets.at(0).private_neighbourhood == b.sets.at(0).neighbourhood);
}

TEST_CASE("domination")
{
    CHECK(is_dominating(make_broadcast(path(4), {3, 0, 0, 0})));
    Broadcast partial = make_broadcast(path(4), {1, 0, 0, 0});
    CHECK_FALSE(is_dominating(partial));
    CHECK(analyze(partial).undominated == std::vector<Vertex>{2, 3});
    CHECK_FALSE(is_dominating(Broadcast(path(2))));
}

TEST_CASE("boundary independence")
{
    CHECK(is_bn_independent(make_broadcast(path(5), {2, 0, 0, 0, 2})));

    Broadcast bad = make_broadcast(path(4), {2, 0, 0, 2});
    CHECK_FALSE(is_bn_independent(bad));
    auto v = find_bn_violation(bad);
    REQUIRE(v.has_value());
    CHECK(v->edge == Edge{1, 2});
    auto cover = find_double_cover(bad);
    REQUIRE(cover.has_value());
    CHECK(cover->edge == Edge{1, 2});

    auto w = lower_bound_witness(test::construction_tree());
    CHECK(is_bn_independent(w.broadcast));
    CHECK(w.broadcast.weight() == 20);
}

TEST_CASE("hearing independence")
{
    CHECK(is_hearing_independent(make_broadcast(path(5), {2, 0, 0, 0, 2})));
    CHECK(is_hearing_independent(make_broadcast(path(4), {2, 0, 0, 2})));
    CHECK_FALSE(is_hearing_independent(make_broadcast(path(4), {3, 0, 0, 1})));
    CHECK(is_hearing_independent(make_broadcast(path(6), {5, 0, 0, 0, 0, 0})));
}

TEST_CASE("maximality")
{
    CHECK(is_maximal_bn(make_broadcast(path(3), {0, 1, 0})));
    CHECK(is_maximal_bn(make_broadcast(path(3), {2, 0, 0})));
    CHECK_FALSE(is_maximal_bn(make_broadcast(path(6), {1, 0, 0, 0, 0, 1})));
    CHECK(is_maximal_bn(make_broadcast(path(5), {2, 0, 0, 0, 2})));
    CHECK(error_code_of([] { is_maximal_bn(make_broadcast(path(4), {2, 0, 0, 2})); })
        == ErrorCode::NotBnIndependent);
}

TEST_CASE("text form")
{
    Tree p5 = path(5);
    Broadcast f = make_broadcast(p5, {2, 0, 0, 0, 2});
    CHECK(to_text(f) == "0:2 4:2");
    CHECK(parse_broadcast(p5, "0:2 4:2") == f);
    CHECK(parse_broadcast(p5, "# comment\n4:2\n\n0:2 # trailing\n") == f);
    CHECK(parse_broadcast(p5, "") == Broadcast(p5));
    CHECK(to_text(Broadcast(p5)).empty());
    CHECK(error_code_of([&] { parse_broadcast(p5, "0-2"); }) == ErrorCode::ParseError);
    CHECK(error_code_of([&] { parse_broadcast(p5, "0:2 0:1"); }) == ErrorCode::ParseError);
    CHECK(error_code_of([&] { parse_broadcast(p5, "0:x"); }) == ErrorCode::ParseError);
    CHECK(error_code_of([&] { parse_broadcast(p5, "9:1"); }) == ErrorCode::BadVertexIndex);
    CHECK(error_code_of([&] { parse_broadcast(p5, "0:5"); }) == ErrorCode::StrengthExceedsEccentricity);
}

TEST_CASE("analysis invariants and predicate agreement on every broadcast of small trees")
{
    for (int n = 2; n <= 6; ++n)
        for (const Tree &t : enumerate_trees(n))
            test::for_each_strength_vector(t, [&](const std::vector<int> &s) {
                Broadcast f(t, s);
                BroadcastAnalysis a = analyze(f);

                std::vector<Vertex> parts = a.v_one;
                parts.insert(parts.end(), a.v_plusplus.begin(), a.v_plusplus.end());
                std::sort(parts.begin(), parts.end());
                CHECK(parts == a.v_plus);

                for (const auto &[v, sets] : a.sets) {
                    for (Vertex x : sets.boundary)
                        CHECK(contains(sets.neighbourhood, x));
                    for (Vertex x : sets.private_neighbourhood)
                        CHECK(contains(sets.neighbourhood, x));
                    if (s[v] >= 2) {
                        std::vector<Vertex> both;
                        std::set_intersection(sets.boundary.begin(), sets.boundary.end(),
                            sets.private_neighbourhood.begin(), sets.private_neighbourhood.end(),
                            std::back_inserter(both));
                        CHECK(sets.private_boundary == both);
                    }
                }

                // Coverage by definition.
                for (std::size_t i = 0; i < t.edges().size(); ++i) {
                    const Edge &e = t.edges()[i];
                    std::vector<Vertex> expect;
                    for (Vertex x : a.v_plus) {
                        int du = t.distance(e.u, x), dv = t.distance(e.v, x);
                        if (du <= s[x] && dv <= s[x] && !(du == s[x] && dv == s[x]))
                            expect.push_back(x);
                    }
                    CHECK(a.covered_by[i] == expect);
                }

                bool def = test::definition_bn_independent(t, s);
                CHECK(is_bn_independent(f) == def);
                CHECK(find_double_cover(f).has_value() == !def);
                CHECK(bn_independent_strengths(t, s) == def);
                CHECK(hearing_independent_strengths(t, s) == is_hearing_independent(f));
                if (def) {
                    // Boundary independent implies hearing independent, and
                    // no edge has two owners.
                    CHECK(is_hearing_independent(f));
                    for (const auto &owners : a.covered_by)
                        CHECK(owners.size() <= 1);

                    bool by_def = maximal_by_definition(t, s);
                    CHECK(is_maximal_bn(f) == by_def);
                    CHECK(maximal_by_private_boundary(f) == by_def);
                    if (a.v_plus.size() >= 2)
                        CHECK(maximal_by_uncovered_components(f) == by_def);
                }
                else {
                    // Raising any strength keeps the violation.
                    std::vector<int> g = s;
                    for (Vertex v = 0; v < n; ++v) {
                        if (g[v] == t.eccentricity(v))
                            continue;
                        ++g[v];
                        CHECK_FALSE(test::definition_bn_independent(t, g));
                        CHECK_FALSE(is_bn_independent(Broadcast(t, g)));
                        --g[v];
                    }
                }

                // analyze is pure.
                BroadcastAnalysis again = analyze(f);
                CHECK(again.covered_by == a.covered_by);
                CHECK(again.undominated == a.undominated);
                return true;
            });
}

TEST_CASE("independent sets give independent broadcasts")
{
    for (int n = 2; n <= 8; ++n)
        for (const Tree &t : enumerate_trees(n))
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> s(n, 0);
                for (Vertex v = 0; v < n; ++v)
                    s[v] = mask >> v & 1u;
                bool independent = true;
                for (const Edge &e : t.edges())
                    if (s[e.u] && s[e.v])
                        independent = false;
                Broadcast f(t, s);
                CHECK(is_bn_independent(f) == independent);
                CHECK(is_hearing_independent(f) == independent);
                if (independent)
                    CHECK(f.weight() == std::popcount(mask));
            }
}
