#include "support.hpp"

#include "bnb/bounds.hpp"
#include "bnb/corpus.hpp"
#include "bnb/exact.hpp"
#include "bnb/independence.hpp"
#include "bnb/profile.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bnb;
using bnb::test::error_code_of;

namespace {

Tree path(int n) { return build_family(PathSpec{n}); }
Tree spider(std::vector<int> legs) { return build_family(SpiderSpec{std::move(legs)}); }
Tree star(int k) { return spider(std::vector<int>(k, 1)); }
Tree dspider(std::vector<int> a, int bridge, std::vector<int> b)
{
    return build_family(DoubleSpiderSpec{std::move(a), bridge, std::move(b)});
}
Tree caterpillar(std::vector<int> leaves, std::vector<int> spacing = {})
{
    return build_family(CaterpillarSpec{std::move(leaves), std::move(spacing)});
}

void check_witness(const Tree &t, const SolveResult &r)
{
    CHECK(r.witness.host().same_graph(t));
    CHECK(r.witness.weight() == r.value);
    CHECK(is_bn_independent(r.witness));
}

} // namespace

TEST_CASE("independence number of forests")
{
    CHECK(alpha_forest(Forest{}).size == 0);
    CHECK(alpha_forest(Forest{}).members.empty());
    CHECK(alpha_forest(path(4)).size == 2);
    CHECK(alpha_forest(spider({2, 2, 2})).size == 4);
    CHECK(alpha_forest(spider({2, 2, 2, 2})).size == 5);

    // Ties exclude the root, which is the lowest vertex of its component.
    CHECK(alpha_forest(path(2)).members == std::vector<Vertex>{1});
    CHECK(alpha_forest(path(3)).members == std::vector<Vertex>{0, 2});
    CHECK(alpha_forest(path(4)).members == std::vector<Vertex>{1, 3});

    for (int n = 1; n <= 10; ++n)
        for (const Tree &t : enumerate_trees(n)) {
            IndependentSet s = alpha_forest(t);
            CHECK(s.size == test::brute_alpha(t));
            CHECK(static_cast<int>(s.members.size()) == s.size);
            CHECK(std::is_sorted(s.members.begin(), s.members.end()));
            for (const Edge &e : t.edges())
                CHECK_FALSE((std::binary_search(s.members.begin(), s.members.end(), e.u)
                    && std::binary_search(s.members.begin(), s.members.end(), e.v)));
            TreeProfile p = profile(t);
            CHECK(alpha_forest(p.interior.graph).size == test::brute_alpha(p.interior.graph));
        }
}

TEST_CASE("exhaustive enumeration solver")
{
    CHECK(alpha_bn_enum(path(2)).value == 1);
    CHECK(alpha_bn_enum(path(5)).value == 4);
    CHECK(alpha_bn_enum(star(3)).value == 3);
    CHECK(alpha_bn_enum(Tree{}).value == 0);
    check_witness(path(5), alpha_bn_enum(path(5)));
}

TEST_CASE("pruned solver")
{
    CHECK(alpha_bn_exact(spider({2, 2, 2})).value == 6);
    CHECK(alpha_bn_exact(spider({2, 2, 2, 2})).value == 8);
    SolveResult d = alpha_bn_exact(test::d14());
    CHECK(d.value == 11);
    CHECK(d.optimal());
    check_witness(test::d14(), d);
    CHECK(alpha_bn_exact(Tree{}).value == 0);
    CHECK(alpha_bn_exact(test::order18_tree()).value == 14);
    CHECK(test::brute_alpha_bn(test::d14()) == 11);
    CHECK(test::brute_alpha_bn(test::order18_tree()) == 14);
}

TEST_CASE("restricted solver")
{
    SolveResult p = alpha_bn_restricted(path(5));
    CHECK(p.value == 4);
    CHECK(p.witness.weight() == 4);
    CHECK(alpha_bn_restricted(spider({2, 2, 2})).value == 6);
    SolveResult d = alpha_bn_restricted(test::d14());
    CHECK(d.value == 11);
    check_witness(test::d14(), d);
    TreeProfile prof = profile(test::d14());
    for (Vertex v = 0; v < 14; ++v)
        if (!prof.is_leaf(v))
            CHECK(d.witness[v] <= 1);
}

TEST_CASE("hearing independence solver")
{
    CHECK(alpha_h_exact(path(2)).value == 1);
    CHECK(alpha_h_exact(star(3)).value == 3);
    CHECK(test::brute_alpha_h(star(3)) == 3);
    for (int n = 2; n <= 7; ++n)
        for (const Tree &t : enumerate_trees(n)) {
            SolveResult h = alpha_h_exact(t);
            CHECK(h.value == test::brute_alpha_h(t));
            CHECK(is_hearing_independent(h.witness));
            CHECK(h.witness.weight() == h.value);
        }
}

TEST_CASE("solvers agree with the brute-force oracle")
{
    for (int n = 1; n <= 8; ++n)
        for (const Tree &t : enumerate_trees(n)) {
            int truth = test::brute_alpha_bn(t);
            SolveResult exact = alpha_bn_exact(t);
            CHECK(exact.value == truth);
            check_witness(t, exact);
            CHECK(alpha_bn_restricted(t).value == truth);
            if (n <= 7) {
                SolveResult e = alpha_bn_enum(t);
                CHECK(e.value == truth);
                check_witness(t, e);
            }
        }
}

TEST_CASE("every pruning rule is optional")
{
    for (int mask = 0; mask < 8; ++mask) {
        PruningRules rules{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
        for (int n = 1; n <= 7; ++n)
            for (const Tree &t : enumerate_trees(n)) {
                SolveResult r = alpha_bn_exact(t, {}, rules);
                CHECK(r.value == alpha_bn_enum(t).value);
                check_witness(t, r);
            }
    }
}

TEST_CASE("parallel solver reproduces the serial witness")
{
    std::vector<Tree> trees;
    for (int n = 1; n <= 9; ++n)
        for (const Tree &t : enumerate_trees(n))
            trees.push_back(t);
    trees.push_back(test::d14());
    trees.push_back(dspider({2, 3}, 4, {3, 3}));
    for (const Tree &t : trees) {
        SolveResult serial = alpha_bn_exact(t);
        for (int threads : {1, 2, 4}) {
            SolveResult par = alpha_bn_exact_parallel(t, {}, threads);
            CHECK(par.value == serial.value);
            CHECK(par.witness == serial.witness);
            CHECK(par.optimal());
        }
    }
}

TEST_CASE("budgets")
{
    SolveLimits tiny;
    tiny.max_nodes = 1;
    SolveResult r = alpha_bn_exact(test::d14(), tiny);
    CHECK_FALSE(r.optimal());
    CHECK(r.value <= 11);
    check_witness(test::d14(), r);
    CHECK_FALSE(alpha_bn_enum(test::d14(), tiny).optimal());
    CHECK_FALSE(alpha_h_exact(test::d14(), tiny).optimal());
    CHECK_FALSE(alpha_bn_exact_parallel(test::d14(), tiny, 2).optimal());

    SolveLimits zero;
    zero.max_nodes = 0;
    CHECK(error_code_of([&] { zero.validate(); }) == ErrorCode::BadSpec);
    SolveLimits no_time;
    no_time.time_budget = std::chrono::milliseconds(0);
    CHECK(error_code_of([&] { alpha_bn_exact(path(3), no_time); }) == ErrorCode::BadSpec);

    BoundsReport rep = compute(test::d14(), ComputeOptions{true, tiny});
    CHECK(rep.exact_budget_exceeded);
    CHECK_FALSE(rep.exact.has_value());
    CHECK(rep.exact_lower_found.has_value());
}

TEST_CASE("solve_alpha_bn dispatches on the mode")
{
    Tree t = test::d14();
    for (SolveMode m : {SolveMode::Pruned, SolveMode::Restricted}) {
        SolveLimits l;
        l.mode = m;
        CHECK(solve_alpha_bn(t, l).value == 11);
    }
    SolveLimits e;
    e.mode = SolveMode::PureEnum;
    CHECK(solve_alpha_bn(spider({1, 2, 2}), e).value == 5);
}

TEST_CASE("lower-bound construction")
{
    auto c = lower_bound_witness(test::construction_tree());
    CHECK(c.value == 20);
    CHECK(c.broadcast.weight() == 20);
    CHECK(is_bn_independent(c.broadcast));

    auto d = lower_bound_witness(test::d14());
    CHECK(d.value == 10);
    CHECK(is_bn_independent(d.broadcast));

    Tree sp = spider({2, 2, 2});
    auto s = lower_bound_witness(sp);
    CHECK(s.value == 6);
    for (Vertex l : profile(sp).leaves)
        CHECK(s.broadcast[l] == 2);

    CHECK(error_code_of([] { lower_bound_witness(path(5)); }) == ErrorCode::NoBranchVertices);

    // Valid on every tree with a branch vertex up to order 12.
    for (int n = 4; n <= 12; ++n)
        for_each_tree(n, [](const Tree &t) {
            TreeProfile p = profile(t);
            if (p.b() == 0)
                return true;
            auto w = lower_bound_witness(t);
            int expected = t.order() - p.b() - static_cast<int>(p.w_int.size()) + alpha_forest(p.interior.graph).size;
            CHECK(w.value == expected);
            CHECK(w.broadcast.weight() == expected);
            CHECK(is_bn_independent(w.broadcast));
            CHECK(find_double_cover(w.broadcast) == std::nullopt);
            return true;
        });
}

TEST_CASE("upper and conjectured bounds")
{
    CHECK(upper_bound(test::construction_tree()) == 23);
    CHECK(upper_bound(test::d14()) == 12);
    CHECK(upper_bound(test::order18_tree()) == 14);
    CHECK(error_code_of([] { upper_bound(path(4)); }) == ErrorCode::NoBranchVertices);

    CHECK(conjectured_upper(test::d14()) == 12);
    CHECK(conjectured_upper(test::order18_tree()) == upper_bound(test::order18_tree()));
    // R = {1, 2, 3} induces a path on three vertices.
    Tree c = test::construction_tree();
    TreeProfile p = profile(c);
    CHECK(p.r_set == std::vector<Vertex>{1, 2, 3});
    CHECK(test::brute_alpha(induced_subgraph(c, p.r_set).graph) == 2);
    CHECK(conjectured_upper(c) == 22);
    CHECK(error_code_of([] { conjectured_upper(path(4)); }) == ErrorCode::NoBranchVertices);
}

TEST_CASE("path and spider formula")
{
    CHECK(formula_path_spider(path(9)) == 8);
    CHECK(formula_path_spider(spider({1, 1, 1})) == 3);
    CHECK(formula_path_spider(spider({3, 4, 5})) == 12);
    CHECK(alpha_bn_exact(spider({3, 4, 5})).value == 12);
    CHECK(error_code_of([] { formula_path_spider(test::d14()); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("two branch vertex formula")
{
    CHECK(formula_two_branch(test::d14()) == 11);

    Tree double_star = dspider({1, 1}, 1, {1, 1});
    CHECK(double_star.order() == 6);
    CHECK(formula_two_branch(double_star) == 4);
    CHECK(test::brute_alpha_bn(double_star) == 4);
    CHECK(upper_bound(double_star) == 4);

    Tree uneven = dspider({1, 3}, 4, {2, 2});
    CHECK(uneven.order() == 13);
    TreeProfile p = profile(uneven);
    CHECK(p.loss_table.at(0).loss == 1);
    CHECK(p.loss_table.at(1).loss == 2);
    CHECK(formula_two_branch(uneven) == 11);
    CHECK(alpha_bn_exact(uneven).value == 11);
    CHECK(alpha_bn_restricted(uneven).value == 11);
    CHECK(test::brute_alpha_bn(uneven) == 11);

    CHECK(error_code_of([] { formula_two_branch(spider({2, 2, 2})); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("caterpillar formula")
{
    Tree three = caterpillar({2, 2, 2});
    CHECK(three.order() == 9);
    CHECK(formula_caterpillar(three) == 6);
    CHECK(test::brute_alpha_bn(three) == 6);

    Tree mid = caterpillar({2, 1, 2});
    CHECK(mid.order() == 8);
    CHECK(profile(mid).rho() == 1);
    CHECK(formula_caterpillar(mid) == 6);
    CHECK(test::brute_alpha_bn(mid) == 6);

    CHECK(formula_caterpillar(star(4)) == 4);
    CHECK(formula_path_spider(star(4)) == 4);

    CHECK(error_code_of([] { formula_caterpillar(caterpillar({2, 2}, {2})); }) == ErrorCode::ShapeMismatch);
    CHECK(error_code_of([] { formula_caterpillar(test::d14()); }) == ErrorCode::ShapeMismatch);
    CHECK(error_code_of([] { formula_caterpillar(path(5)); }) == ErrorCode::ShapeMismatch);
    // Adjacent single-leaf stems make R(T) dependent.
    CHECK(error_code_of([] { formula_caterpillar(caterpillar({2, 1, 1, 2})); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("formula precedence")
{
    CHECK(applicable_formula(star(4))->name == "PathSpider");
    CHECK(applicable_formula(path(4))->name == "PathSpider");
    CHECK(applicable_formula(test::d14())->name == "TwoBranch");
    CHECK(applicable_formula(dspider({1, 1}, 1, {1, 1}))->name == "TwoBranch");
    CHECK(applicable_formula(caterpillar({2, 2, 2}))->name == "Caterpillar");
    CHECK_FALSE(applicable_formula(test::construction_tree()).has_value());
}

TEST_CASE("compute")
{
    BoundsReport d = compute(test::d14());
    CHECK(d.lower == 10);
    CHECK(d.exact == 11);
    CHECK(d.upper == 12);
    CHECK(d.conjectured == 12);
    REQUIRE(d.formula.has_value());
    CHECK(d.formula->name == "TwoBranch");
    CHECK(d.formula->value == 11);
    CHECK(d.question1_holds() == true);
    REQUIRE(d.witness_exact.has_value());
    CHECK(d.witness_exact->weight() == 11);

    BoundsReport s = compute(spider({2, 2, 2}));
    CHECK(s.lower == 6);
    CHECK(s.exact == 6);
    CHECK(s.upper == 6);

    BoundsReport p = compute(path(6));
    CHECK(p.is_path);
    CHECK(p.formula->value == 5);
    CHECK_FALSE(p.lower.has_value());
    CHECK_FALSE(p.upper.has_value());
    CHECK(p.exact == 5);
    CHECK_FALSE(p.question1_holds().has_value());

    BoundsReport skip = compute(test::d14(), ComputeOptions{false, {}});
    CHECK_FALSE(skip.exact.has_value());
    CHECK(skip.lower == 10);
}

TEST_CASE("properties of optimal broadcasts")
{
    EnumResult p5 = alpha_bn_enum_all(path(5));
    OptimaReport r = optimal_broadcast_properties(path(5), p5.optima);
    CHECK(r.no_leaf_hears_nonleaf);
    CHECK(r.optima == p5.optima.size());

    EnumResult sp = alpha_bn_enum_all(spider({2, 2, 2}));
    OptimaReport s = optimal_broadcast_properties(spider({2, 2, 2}), sp.optima);
    CHECK(s.restricted_optimum_exists);
    CHECK(s.no_leaf_hears_nonleaf);

    EnumResult capped = alpha_bn_enum_all(path(5), {}, 1);
    CHECK(capped.optima_cap_hit);
    CHECK(capped.optima.size() == 1);
    CHECK(optimal_broadcast_properties(path(5), capped.optima, true).skipped);

    for (int n = 2; n <= 6; ++n)
        for (const Tree &t : enumerate_trees(n)) {
            EnumResult all = alpha_bn_enum_all(t);
            CHECK_FALSE(all.optima_cap_hit);
            for (const Broadcast &f : all.optima) {
                CHECK(f.weight() == all.best.value);
                CHECK(test::definition_bn_independent(t, std::vector<int>(f.strengths().begin(), f.strengths().end())));
            }
            OptimaReport rep = optimal_broadcast_properties(t, all.optima);
            CHECK(rep.no_leaf_hears_nonleaf);
            CHECK(rep.restricted_optimum_exists);
        }
}

TEST_CASE("sandwich and characterization up to order 9")
{
    for (int n = 2; n <= 9; ++n)
        for (const Tree &t : enumerate_trees(n)) {
            int exact = alpha_bn_exact(t).value;
            auto shape = classify_shape(t);
            bool ps = shape.contains(Shape::Path) || shape.contains(Shape::Spider);
            CHECK((exact == n - 1) == ps);
            if (profile(t).b() == 0)
                continue;
            CHECK(lower_bound_witness(t).value <= exact);
            CHECK(exact <= upper_bound(t));
        }
}

TEST_CASE("closed formulas agree with the exact value")
{
    for (int n = 2; n <= 10; ++n)
        for (const Tree &t : enumerate_trees(n)) {
            int exact = alpha_bn_exact(t).value;
            auto shape = classify_shape(t);
            if (shape.contains(Shape::Path) || shape.contains(Shape::Spider))
                CHECK(formula_path_spider(t) == exact);
            if (profile(t).b() == 2)
                CHECK(formula_two_branch(t) == exact);
            if (auto c = error_code_of([&] { formula_caterpillar(t); }); !c)
                CHECK(formula_caterpillar(t) == exact);
        }
}

TEST_CASE("independence chain up to order 8")
{
    for (int n = 2; n <= 8; ++n)
        for (const Tree &t : enumerate_trees(n)) {
            int a = alpha_forest(t).size;
            int bn = alpha_bn_exact(t).value;
            int h = alpha_h_exact(t).value;
            CHECK(a <= bn);
            CHECK(bn <= h);
            CHECK(h < 2 * bn);
        }
}

TEST_CASE("double spiders strictly between the bounds")
{
    int family = 0;
    for (int a1 = 2; a1 <= 3; ++a1)
        for (int a2 = a1; a2 <= 3; ++a2)
            for (int c1 = 2; c1 <= 3; ++c1)
                for (int c2 = c1; c2 <= 3; ++c2)
                    for (int bridge = 1; bridge <= 8; ++bridge) {
                        Tree t = dspider({a1, a2}, bridge, {c1, c2});
                        TreeProfile p = profile(t);
                        int l1 = p.loss_table.at(0).loss, l2 = p.loss_table.at(1).loss;
                        int half = (bridge + 1) / 2;
                        if (std::min(l1, l2) < 2 || std::max(l1, l2) >= half)
                            continue;
                        ++family;
                        int exact = alpha_bn_exact(t).value;
                        CHECK(lower_bound_witness(t).value < exact);
                        CHECK(exact < upper_bound(t));
                        CHECK(formula_two_branch(t) == exact);
                    }
    CHECK(family > 0);
}

TEST_CASE("spiders with legs of length two")
{
    for (int k = 3; k <= 4; ++k) {
        Tree t = spider(std::vector<int>(k, 2));
        CHECK(alpha_bn_exact(t).value == 2 * k);
        CHECK(alpha_forest(t).size == k + 1);
    }
}
