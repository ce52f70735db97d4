#include "bnb/bounds.hpp"

#include "bnb/error.hpp"
#include "bnb/independence.hpp"
#include "bnb/profile.hpp"

#include <algorithm>

namespace bnb {

namespace {

    void require_branch_vertex(const TreeProfile &p)
    {
        if (p.b() == 0)
            throw Error(ErrorCode::NoBranchVertices, "bound is stated for trees with a branch vertex");
    }

    int alpha_of_r_set(const Tree &t, const TreeProfile &p)
    {
        return alpha_forest(induced_subgraph(t, p.r_set).graph).size;
    }

} // namespace

LowerBoundWitness lower_bound_witness(const Tree &t)
{
    TreeProfile p = profile(t);
    require_branch_vertex(p);

    IndependentSet local = alpha_forest(p.interior.graph);
    std::vector<Vertex> x;
    for (Vertex v : local.members)
        x.push_back(p.interior.to_host[v]);
    auto in_x = [&](Vertex v) { return std::binary_search(x.begin(), x.end(), v); };

    std::vector<int> f(t.order(), 0);
    for (Vertex b : p.b2plus)
        for (Vertex l : p.leaf_sets.at(b))
            f[l] = t.distance(b, l);
    for (Vertex b : p.b1) {
        Vertex l = p.leaf_sets.at(b).front();
        f[l] = t.distance(b, l) + (in_x(b) ? 1 : 0);
    }
    for (Vertex v : x)
        if (t.degree(v) == 2 || p.leaf_sets.at(v).empty())
            f[v] = 1;

    const int expected = t.order() - p.b() - static_cast<int>(p.w_int.size()) + local.size;
    Broadcast g(t, std::move(f));
    if (g.weight() != expected)
        throw Error(ErrorCode::Inconsistency,
            "lower-bound broadcast has weight " + std::to_string(g.weight()) + ", expected " + std::to_string(expected));
    if (auto bad = find_bn_violation(g))
        throw Error(ErrorCode::Inconsistency,
            "lower-bound broadcast overlaps at vertex " + std::to_string(bad->vertex));
    return {expected, std::move(g)};
}

int upper_bound(const Tree &t)
{
    TreeProfile p = profile(t);
    require_branch_vertex(p);
    return t.order() - p.b() + p.rho();
}

int conjectured_upper(const Tree &t)
{
    TreeProfile p = profile(t);
    require_branch_vertex(p);
    return t.order() - p.b() + alpha_of_r_set(t, p);
}

int formula_path_spider(const Tree &t)
{
    auto shape = classify_shape(t);
    if (!shape.contains(Shape::Path) && !shape.contains(Shape::Spider))
        throw Error(ErrorCode::ShapeMismatch, "tree is neither a path nor a generalized spider");
    return t.order() - 1;
}

int formula_two_branch(const Tree &t)
{
    TreeProfile p = profile(t);
    if (p.b() != 2)
        throw Error(ErrorCode::ShapeMismatch, "tree has " + std::to_string(p.b()) + " branch vertices, not 2");
    Vertex b1 = p.branch[0], b2 = p.branch[1];
    int half = (t.distance(b1, b2) + 1) / 2;
    int worst = std::min({half, p.loss_table.at(b1).loss, p.loss_table.at(b2).loss});
    return t.order() - 1 - worst;
}

int formula_caterpillar(const Tree &t)
{
    if (!classify_shape(t).contains(Shape::Caterpillar))
        throw Error(ErrorCode::ShapeMismatch, "tree is not a caterpillar");
    TreeProfile p = profile(t);
    if (p.b() == 0)
        throw Error(ErrorCode::ShapeMismatch, "caterpillar has no branch vertex");
    if (!p.w_int.empty())
        throw Error(ErrorCode::ShapeMismatch, "caterpillar has internal degree-2 vertices");
    if (induced_subgraph(t, p.branch).graph.component_count() != 1)
        throw Error(ErrorCode::ShapeMismatch, "branch vertices do not induce a path");
    if (alpha_of_r_set(t, p) != p.rho())
        throw Error(ErrorCode::ShapeMismatch, "R(T) is not independent");
    return t.order() - p.b() + p.rho();
}

std::optional<FormulaValue> applicable_formula(const Tree &t)
{
    auto shape = classify_shape(t);
    if (shape.contains(Shape::Path) || shape.contains(Shape::Spider))
        return FormulaValue{"PathSpider", formula_path_spider(t)};
    try {
        return FormulaValue{"TwoBranch", formula_two_branch(t)};
    }
    catch (const Error &) {
    }
    try {
        return FormulaValue{"Caterpillar", formula_caterpillar(t)};
    }
    catch (const Error &) {
    }
    return std::nullopt;
}

std::optional<bool> BoundsReport::question1_holds() const
{
    if (!exact || !conjectured)
        return std::nullopt;
    return *exact <= *conjectured;
}

BoundsReport compute(const Tree &t, const ComputeOptions &options)
{
    TreeProfile p = profile(t);
    BoundsReport r;
    r.n = t.order();
    r.b_t = p.b();
    r.rho = p.rho();
    r.w_int_size = static_cast<int>(p.w_int.size());
    r.alpha_int = alpha_forest(p.interior.graph).size;
    r.alpha_r = alpha_of_r_set(t, p);
    r.is_path = p.b() == 0;
    if (!r.is_path) {
        auto lb = lower_bound_witness(t);
        r.lower = lb.value;
        r.witness_lower = std::move(lb.broadcast);
        r.upper = r.n - r.b_t + r.rho;
        r.conjectured = r.n - r.b_t + r.alpha_r;
    }
    r.formula = applicable_formula(t);

    if (options.run_exact) {
        SolveResult s = solve_alpha_bn(t, options.limits);
        r.exact_nodes = s.nodes;
        if (s.optimal()) {
            r.exact = s.value;
            r.witness_exact = std::move(s.witness);
        }
        else {
            r.exact_budget_exceeded = true;
            r.exact_lower_found = s.value;
        }
    }

    auto fail = [](const std::string &what) { throw Error(ErrorCode::Inconsistency, what); };
    if (r.exact) {
        if (r.lower && *r.lower > *r.exact)
            fail("lower bound " + std::to_string(*r.lower) + " exceeds exact value " + std::to_string(*r.exact));
        if (r.upper && *r.exact > *r.upper)
            fail("exact value " + std::to_string(*r.exact) + " exceeds upper bound " + std::to_string(*r.upper));
        if (r.formula && r.formula->value != *r.exact)
            fail(r.formula->name + " formula gives " + std::to_string(r.formula->value) + ", exact search gives "
                + std::to_string(*r.exact));
    }
    if (r.exact_lower_found && r.upper && *r.exact_lower_found > *r.upper)
        fail("budget-limited search found weight above the upper bound");
    return r;
}

OptimaReport optimal_broadcast_properties(const Tree &t, const std::vector<Broadcast> &all_optima, bool cap_hit)
{
    OptimaReport rep;
    rep.optima = all_optima.size();
    if (cap_hit) {
        rep.skipped = true;
        return rep;
    }
    TreeProfile p = profile(t);
    for (const Broadcast &f : all_optima) {
        bool offends = false;
        for (Vertex l : p.leaves)
            for (Vertex v : f.broadcasters())
                if (!p.is_leaf(v) && f.hears(l, v))
                    offends = true;
        if (offends && rep.no_leaf_hears_nonleaf) {
            rep.no_leaf_hears_nonleaf = false;
            rep.leaf_hearing_offender = f;
        }

        bool leaf_only = true;
        for (Vertex v = 0; v < t.order(); ++v)
            if (!p.is_leaf(v) && f[v] > 1)
                leaf_only = false;
        if (!leaf_only)
            continue;
        ++rep.restricted_optima;
        ++rep.leaf_only_family;
        bool by_two = false;
        for (Vertex l : p.leaves)
            for (Vertex b : p.branch)
                if (f[l] > 0 && f[l] - t.distance(l, b) == 2)
                    by_two = true;
        if (by_two)
            ++rep.overdominate_by_two;
    }
    rep.restricted_optimum_exists = rep.restricted_optima > 0;
    return rep;
}

} // namespace bnb
