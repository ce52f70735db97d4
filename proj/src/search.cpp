#include "bnb/search.hpp"

#include "bnb/bounds.hpp"
#include "bnb/corpus.hpp"
#include "bnb/error.hpp"
#include "bnb/independence.hpp"
#include "bnb/profile.hpp"

#include <omp.h>

namespace bnb {

std::string_view to_string(Check c)
{
    switch (c) {
    case Check::Question1: return "question1";
    case Check::Sandwich: return "sandwich";
    case Check::Characterization: return "characterization";
    case Check::Chain: return "chain";
    }
    return "unknown";
}

Check parse_check(std::string_view name)
{
    for (Check c : {Check::Question1, Check::Sandwich, Check::Characterization, Check::Chain})
        if (to_string(c) == name)
            return c;
    throw Error(ErrorCode::BadSpec, "unknown check '" + std::string(name) + "'");
}

bool is_theorem_check(Check c) { return c != Check::Question1; }

SearchRecord evaluate(const Tree &t, Check check, const SolveLimits &limits)
{
    SearchRecord rec;
    rec.n = t.order();
    rec.graph6 = emit_graph6(t);
    TreeProfile p = profile(t);
    rec.b_t = p.b();

    SolveResult bn = alpha_bn_exact(t, limits);
    rec.nodes = bn.nodes;
    if (!bn.optimal()) {
        rec.status = RecordStatus::BudgetExceeded;
        rec.detail = "alpha_bn search stopped at weight " + std::to_string(bn.value);
        return rec;
    }
    const int a_bn = bn.value;
    rec.alpha_bn = a_bn;

    switch (check) {
    case Check::Question1: {
        if (p.b() == 0) {
            rec.status = RecordStatus::NotApplicable;
            rec.detail = "path";
            break;
        }
        rec.conjectured = conjectured_upper(t);
        rec.upper = upper_bound(t);
        rec.violation = a_bn > *rec.conjectured;
        if (rec.violation)
            rec.detail = "alpha_bn exceeds n - b + alpha(T[R(T)])";
        break;
    }
    case Check::Sandwich: {
        if (p.b() == 0) {
            rec.status = RecordStatus::NotApplicable;
            rec.detail = "path";
            break;
        }
        rec.upper = upper_bound(t);
        try {
            auto lb = lower_bound_witness(t);
            rec.lower = lb.value;
        }
        catch (const Error &e) {
            rec.violation = true;
            rec.detail = e.what();
            break;
        }
        rec.violation = *rec.lower > a_bn || a_bn > *rec.upper;
        if (rec.violation)
            rec.detail = "alpha_bn outside [lower, upper]";
        break;
    }
    case Check::Characterization: {
        auto shape = classify_shape(t);
        bool path_or_spider = shape.contains(Shape::Path) || shape.contains(Shape::Spider);
        rec.violation = (a_bn == t.order() - 1) != path_or_spider;
        if (rec.violation)
            rec.detail = path_or_spider ? "path/spider without alpha_bn = n - 1" : "alpha_bn = n - 1 on another shape";
        break;
    }
    case Check::Chain: {
        if (t.order() == 1) {
            // K_1 carries only the zero broadcast while α(K_1) = 1.
            rec.status = RecordStatus::NotApplicable;
            rec.detail = "trivial tree";
            break;
        }
        SolveResult h = alpha_h_exact(t, limits);
        rec.nodes += h.nodes;
        if (!h.optimal()) {
            rec.status = RecordStatus::BudgetExceeded;
            rec.detail = "alpha_h search stopped at weight " + std::to_string(h.value);
            break;
        }
        rec.alpha_h = h.value;
        rec.alpha = alpha_forest(t).size;
        bool ordered = *rec.alpha <= a_bn && a_bn <= h.value;
        bool ratio = h.value < 2 * a_bn;
        rec.violation = !(ordered && ratio);
        if (rec.violation)
            rec.detail = ordered ? "alpha_h >= 2 alpha_bn" : "alpha <= alpha_bn <= alpha_h fails";
        break;
    }
    }
    return rec;
}

namespace {

    // Exceptions must not escape an OpenMP region; a throwing check is
    // recorded as a violation in both sweeps alike.
    SearchRecord evaluate_guarded(const Tree &t, const SearchConfig &config)
    {
        try {
            return evaluate(t, config.check, config.limits);
        }
        catch (const std::exception &e) {
            SearchRecord rec;
            rec.n = t.order();
            rec.graph6 = emit_graph6(t);
            rec.violation = true;
            rec.detail = std::string("error: ") + e.what();
            return rec;
        }
    }

    std::vector<Tree> corpus(const SearchConfig &config)
    {
        config.limits.validate();
        if (config.min_n < 1 || config.max_n < config.min_n)
            throw Error(ErrorCode::BadSpec, "search range must satisfy 1 <= min_n <= max_n");
        std::vector<Tree> trees;
        for (int n = config.min_n; n <= config.max_n; ++n) {
            auto batch = enumerate_trees(n);
            trees.insert(trees.end(), batch.begin(), batch.end());
        }
        return trees;
    }

    SearchOutcome summarise(const SearchConfig &config, std::vector<SearchRecord> records)
    {
        SearchOutcome out;
        out.check = config.check;
        for (std::size_t i = 0; i < records.size(); ++i) {
            records[i].index = i;
            switch (records[i].status) {
            case RecordStatus::Checked: ++out.checked; break;
            case RecordStatus::NotApplicable: ++out.not_applicable; break;
            case RecordStatus::BudgetExceeded: ++out.budget_exceeded; break;
            }
            if (records[i].violation)
                ++out.violations;
        }
        out.records = std::move(records);
        return out;
    }

} // namespace

SearchOutcome run_search_serial(const SearchConfig &config)
{
    auto trees = corpus(config);
    std::vector<SearchRecord> records;
    records.reserve(trees.size());
    for (const Tree &t : trees)
        records.push_back(evaluate_guarded(t, config));
    return summarise(config, std::move(records));
}

SearchOutcome run_search_parallel(const SearchConfig &config)
{
    auto trees = corpus(config);
    std::vector<SearchRecord> records(trees.size());
    const int jobs = config.jobs > 0 ? config.jobs : omp_get_max_threads();
    const auto count = static_cast<std::ptrdiff_t>(trees.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        records[i] = evaluate_guarded(trees[i], config);
    return summarise(config, std::move(records));
}

SearchOutcome run_search(const SearchConfig &config)
{
    return config.jobs == 1 ? run_search_serial(config) : run_search_parallel(config);
}

} // namespace bnb
