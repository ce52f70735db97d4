#pragma once

// Corpus sweeps: run one check against the exact solver on every
// non-isomorphic tree in an order range.

#include "bnb/exact.hpp"
#include "bnb/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bnb {

enum class Check {
    Question1,        // α_bn <= n - b + α(T[R(T)]); a failure is a finding
    Sandwich,         // lower <= α_bn <= upper and the lower witness verifies
    Characterization, // α_bn = n - 1 iff path or spider
    Chain,            // α <= α_bn <= α_h and α_h < 2 α_bn, n >= 2
};

std::string_view to_string(Check c);
/// Throws BadSpec on an unknown name.
Check parse_check(std::string_view name);
/// Checks backed by proven results; a violation there means a bug.
bool is_theorem_check(Check c);

enum class RecordStatus { Checked, NotApplicable, BudgetExceeded };

struct SearchRecord {
    std::size_t index = 0; // position in the enumeration of the whole range
    int n = 0;
    std::string graph6;
    RecordStatus status = RecordStatus::Checked;
    bool violation = false;
    int b_t = 0;
    std::optional<int> alpha_bn;
    std::optional<int> lower;
    std::optional<int> upper;
    std::optional<int> conjectured;
    std::optional<int> alpha;
    std::optional<int> alpha_h;
    std::string detail;
    std::uint64_t nodes = 0;
};

struct SearchConfig {
    int min_n = 1;
    int max_n = 8;
    Check check = Check::Sandwich;
    SolveLimits limits{};
    int jobs = 1;
};

struct SearchOutcome {
    Check check = Check::Sandwich;
    std::vector<SearchRecord> records; // enumeration order
    std::size_t checked = 0;
    std::size_t not_applicable = 0;
    std::size_t budget_exceeded = 0;
    std::size_t violations = 0;

    [[nodiscard]] std::size_t total() const noexcept { return records.size(); }
};

SearchRecord evaluate(const Tree &t, Check check, const SolveLimits &limits);

/// Reference sweep, one tree after another.
SearchOutcome run_search_serial(const SearchConfig &config);
/// OpenMP sweep over trees; records are identical to the serial sweep.
SearchOutcome run_search_parallel(const SearchConfig &config);
/// Serial for jobs == 1, parallel otherwise.
SearchOutcome run_search(const SearchConfig &config);

} // namespace bnb
