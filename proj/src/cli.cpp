#include "bnb/cli.hpp"

#include "bnb/bounds.hpp"
#include "bnb/broadcast.hpp"
#include "bnb/corpus.hpp"
#include "bnb/dot.hpp"
#include "bnb/error.hpp"
#include "bnb/independence.hpp"
#include "bnb/profile.hpp"
#include "bnb/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bnb::cli {

using json = nlohmann::ordered_json;

namespace {

    constexpr std::string_view kRunSchema = "bnb.run/1";

    // A broadcast that fails validation against its host.
    struct InvalidBroadcast : std::runtime_error {
        using std::runtime_error::runtime_error;
    };
    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    void setup_logging()
    {
        auto logger = spdlog::get("bnb");
        if (!logger) {
            logger = spdlog::stderr_color_mt("bnb");
            spdlog::set_default_logger(logger);
        }
        const char *env = std::getenv("BNB_LOG");
        auto level = env ? spdlog::level::from_str(env) : spdlog::level::warn;
        logger->set_level(level);
    }

    std::string read_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    struct InputOptions {
        std::string file;
        std::string family;
        std::string g6;
        std::string format = "edgelist";
    };

    struct LoadedInput {
        Tree tree;
        json descriptor;
    };

    void add_input_options(CLI::App *cmd, InputOptions &in)
    {
        auto *file = cmd->add_option("--input", in.file, "tree file");
        auto *family = cmd->add_option("--family", in.family, "family spec, e.g. spider:2,2,2");
        auto *g6 = cmd->add_option("--g6", in.g6, "graph6 string");
        file->excludes(family, g6);
        family->excludes(g6);
        cmd->add_option("--format", in.format, "file format")->check(CLI::IsMember({"edgelist", "graph6"}));
        // A bare positional argument is read as a family spec.
        cmd->add_option("spec", in.family, "family spec")->excludes(file, g6);
    }

    LoadedInput load_input(const InputOptions &in)
    {
        if (!in.file.empty()) {
            std::string text = read_file(in.file);
            Tree t = in.format == "graph6" ? parse_graph6(text) : parse_edge_list(text);
            return {t, json{{"kind", "file"}, {"path", in.file}, {"format", in.format}}};
        }
        if (!in.family.empty())
            return {build_family(parse_family(in.family)), json{{"kind", "family"}, {"spec", in.family}}};
        if (!in.g6.empty())
            return {parse_graph6(in.g6), json{{"kind", "graph6"}, {"value", in.g6}}};
        throw UsageError("one of --input, --family or --g6 is required");
    }

    std::optional<Broadcast> load_broadcast(const Tree &t, const std::string &file, const std::string &text)
    {
        if (file.empty() && text.empty())
            return std::nullopt;
        std::string body = file.empty() ? text : read_file(file);
        try {
            return parse_broadcast(t, body);
        }
        catch (const Error &e) {
            if (e.code() == ErrorCode::ParseError)
                throw;
            throw InvalidBroadcast(e.what());
        }
    }

    json to_json(const Broadcast &f)
    {
        return json{{"text", to_text(f)}, {"strengths", std::vector<int>(f.strengths().begin(), f.strengths().end())},
            {"weight", f.weight()}};
    }

    template <class T>
    json opt(const std::optional<T> &v)
    {
        return v ? json(*v) : json(nullptr);
    }

    std::string_view mode_name(SolveMode m)
    {
        switch (m) {
        case SolveMode::PureEnum: return "enum";
        case SolveMode::Pruned: return "pruned";
        case SolveMode::Restricted: return "restricted";
        }
        return "pruned";
    }

    json limits_json(const SolveLimits &l)
    {
        return json{{"nodes", l.max_nodes}, {"ms", l.time_budget.count()}, {"mode", mode_name(l.mode)}};
    }

    json envelope(std::string_view command, const json &input)
    {
        json j;
        j["schema"] = kRunSchema;
        j["tool_version"] = kToolVersion;
        j["command"] = command;
        if (!input.is_null())
            j["input"] = input;
        return j;
    }

    double elapsed_ms(std::chrono::steady_clock::time_point start)
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    std::string join(const std::vector<Vertex> &vs)
    {
        std::string s;
        for (Vertex v : vs)
            s += (s.empty() ? "" : " ") + std::to_string(v);
        return s.empty() ? "-" : s;
    }

    std::string value_or_na(const std::optional<int> &v) { return v ? std::to_string(*v) : "n/a"; }

    // ---- analyze ----

    int cmd_analyze(const InputOptions &in, bool as_json, std::ostream &out)
    {
        auto [t, descriptor] = load_input(in);
        TreeProfile p = profile(t);
        IndependentSet alpha_int = alpha_forest(p.interior.graph);
        std::vector<std::string> shapes;
        for (Shape s : classify_shape(t))
            shapes.emplace_back(to_string(s));

        if (!as_json) {
            out << "n: " << t.order() << "\n";
            out << "diameter: " << t.diameter() << "\n";
            out << "graph6: " << emit_graph6(t) << "\n";
            out << "shape:";
            for (const auto &s : shapes)
                out << " " << s;
            out << "\n";
            out << "b: " << p.b() << "\n";
            out << "rho: " << p.rho() << "\n";
            out << "w_int: " << p.w_int.size() << "\n";
            out << "leaves: " << join(p.leaves) << "\n";
            out << "branch: " << join(p.branch) << "\n";
            out << "B0: " << join(p.b0) << "\n";
            out << "B1: " << join(p.b1) << "\n";
            out << "B2+: " << join(p.b2plus) << "\n";
            out << "W_ext: " << join(p.w_ext) << "\n";
            out << "W_int: " << join(p.w_int) << "\n";
            for (const auto &[b, e] : p.loss_table)
                out << "loss " << b << ": max " << e.max << " sum " << e.sum << " loss " << e.loss << "\n";
            out << "Int: order " << p.interior.graph.order() << " edges " << p.interior.graph.edge_count()
                << " components " << p.interior.graph.component_count() << " alpha " << alpha_int.size << "\n";
            return kExitOk;
        }

        json j = envelope("analyze", descriptor);
        json prof;
        prof["n"] = t.order();
        prof["diameter"] = t.diameter();
        prof["graph6"] = emit_graph6(t);
        prof["shape"] = shapes;
        prof["b"] = p.b();
        prof["rho"] = p.rho();
        prof["w_int_size"] = p.w_int.size();
        prof["leaves"] = p.leaves;
        prof["branch"] = p.branch;
        prof["b0"] = p.b0;
        prof["b1"] = p.b1;
        prof["b2plus"] = p.b2plus;
        prof["r_set"] = p.r_set;
        prof["w_ext"] = p.w_ext;
        prof["w_int"] = p.w_int;
        json leaf_sets = json::array();
        json loss = json::array();
        for (Vertex b : p.branch) {
            leaf_sets.push_back(json{{"vertex", b}, {"leaves", p.leaf_sets.at(b)}});
            const LossEntry &e = p.loss_table.at(b);
            loss.push_back(json{{"vertex", b}, {"max", e.max}, {"sum", e.sum}, {"loss", e.loss}});
        }
        prof["leaf_sets"] = leaf_sets;
        prof["loss"] = loss;
        json int_edges = json::array();
        for (const Edge &e : p.interior.graph.edges())
            int_edges.push_back({p.interior.to_host[e.u], p.interior.to_host[e.v]});
        std::vector<Vertex> int_alpha_members;
        for (Vertex v : alpha_int.members)
            int_alpha_members.push_back(p.interior.to_host[v]);
        prof["interior"] = json{{"vertices", p.interior.to_host}, {"edges", int_edges},
            {"components", p.interior.graph.component_count()}, {"alpha", alpha_int.size},
            {"independent_set", int_alpha_members}};
        prof["edges"] = [&] {
            json a = json::array();
            for (const Edge &e : t.edges())
                a.push_back({e.u, e.v});
            return a;
        }();
        j["profile"] = prof;
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    // ---- bounds ----

    int cmd_bounds(const InputOptions &in, bool exact, const SolveLimits &limits, bool as_json, std::ostream &out)
    {
        auto start = std::chrono::steady_clock::now();
        auto [t, descriptor] = load_input(in);
        spdlog::info("bounds: n={} exact={}", t.order(), exact);
        BoundsReport r = compute(t, ComputeOptions{exact, limits});
        double ms = elapsed_ms(start);

        if (!as_json) {
            out << "n: " << r.n << "\n";
            out << "b: " << r.b_t << "\n";
            out << "rho: " << r.rho << "\n";
            out << "lower: " << value_or_na(r.lower) << "\n";
            out << "upper: " << value_or_na(r.upper) << "\n";
            out << "conjectured: " << value_or_na(r.conjectured) << "\n";
            if (r.formula)
                out << "formula: " << r.formula->name << " " << r.formula->value << "\n";
            else
                out << "formula: n/a\n";
            if (exact) {
                if (r.exact)
                    out << "exact: " << *r.exact << "\n";
                else
                    out << "exact: budget exceeded (found " << value_or_na(r.exact_lower_found) << ")\n";
            }
            if (r.witness_exact)
                out << "witness: " << to_text(*r.witness_exact) << "\n";
            return kExitOk;
        }

        json j = envelope("bounds", descriptor);
        json rep;
        rep["n"] = r.n;
        rep["b"] = r.b_t;
        rep["rho"] = r.rho;
        rep["w_int_size"] = r.w_int_size;
        rep["alpha_int"] = r.alpha_int;
        rep["alpha_r"] = r.alpha_r;
        rep["is_path"] = r.is_path;
        rep["lower"] = opt(r.lower);
        rep["upper"] = opt(r.upper);
        rep["conjectured"] = opt(r.conjectured);
        rep["formula"] = r.formula ? json{{"name", r.formula->name}, {"value", r.formula->value}} : json(nullptr);
        rep["exact"] = opt(r.exact);
        rep["question1_holds"] = opt(r.question1_holds());
        rep["witness_lower"] = r.witness_lower ? to_json(*r.witness_lower) : json(nullptr);
        rep["witness_exact"] = r.witness_exact ? to_json(*r.witness_exact) : json(nullptr);
        j["report"] = rep;
        j["flags"] = json{{"exact_requested", exact}, {"budget_exceeded", r.exact_budget_exceeded},
            {"exact_lower_found", opt(r.exact_lower_found)}, {"optima_cap_hit", false}, {"nodes", r.exact_nodes}};
        j["limits"] = limits_json(limits);
        j["timings"] = json{{"total_ms", ms}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    // ---- witness ----

    int cmd_witness(const InputOptions &in, bool as_json, std::ostream &out)
    {
        auto [t, descriptor] = load_input(in);
        TreeProfile p = profile(t);
        if (p.b() == 0)
            throw UsageError("witness construction needs a branch vertex; paths are excluded");
        LowerBoundWitness w = lower_bound_witness(t);
        int expected = t.order() - p.b() - static_cast<int>(p.w_int.size()) + alpha_forest(p.interior.graph).size;
        bool independent = is_bn_independent(w.broadcast);
        if (!independent || w.broadcast.weight() != expected)
            throw Error(ErrorCode::Inconsistency, "constructed broadcast failed re-verification");

        if (!as_json) {
            out << "broadcast: " << to_text(w.broadcast) << "\n";
            out << "weight: " << w.broadcast.weight() << "\n";
            out << "bn-independent: true\n";
            return kExitOk;
        }
        json j = envelope("witness", descriptor);
        j["broadcast"] = to_json(w.broadcast);
        j["expected_weight"] = expected;
        j["bn_independent"] = independent;
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    // ---- verify ----

    json violation_json(const BnViolation &v)
    {
        return json{{"broadcasters", {v.u, v.v}}, {"vertex", v.vertex}, {"edge", {v.edge.u, v.edge.v}}};
    }

    int cmd_verify(const InputOptions &in, const std::string &bfile, const std::string &btext, bool as_json,
        std::ostream &out)
    {
        auto [t, descriptor] = load_input(in);
        auto loaded = load_broadcast(t, bfile, btext);
        if (!loaded)
            throw UsageError("verify needs --broadcast FILE or --broadcast-text TEXT");
        const Broadcast &f = *loaded;
        BroadcastAnalysis a = analyze(f);

        bool dominating = a.undominated.empty();
        auto bn = find_bn_violation(f);
        std::optional<std::pair<Vertex, Vertex>> hearing;
        for (Vertex u : a.v_plus)
            for (Vertex v : a.v_plus)
                if (u != v && !hearing && f.hears(u, v))
                    hearing = {u, v};
        std::optional<bool> maximal;
        std::vector<Vertex> no_spare_boundary;
        if (!bn) {
            maximal = is_maximal_bn(f);
            if (a.v_plus.size() > 1)
                for (Vertex v : a.v_plus) {
                    const auto &s = a.sets.at(v);
                    if (s.boundary.size() == s.private_boundary.size())
                        no_spare_boundary.push_back(v);
                }
        }

        if (!as_json) {
            out << "valid: true\n";
            out << "weight: " << f.weight() << "\n";
            out << "dominating: " << (dominating ? "true" : "false");
            if (!dominating)
                out << " (undominated: " << join(a.undominated) << ")";
            out << "\n";
            out << "bn-independent: " << (bn ? "false" : "true");
            if (bn)
                out << " (broadcasters " << bn->u << " and " << bn->v << " share vertex " << bn->vertex
                    << ", edge " << bn->edge.u << "-" << bn->edge.v << ")";
            out << "\n";
            out << "hearing-independent: " << (hearing ? "false" : "true");
            if (hearing)
                out << " (" << hearing->first << " hears " << hearing->second << ")";
            out << "\n";
            out << "maximal-bn: ";
            if (!maximal)
                out << "n/a";
            else {
                out << (*maximal ? "true" : "false");
                if (!*maximal && !dominating)
                    out << " (not dominating)";
                else if (!*maximal)
                    out << " (no spare boundary at " << join(no_spare_boundary) << ")";
            }
            out << "\n";
            return kExitOk;
        }

        json j = envelope("verify", descriptor);
        j["broadcast"] = to_json(f);
        j["valid"] = true;
        j["dominating"] = json{{"value", dominating}, {"undominated", a.undominated}};
        j["bn_independent"] =
            json{{"value", !bn.has_value()}, {"violation", bn ? violation_json(*bn) : json(nullptr)}};
        j["hearing_independent"] = json{{"value", !hearing.has_value()},
            {"violation", hearing ? json{{"listener", hearing->first}, {"broadcaster", hearing->second}} : json(nullptr)}};
        json max_j{{"value", opt(maximal)}};
        if (maximal && !*maximal)
            max_j["certificate"] = dominating ? json{{"no_spare_boundary", no_spare_boundary}}
                                              : json{{"undominated", a.undominated}};
        j["maximal_bn"] = max_j;
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    // ---- search ----

    json record_json(const SearchRecord &r)
    {
        std::string_view status = r.status == RecordStatus::Checked ? "checked"
            : r.status == RecordStatus::NotApplicable              ? "not_applicable"
                                                                   : "budget_exceeded";
        json j;
        j["type"] = r.violation ? "violation" : (r.status == RecordStatus::BudgetExceeded ? "budget" : "record");
        j["index"] = r.index;
        j["n"] = r.n;
        j["graph6"] = r.graph6;
        j["status"] = status;
        j["violation"] = r.violation;
        j["b"] = r.b_t;
        j["alpha_bn"] = opt(r.alpha_bn);
        j["lower"] = opt(r.lower);
        j["upper"] = opt(r.upper);
        j["conjectured"] = opt(r.conjectured);
        j["alpha"] = opt(r.alpha);
        j["alpha_h"] = opt(r.alpha_h);
        j["detail"] = r.detail;
        j["nodes"] = r.nodes;
        return j;
    }

    int cmd_search(const SearchConfig &config, bool all_records, std::ostream &out, std::ostream &err)
    {
        auto start = std::chrono::steady_clock::now();
        spdlog::info("search: check={} n={}..{} jobs={}", to_string(config.check), config.min_n, config.max_n,
            config.jobs);
        SearchOutcome res = run_search(config);
        double ms = elapsed_ms(start);

        std::map<int, std::size_t> per_n;
        for (const SearchRecord &r : res.records) {
            ++per_n[r.n];
            if (r.status == RecordStatus::BudgetExceeded)
                spdlog::warn("budget exceeded on tree {} ({}): {}", r.index, r.graph6, r.detail);
            if (all_records || r.violation || r.status == RecordStatus::BudgetExceeded)
                out << record_json(r).dump() << "\n";
        }
        json counts = json::array();
        for (const auto &[n, c] : per_n)
            counts.push_back(json{{"n", n}, {"trees", c}});

        const bool theorem = is_theorem_check(config.check);
        json s = envelope("search", nullptr);
        s["type"] = "summary";
        s["check"] = to_string(config.check);
        s["theorem_check"] = theorem;
        s["min_n"] = config.min_n;
        s["max_n"] = config.max_n;
        s["total"] = res.total();
        s["checked"] = res.checked;
        s["not_applicable"] = res.not_applicable;
        s["budget_exceeded"] = res.budget_exceeded;
        s["violations"] = res.violations;
        s["accounted"] = res.checked + res.not_applicable + res.budget_exceeded == res.total();
        s["per_n"] = counts;
        s["limits"] = limits_json(config.limits);
        s["timings"] = json{{"total_ms", ms}, {"jobs", config.jobs}};
        out << s.dump() << "\n";

        if (res.violations > 0) {
            if (theorem) {
                err << "error: " << res.violations << " violation(s) of a proven " << to_string(config.check)
                    << " property; this is a bug\n";
                return kExitInconsistency;
            }
            err << "FINDING: " << res.violations << " tree(s) exceed n - b + alpha(T[R(T)])\n";
        }
        return kExitOk;
    }

    // ---- export-dot ----

    int cmd_export_dot(const InputOptions &in, const std::string &bfile, const std::string &btext, std::ostream &out)
    {
        auto [t, descriptor] = load_input(in);
        auto f = load_broadcast(t, bfile, btext);
        out << to_dot(t, f);
        return kExitOk;
    }

    int exit_code_for(const Error &e)
    {
        switch (e.code()) {
        case ErrorCode::Inconsistency: return kExitInconsistency;
        case ErrorCode::HostMismatch:
        case ErrorCode::StrengthExceedsEccentricity:
        case ErrorCode::NegativeStrength: return kExitInvalidBroadcast;
        default: return kExitUsage;
        }
    }

} // namespace

SolveLimits parse_limits(const std::string &text)
{
    SolveLimits l;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::BadSpec, "limit '" + item + "' is not key=value");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        auto number = [&]() -> std::uint64_t {
            std::size_t used = 0;
            unsigned long long x = 0;
            try {
                x = std::stoull(val, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != val.size() || val.empty() || val[0] == '-')
                throw Error(ErrorCode::BadSpec, "limit '" + key + "' needs a non-negative integer");
            return x;
        };
        if (key == "nodes")
            l.max_nodes = number();
        else if (key == "ms")
            l.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(number()));
        else if (key == "mode") {
            if (val == "pruned")
                l.mode = SolveMode::Pruned;
            else if (val == "enum")
                l.mode = SolveMode::PureEnum;
            else if (val == "restricted")
                l.mode = SolveMode::Restricted;
            else
                throw Error(ErrorCode::BadSpec, "unknown solve mode '" + val + "'");
        }
        else
            throw Error(ErrorCode::BadSpec, "unknown limit '" + key + "'");
    }
    l.validate();
    return l;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    setup_logging();

    CLI::App app{"Boundary independence broadcasts on trees", "bnb"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    bool as_json = false;
    std::string limits_text;
    int jobs = 1;
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_flag("--json", as_json, "machine-readable output");
    };

    InputOptions analyze_in, bounds_in, witness_in, verify_in, dot_in;
    bool exact = false;
    std::string broadcast_file, broadcast_text;

    auto *analyze_cmd = app.add_subcommand("analyze", "structural profile");
    add_input_options(analyze_cmd, analyze_in);
    add_common(analyze_cmd);

    auto *bounds_cmd = app.add_subcommand("bounds", "bounds, formulas and optionally the exact value");
    add_input_options(bounds_cmd, bounds_in);
    add_common(bounds_cmd);
    bounds_cmd->add_flag("--exact", exact, "run the exact solver");
    bounds_cmd->add_option("--limits", limits_text, "nodes=N,ms=M[,mode=pruned|enum|restricted]");

    auto *witness_cmd = app.add_subcommand("witness", "constructed lower-bound broadcast");
    add_input_options(witness_cmd, witness_in);
    add_common(witness_cmd);

    auto *verify_cmd = app.add_subcommand("verify", "check a broadcast");
    add_input_options(verify_cmd, verify_in);
    add_common(verify_cmd);
    auto *bf = verify_cmd->add_option("--broadcast", broadcast_file, "broadcast file of v:f pairs");
    verify_cmd->add_option("--broadcast-text", broadcast_text, "broadcast as v:f pairs")->excludes(bf);

    SearchConfig search;
    std::string check_name;
    bool all_records = false;
    auto *search_cmd = app.add_subcommand("search", "sweep all trees in an order range");
    search_cmd->add_option("--min-n", search.min_n, "smallest order")->check(CLI::PositiveNumber);
    search_cmd->add_option("--max-n", search.max_n, "largest order")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--check", check_name, "check to run")
        ->required()
        ->check(CLI::IsMember({"question1", "sandwich", "characterization", "chain"}));
    search_cmd->add_option("--limits", limits_text, "per-tree solver limits");
    search_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_flag("--all-records", all_records, "emit every record, not only violations");
    add_common(search_cmd);

    auto *dot_cmd = app.add_subcommand("export-dot", "Graphviz output");
    add_input_options(dot_cmd, dot_in);
    auto *dbf = dot_cmd->add_option("--broadcast", broadcast_file, "broadcast file of v:f pairs");
    dot_cmd->add_option("--broadcast-text", broadcast_text, "broadcast as v:f pairs")->excludes(dbf);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::Success &e) {
        std::ostringstream help;
        int code = app.exit(e, help, err);
        out << help.str();
        return code;
    }
    catch (const CLI::ParseError &e) {
        std::ostringstream ignored;
        app.exit(e, ignored, err);
        return kExitUsage;
    }

    try {
        SolveLimits limits = limits_text.empty() ? SolveLimits{} : parse_limits(limits_text);
        if (*analyze_cmd)
            return cmd_analyze(analyze_in, as_json, out);
        if (*bounds_cmd)
            return cmd_bounds(bounds_in, exact, limits, as_json, out);
        if (*witness_cmd)
            return cmd_witness(witness_in, as_json, out);
        if (*verify_cmd)
            return cmd_verify(verify_in, broadcast_file, broadcast_text, as_json, out);
        if (*search_cmd) {
            search.check = parse_check(check_name);
            search.limits = limits;
            search.jobs = jobs;
            return cmd_search(search, all_records, out, err);
        }
        if (*dot_cmd)
            return cmd_export_dot(dot_in, broadcast_file, broadcast_text, out);
    }
    catch (const InvalidBroadcast &e) {
        err << "invalid broadcast: " << e.what() << "\n";
        return kExitInvalidBroadcast;
    }
    catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInconsistency;
    }
    return kExitUsage;
}

} // namespace bnb::cli
