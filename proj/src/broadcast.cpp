#include "bnb/broadcast.hpp"

#include "bnb/error.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

namespace bnb {

Broadcast::Broadcast(Forest host, std::vector<int> strengths)
    : host_(std::move(host)), strengths_(std::move(strengths))
{
    if (static_cast<int>(strengths_.size()) != host_.order())
        throw Error(ErrorCode::BadVertexIndex,
            std::to_string(strengths_.size()) + " strengths for a host of order " + std::to_string(host_.order()));
    for (Vertex v = 0; v < host_.order(); ++v) {
        if (strengths_[v] < 0)
            throw Error(ErrorCode::NegativeStrength, "f(" + std::to_string(v) + ") = " + std::to_string(strengths_[v]));
        if (strengths_[v] > host_.eccentricity(v))
            throw Error(ErrorCode::StrengthExceedsEccentricity,
                "f(" + std::to_string(v) + ") = " + std::to_string(strengths_[v]) + " > e(" + std::to_string(v)
                    + ") = " + std::to_string(host_.eccentricity(v)));
    }
}

Broadcast::Broadcast(Forest host) : host_(std::move(host)), strengths_(host_.order(), 0) {}

int Broadcast::weight() const noexcept { return std::accumulate(strengths_.begin(), strengths_.end(), 0); }

std::vector<Vertex> Broadcast::broadcasters() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < host_.order(); ++v)
        if (strengths_[v] > 0)
            out.push_back(v);
    return out;
}

bool Broadcast::hears(Vertex u, Vertex from) const
{
    return strengths_.at(from) > 0 && host_.distance(u, from) <= strengths_[from];
}

Broadcast make_broadcast(const Forest &host, std::vector<int> strengths) { return {host, std::move(strengths)}; }

namespace {

    bool covers(const Forest &g, std::span<const int> f, Vertex b, Edge e)
    {
        int du = g.distance(e.u, b), dv = g.distance(e.v, b);
        return du <= f[b] && dv <= f[b] && !(du == f[b] && dv == f[b]);
    }

    bool dominated_by_any(const Forest &g, std::span<const int> f, Vertex u)
    {
        for (Vertex w = 0; w < g.order(); ++w)
            if (f[w] > 0 && g.distance(u, w) <= f[w])
                return true;
        return false;
    }

    BnViolation describe(const Broadcast &f, Vertex u, Vertex v)
    {
        const Forest &g = f.host();
        auto s = f.strengths();
        BnViolation out{u, v, -1, {-1, -1}};
        for (Vertex w = 0; w < g.order() && out.vertex < 0; ++w) {
            int du = g.distance(w, u), dv = g.distance(w, v);
            if (du <= s[u] && dv <= s[v] && (du < s[u] || dv < s[v]))
                out.vertex = w;
        }
        for (auto e : g.edges())
            if (covers(g, s, u, e) && covers(g, s, v, e)) {
                out.edge = e;
                break;
            }
        return out;
    }

} // namespace

BroadcastAnalysis analyze(const Broadcast &f)
{
    const Forest &g = f.host();
    auto s = f.strengths();
    BroadcastAnalysis a;
    a.v_plus = f.broadcasters();
    for (Vertex v : a.v_plus)
        (s[v] == 1 ? a.v_one : a.v_plusplus).push_back(v);

    for (Vertex v : a.v_plus) {
        BroadcasterSets &bs = a.sets[v];
        std::vector<int> reduced(s.begin(), s.end());
        --reduced[v];
        for (Vertex u = 0; u < g.order(); ++u) {
            int d = g.distance(u, v);
            if (d > s[v])
                continue;
            bs.neighbourhood.push_back(u);
            if (d == s[v])
                bs.boundary.push_back(u);
            bool heard_elsewhere = false;
            for (Vertex w : a.v_plus)
                if (w != v && g.distance(u, w) <= s[w])
                    heard_elsewhere = true;
            if (!heard_elsewhere)
                bs.private_neighbourhood.push_back(u);
            if (!dominated_by_any(g, reduced, u))
                bs.private_boundary.push_back(u);
        }
    }
    for (Vertex u = 0; u < g.order(); ++u)
        if (!dominated_by_any(g, s, u))
            a.undominated.push_back(u);

    a.covered_by.resize(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        for (Vertex v : a.v_plus)
            if (covers(g, s, v, g.edges()[i]))
                a.covered_by[i].push_back(v);
        if (a.covered_by[i].empty())
            a.uncovered_edges.push_back(g.edges()[i]);
    }
    return a;
}

bool is_dominating(const Broadcast &f)
{
    for (Vertex u = 0; u < f.host().order(); ++u)
        if (!dominated_by_any(f.host(), f.strengths(), u))
            return false;
    return true;
}

std::optional<BnViolation> find_double_cover(const Broadcast &f)
{
    const Forest &g = f.host();
    auto s = f.strengths();
    auto vp = f.broadcasters();
    for (auto e : g.edges()) {
        std::optional<Vertex> first;
        for (Vertex v : vp) {
            if (!covers(g, s, v, e))
                continue;
            if (!first) {
                first = v;
                continue;
            }
            return describe(f, *first, v);
        }
    }
    return std::nullopt;
}

std::optional<BnViolation> find_bn_violation(const Broadcast &f)
{
    const Forest &g = f.host();
    auto s = f.strengths();
    auto vp = f.broadcasters();
    std::optional<BnViolation> found;
    for (std::size_t i = 0; i < vp.size() && !found; ++i)
        for (std::size_t j = i + 1; j < vp.size() && !found; ++j) {
            Vertex u = vp[i], v = vp[j];
            for (Vertex w = 0; w < g.order(); ++w) {
                int du = g.distance(w, u), dv = g.distance(w, v);
                if (du <= s[u] && dv <= s[v] && (du < s[u] || dv < s[v])) {
                    found = describe(f, u, v);
                    break;
                }
            }
        }
    assert(found.has_value() == find_double_cover(f).has_value());
    return found;
}

bool is_bn_independent(const Broadcast &f) { return !find_bn_violation(f).has_value(); }

bool is_hearing_independent(const Broadcast &f)
{
    return hearing_independent_strengths(f.host(), f.strengths());
}

bool maximal_by_private_boundary(const Broadcast &f)
{
    if (!is_dominating(f))
        return false;
    auto a = analyze(f);
    if (a.v_plus.size() == 1)
        return true;
    for (const auto &[v, bs] : a.sets) {
        std::vector<Vertex> rest;
        std::set_difference(bs.boundary.begin(), bs.boundary.end(), bs.private_boundary.begin(),
            bs.private_boundary.end(), std::back_inserter(rest));
        if (rest.empty())
            return false;
    }
    return true;
}

bool maximal_by_uncovered_components(const Broadcast &f)
{
    const Forest &g = f.host();
    auto a = analyze(f);
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        if (!a.covered_by[i].empty())
            kept.push_back(g.edges()[i]);
    Forest rest = Forest::from_edges(g.order(), kept);
    std::vector<int> per_component(rest.component_count(), 0);
    for (Vertex v : a.v_plus)
        ++per_component[rest.components()[v]];
    return std::all_of(per_component.begin(), per_component.end(), [](int c) { return c >= 2; });
}

bool is_maximal_bn(const Broadcast &f)
{
    if (auto bad = find_bn_violation(f))
        throw Error(ErrorCode::NotBnIndependent,
            "broadcasters " + std::to_string(bad->u) + " and " + std::to_string(bad->v) + " overlap at vertex "
                + std::to_string(bad->vertex));
    bool verdict = maximal_by_private_boundary(f);
    assert(f.host().component_count() != 1 || f.broadcasters().size() < 2
        || verdict == maximal_by_uncovered_components(f));
    return verdict;
}

bool bn_independent_strengths(const Forest &host, std::span<const int> s)
{
    const int n = host.order();
    std::vector<Vertex> vp;
    for (Vertex v = 0; v < n; ++v)
        if (s[v] > 0)
            vp.push_back(v);
    for (std::size_t i = 0; i < vp.size(); ++i)
        for (std::size_t j = i + 1; j < vp.size(); ++j) {
            Vertex u = vp[i], v = vp[j];
            if (host.distance(u, v) > s[u] + s[v])
                continue;
            for (Vertex w = 0; w < n; ++w) {
                int du = host.distance(w, u), dv = host.distance(w, v);
                if (du <= s[u] && dv <= s[v] && (du < s[u] || dv < s[v]))
                    return false;
            }
        }
    return true;
}

bool hearing_independent_strengths(const Forest &host, std::span<const int> s)
{
    for (Vertex u = 0; u < host.order(); ++u) {
        if (s[u] == 0)
            continue;
        for (Vertex v = 0; v < host.order(); ++v)
            if (v != u && s[v] > 0 && host.distance(u, v) <= s[v])
                return false;
    }
    return true;
}

std::string to_text(const Broadcast &f)
{
    std::string out;
    for (Vertex v = 0; v < f.host().order(); ++v) {
        if (f[v] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += std::to_string(v) + ":" + std::to_string(f[v]);
    }
    return out;
}

Broadcast parse_broadcast(const Forest &host, const std::string &text)
{
    std::vector<int> s(host.order(), 0);
    std::vector<bool> seen(host.order(), false);
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            auto colon = tok.find(':');
            int v = 0, value = 0;
            auto bad = [&] { return Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad pair '" + tok + "'"); };
            if (colon == std::string::npos)
                throw bad();
            const char *b = tok.data();
            auto r1 = std::from_chars(b, b + colon, v);
            auto r2 = std::from_chars(b + colon + 1, b + tok.size(), value);
            if (r1.ec != std::errc{} || r1.ptr != b + colon || r2.ec != std::errc{} || r2.ptr != b + tok.size())
                throw bad();
            host.check_vertex(v);
            if (seen[v])
                throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": vertex " + std::to_string(v) + " given twice");
            seen[v] = true;
            s[v] = value;
        }
    }
    return {host, std::move(s)};
}

} // namespace bnb
