#pragma once

// Broadcasts on forests and the predicates defined on them.
//
// A broadcast assigns each vertex a strength f(v) with 0 <= f(v) <= e(v),
// eccentricity taken inside the vertex's component. Vertex u hears v when
// f(v) > 0 and d(u,v) <= f(v). For a broadcaster v:
//   N_f(v)  = {u : d(u,v) <= f(v)}
//   B_f(v)  = {u : d(u,v) == f(v)}
//   PN_f(v) = members of N_f(v) heard from no other broadcaster
//   PB_f(v) = members of N_f(v) left undominated when f(v) drops by one
// Edge xy is covered by v when x,y are in N_f(v) and not both in B_f(v).

#include "bnb/graph.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bnb {

class Broadcast {
public:
    /// Throws NegativeStrength, StrengthExceedsEccentricity, or
    /// BadVertexIndex when the strength vector length differs from the host
    /// order.
    Broadcast(Forest host, std::vector<int> strengths);

    /// The zero broadcast.
    explicit Broadcast(Forest host);

    [[nodiscard]] const Forest &host() const noexcept { return host_; }
    [[nodiscard]] std::span<const int> strengths() const noexcept { return strengths_; }
    [[nodiscard]] int operator[](Vertex v) const { return strengths_.at(v); }
    [[nodiscard]] int weight() const noexcept;
    /// V_f^+ in ascending order.
    [[nodiscard]] std::vector<Vertex> broadcasters() const;
    [[nodiscard]] bool hears(Vertex u, Vertex from) const;

    friend bool operator==(const Broadcast &a, const Broadcast &b)
    {
        return a.strengths_ == b.strengths_ && a.host_.same_graph(b.host_);
    }

private:
    Forest host_;
    std::vector<int> strengths_;
};

Broadcast make_broadcast(const Forest &host, std::vector<int> strengths);

struct BroadcasterSets {
    std::vector<Vertex> neighbourhood;         // N_f(v)
    std::vector<Vertex> boundary;              // B_f(v)
    std::vector<Vertex> private_neighbourhood; // PN_f(v)
    std::vector<Vertex> private_boundary;      // PB_f(v)
};

struct BroadcastAnalysis {
    std::vector<Vertex> v_plus;
    std::vector<Vertex> v_one;
    std::vector<Vertex> v_plusplus;
    std::map<Vertex, BroadcasterSets> sets;
    std::vector<Vertex> undominated;              // U_f
    std::vector<std::vector<Vertex>> covered_by;  // per edge index of host.edges()
    std::vector<Edge> uncovered_edges;            // U_f^E
};

BroadcastAnalysis analyze(const Broadcast &f);

bool is_dominating(const Broadcast &f);

/// Why a broadcast fails boundary independence: broadcasters u and v both
/// hear `vertex` and it is not on both boundaries; `edge` is covered by
/// both u and v.
struct BnViolation {
    Vertex u;
    Vertex v;
    Vertex vertex;
    Edge edge;
};

/// Pairwise neighbourhood/boundary test. Cross-checked against the
/// edge-coverage formulation in debug builds.
std::optional<BnViolation> find_bn_violation(const Broadcast &f);
bool is_bn_independent(const Broadcast &f);

/// Edge-coverage formulation alone: an edge covered by two broadcasters.
std::optional<BnViolation> find_double_cover(const Broadcast &f);

bool is_hearing_independent(const Broadcast &f);

/// Maximality by the private-boundary criterion: dominating, and either a
/// single broadcaster or B_f(v) - PB_f(v) nonempty for every broadcaster.
/// Throws NotBnIndependent.
bool is_maximal_bn(const Broadcast &f);
bool maximal_by_private_boundary(const Broadcast &f);
/// Maximality by the uncovered-edge criterion: every component of the host
/// minus U_f^E holds at least two broadcasters. Stated for connected hosts
/// with at least two broadcasters.
bool maximal_by_uncovered_components(const Broadcast &f);

/// Raw kernels over a strength vector, skipping Broadcast validation. Used
/// by the exhaustive enumerator.
bool bn_independent_strengths(const Forest &host, std::span<const int> strengths);
bool hearing_independent_strengths(const Forest &host, std::span<const int> strengths);

/// "v:f(v)" pairs separated by spaces, zero entries omitted.
std::string to_text(const Broadcast &f);
/// Inverse of to_text; whitespace separated, '#' starts a comment. Throws
/// ParseError on malformed pairs or repeated vertices, BadVertexIndex for
/// ids outside the host, and the Broadcast validation errors otherwise.
Broadcast parse_broadcast(const Forest &host, const std::string &text);

} // namespace bnb
