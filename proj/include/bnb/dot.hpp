#pragma once

#include "bnb/broadcast.hpp"
#include "bnb/graph.hpp"

#include <optional>
#include <string>

namespace bnb {

/// Graphviz text for a tree. With a broadcast, broadcaster v is labelled
/// "v/f(v)" and every vertex on some broadcaster's boundary is dashed.
/// Throws HostMismatch when the broadcast lives on another graph.
std::string to_dot(const Tree &t, const std::optional<Broadcast> &f = std::nullopt);

} // namespace bnb
