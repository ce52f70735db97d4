#include "bnb/dot.hpp"

#include "bnb/error.hpp"

#include <set>
#include <sstream>

namespace bnb {

std::string to_dot(const Tree &t, const std::optional<Broadcast> &f)
{
    if (f && !f->host().same_graph(t))
        throw Error(ErrorCode::HostMismatch, "broadcast host differs from the tree");

    std::set<Vertex> dashed;
    if (f)
        for (Vertex v : f->broadcasters())
            for (Vertex u = 0; u < t.order(); ++u)
                if (t.distance(u, v) == (*f)[v])
                    dashed.insert(u);

    std::ostringstream os;
    os << "graph T {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < t.order(); ++v) {
        os << "  " << v;
        std::string attrs;
        if (f && (*f)[v] > 0)
            attrs += "label=\"" + std::to_string(v) + "/" + std::to_string((*f)[v]) + "\"";
        if (dashed.contains(v))
            attrs += std::string(attrs.empty() ? "" : ", ") + "style=dashed";
        if (!attrs.empty())
            os << " [" << attrs << "]";
        os << ";\n";
    }
    for (const Edge &e : t.edges())
        os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace bnb
