#include "bnb/corpus.hpp"

#include "bnb/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace bnb {

namespace {

    std::vector<int> subtree_sizes(const std::vector<int> &levels)
    {
        const int n = static_cast<int>(levels.size());
        std::vector<int> size(n, 1);
        for (int i = 0; i < n; ++i) {
            int j = i + 1;
            while (j < n && levels[j] > levels[i])
                ++j;
            size[i] = j - i;
        }
        return size;
    }

    // Keeps one rooting per free tree: the root must be a centroid, and of
    // the two rootings of a bicentroidal tree the one whose root half is
    // not smaller in level-sequence order.
    bool is_free_representative(const std::vector<int> &levels)
    {
        const int n = static_cast<int>(levels.size());
        if (n <= 2)
            return true;
        auto size = subtree_sizes(levels);
        int big_child = -1, largest = 0;
        for (int i = 1; i < n; ++i)
            if (levels[i] == 1 && size[i] > largest) {
                largest = size[i];
                big_child = i;
            }
        if (2 * largest < n)
            return true;
        if (2 * largest > n)
            return false;
        std::vector<int> big, rest;
        for (int i = big_child; i < big_child + largest; ++i)
            big.push_back(levels[i] - 1);
        for (int i = 0; i < n; ++i)
            if (i < big_child || i >= big_child + largest)
                rest.push_back(levels[i]);
        return rest >= big;
    }

    // Beyer-Hedetniemi successor of a canonical level sequence; false after
    // the star.
    bool next_rooted(std::vector<int> &levels)
    {
        const int n = static_cast<int>(levels.size());
        int p = n - 1;
        while (p >= 1 && levels[p] == 1)
            --p;
        if (p < 1)
            return false;
        int q = p - 1;
        while (levels[q] != levels[p] - 1)
            --q;
        for (int i = p; i < n; ++i)
            levels[i] = levels[i - (p - q)];
        return true;
    }

    std::vector<int> parse_int_list(const std::string &text, char sep, const std::string &what)
    {
        std::vector<int> out;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, sep)) {
            int v = 0;
            auto r = std::from_chars(item.data(), item.data() + item.size(), v);
            if (item.empty() || r.ec != std::errc{} || r.ptr != item.data() + item.size())
                throw Error(ErrorCode::BadSpec, "bad integer '" + item + "' in " + what);
            out.push_back(v);
        }
        if (out.empty())
            throw Error(ErrorCode::BadSpec, "empty list in " + what);
        return out;
    }

    void require(bool ok, const std::string &msg)
    {
        if (!ok)
            throw Error(ErrorCode::BadSpec, msg);
    }

    void require_legs(const std::vector<int> &legs, std::size_t min_count, const std::string &what)
    {
        require(legs.size() >= min_count, what + " needs at least " + std::to_string(min_count) + " legs");
        for (int l : legs)
            require(l >= 1, what + " legs must have length >= 1");
    }

    struct Builder {
        int next = 0;
        std::vector<Edge> edges;

        Vertex fresh() { return next++; }
        void leg(Vertex from, int length)
        {
            Vertex prev = from;
            for (int k = 0; k < length; ++k) {
                Vertex v = fresh();
                edges.push_back({prev, v});
                prev = v;
            }
        }
        Tree finish() const { return build_tree(next, edges); }
    };

    struct OrderOf {
        int operator()(const SpiderSpec &s) const { return 1 + std::accumulate(s.legs.begin(), s.legs.end(), 0); }
        int operator()(const DoubleSpiderSpec &s) const
        {
            return 2 + std::accumulate(s.legs1.begin(), s.legs1.end(), 0)
                + std::accumulate(s.legs2.begin(), s.legs2.end(), 0) + (s.bridge - 1);
        }
        int operator()(const CaterpillarSpec &s) const
        {
            int k = static_cast<int>(s.leaf_counts.size());
            int inner = 0;
            for (int gap : s.spacing)
                inner += gap - 1;
            return k + inner + std::accumulate(s.leaf_counts.begin(), s.leaf_counts.end(), 0);
        }
        int operator()(const PathSpec &s) const { return s.n; }
    };

    struct Build {
        Tree operator()(const SpiderSpec &s) const
        {
            require_legs(s.legs, 3, "spider");
            Builder b;
            Vertex head = b.fresh();
            for (int len : s.legs)
                b.leg(head, len);
            return b.finish();
        }
        Tree operator()(const DoubleSpiderSpec &s) const
        {
            require_legs(s.legs1, 2, "double spider side 1");
            require_legs(s.legs2, 2, "double spider side 2");
            require(s.bridge >= 1, "double spider bridge must be >= 1");
            Builder b;
            Vertex b1 = b.fresh(), b2 = b.fresh();
            Vertex prev = b1;
            for (int k = 1; k < s.bridge; ++k) {
                Vertex v = b.fresh();
                b.edges.push_back({prev, v});
                prev = v;
            }
            b.edges.push_back({prev, b2});
            for (int len : s.legs1)
                b.leg(b1, len);
            for (int len : s.legs2)
                b.leg(b2, len);
            return b.finish();
        }
        Tree operator()(const CaterpillarSpec &s) const
        {
            const int k = static_cast<int>(s.leaf_counts.size());
            require(k >= 1, "caterpillar needs a spine vertex");
            std::vector<int> spacing = s.spacing.empty() ? std::vector<int>(k - 1, 1) : s.spacing;
            require(static_cast<int>(spacing.size()) == k - 1, "caterpillar spacing needs one entry per spine gap");
            for (int c : s.leaf_counts)
                require(c >= 0, "caterpillar leaf counts must be >= 0");
            for (int g : spacing)
                require(g >= 1, "caterpillar spacing must be >= 1");
            Builder b;
            for (int i = 0; i < k; ++i)
                b.fresh();
            for (int i = 0; i + 1 < k; ++i) {
                Vertex prev = i;
                for (int step = 1; step < spacing[i]; ++step) {
                    Vertex v = b.fresh();
                    b.edges.push_back({prev, v});
                    prev = v;
                }
                b.edges.push_back({prev, i + 1});
            }
            for (int i = 0; i < k; ++i)
                for (int c = 0; c < s.leaf_counts[i]; ++c)
                    b.leg(i, 1);
            return b.finish();
        }
        Tree operator()(const PathSpec &s) const
        {
            require(s.n >= 1, "path order must be >= 1");
            Builder b;
            Vertex first = b.fresh();
            b.leg(first, s.n - 1);
            return b.finish();
        }
    };

} // namespace

Tree tree_from_levels(const std::vector<int> &levels)
{
    const int n = static_cast<int>(levels.size());
    std::vector<Edge> edges;
    std::vector<int> last_at(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        if (i > 0) {
            int parent = levels[i] >= 1 ? last_at[levels[i] - 1] : -1;
            if (parent < 0)
                throw Error(ErrorCode::NotATree, "level sequence jumps at position " + std::to_string(i));
            edges.push_back({parent, i});
        }
        last_at[levels[i]] = i;
    }
    return build_tree(n, edges);
}

void for_each_tree(int n, const std::function<bool(const Tree &)> &visit)
{
    if (n < 1)
        return;
    std::vector<int> levels(n);
    std::iota(levels.begin(), levels.end(), 0);
    do {
        if (is_free_representative(levels) && !visit(tree_from_levels(levels)))
            return;
    } while (next_rooted(levels));
}

std::vector<Tree> enumerate_trees(int n)
{
    std::vector<Tree> out;
    for_each_tree(n, [&](const Tree &t) {
        out.push_back(t);
        return true;
    });
    return out;
}

Tree build_family(const FamilySpec &spec)
{
    Tree t = std::visit(Build{}, spec);
    if (t.order() != family_order(spec))
        throw Error(ErrorCode::Inconsistency, "family construction produced the wrong order");
    return t;
}

int family_order(const FamilySpec &spec) { return std::visit(OrderOf{}, spec); }

FamilySpec parse_family(const std::string &text)
{
    auto colon = text.find(':');
    require(colon != std::string::npos, "family spec '" + text + "' lacks a kind prefix");
    std::string kind = text.substr(0, colon), body = text.substr(colon + 1);
    if (kind == "spider")
        return SpiderSpec{parse_int_list(body, ',', text)};
    if (kind == "path") {
        auto v = parse_int_list(body, ',', text);
        require(v.size() == 1, "path spec takes one order");
        return PathSpec{v[0]};
    }
    if (kind == "dspider") {
        std::vector<std::string> parts;
        std::string part;
        std::istringstream in(body);
        while (std::getline(in, part, '/'))
            parts.push_back(part);
        require(parts.size() == 3, "dspider spec is legs1/bridge/legs2");
        auto bridge = parse_int_list(parts[1], ',', text);
        require(bridge.size() == 1, "dspider bridge is a single length");
        return DoubleSpiderSpec{parse_int_list(parts[0], ',', text), bridge[0], parse_int_list(parts[2], ',', text)};
    }
    if (kind == "cat") {
        CaterpillarSpec spec;
        std::string field;
        std::istringstream in(body);
        bool have_counts = false;
        while (std::getline(in, field, ';')) {
            auto eq = field.find('=');
            require(eq != std::string::npos, "caterpillar field '" + field + "' lacks '='");
            std::string key = field.substr(0, eq), value = field.substr(eq + 1);
            if (key == "leafcounts") {
                spec.leaf_counts = parse_int_list(value, ',', text);
                have_counts = true;
            }
            else if (key == "spacing")
                spec.spacing = parse_int_list(value, ',', text);
            else
                throw Error(ErrorCode::BadSpec, "unknown caterpillar field '" + key + "'");
        }
        require(have_counts, "caterpillar spec needs leafcounts=");
        return spec;
    }
    throw Error(ErrorCode::BadSpec, "unknown family kind '" + kind + "'");
}

Tree parse_edge_list(const std::string &text)
{
    std::istringstream lines(text);
    std::string line;
    std::vector<Edge> edges;
    int lineno = 0, largest = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream tokens(line);
        std::vector<std::string> tok;
        for (std::string s; tokens >> s;)
            tok.push_back(s);
        if (tok.empty())
            continue;
        auto fail = [&](const std::string &why) {
            return Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + why);
        };
        if (tok.size() != 2)
            throw fail("expected two vertex ids");
        int ids[2];
        for (int k = 0; k < 2; ++k) {
            auto r = std::from_chars(tok[k].data(), tok[k].data() + tok[k].size(), ids[k]);
            if (r.ec != std::errc{} || r.ptr != tok[k].data() + tok[k].size() || ids[k] < 0)
                throw fail("bad vertex id '" + tok[k] + "'");
        }
        Edge e = ids[0] < ids[1] ? Edge{ids[0], ids[1]} : Edge{ids[1], ids[0]};
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw fail("duplicate edge " + tok[0] + " " + tok[1]);
        edges.push_back(e);
        largest = std::max({largest, ids[0], ids[1]});
    }
    return build_tree(edges.empty() ? 1 : largest + 1, edges);
}

std::string emit_edge_list(const Tree &t)
{
    std::string out;
    for (auto e : t.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Tree parse_graph6(const std::string &raw)
{
    std::string text = raw;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    if (text.rfind(">>graph6<<", 0) == 0)
        text.erase(0, 10);
    if (text.empty())
        throw Error(ErrorCode::ParseError, "empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Error(ErrorCode::ParseError, "graph6 byte out of range");
    if (text[0] == 126)
        throw Error(ErrorCode::UnsupportedLongForm, "graph6 orders above 62 are not supported");
    const int n = text[0] - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (text.size() != 1 + (bits + 5) / 6)
        throw Error(ErrorCode::ParseError, "graph6 length does not match order " + std::to_string(n));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = text[1 + k / 6] - 63;
            if (chunk >> (5 - k % 6) & 1)
                edges.push_back({i, j});
        }
    for (; k % 6 != 0; ++k)
        if ((text[1 + k / 6] - 63) >> (5 - k % 6) & 1)
            throw Error(ErrorCode::ParseError, "graph6 padding bits must be zero");
    return build_tree(n, edges);
}

std::string emit_graph6(const Tree &t)
{
    const int n = t.order();
    if (n > 62)
        throw Error(ErrorCode::UnsupportedLongForm, "graph6 orders above 62 are not supported");
    std::string out(1, static_cast<char>(n + 63));
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (t.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(chunk + 63);
                chunk = filled = 0;
            }
        }
    if (filled > 0)
        out += static_cast<char>((chunk << (6 - filled)) + 63);
    return out;
}

} // namespace bnb
