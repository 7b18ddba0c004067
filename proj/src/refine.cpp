#include "bicolor/refine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bicolor {

namespace {

void require_connected(const BicoloredGraph& g, const char* op) {
    if (!is_connected(g)) throw std::invalid_argument(std::string(op) + ": graph must be connected");
}

std::vector<std::vector<int>> adjacency(const BicoloredGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (const auto& [e, m] : g.edge_multiset()) {
        adj[static_cast<size_t>(e.first)].push_back(e.second);
        if (e.first != e.second) adj[static_cast<size_t>(e.second)].push_back(e.first);
    }
    return adj;
}

// Sorted distinct class ids adjacent to v (self id included for a loop).
std::vector<int> adjacent_ids(const std::vector<std::vector<int>>& adj,
                              const std::vector<int>& cls, int v) {
    std::vector<int> ids;
    for (int w : adj[static_cast<size_t>(v)]) ids.push_back(cls[static_cast<size_t>(w)]);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

// Renumbers class ids by first occurrence in vertex order.
void normalize_ids(std::vector<int>& cls, int& count) {
    std::map<int, int> renum;
    for (int& c : cls) {
        auto [it, fresh] = renum.emplace(c, static_cast<int>(renum.size()));
        c = it->second;
    }
    count = static_cast<int>(renum.size());
}

void validate_coloring(const BicoloredGraph& g, const Coloring& c) {
    if (static_cast<int>(c.classes.size()) != g.vertex_count())
        throw std::invalid_argument("coloring does not match graph");
    std::vector<std::optional<Color>> seen(static_cast<size_t>(c.class_count));
    for (int v = 0; v < g.vertex_count(); ++v) {
        int id = c.classes[static_cast<size_t>(v)];
        if (id < 0 || id >= c.class_count) throw std::invalid_argument("class id out of range");
        auto& col = seen[static_cast<size_t>(id)];
        if (col && *col != g.color(v))
            throw std::invalid_argument("coloring does not refine the black/white coloring");
        col = g.color(v);
    }
    for (const auto& col : seen)
        if (!col) throw std::invalid_argument("empty class id");
}

}  // namespace

AdjacentSet adjacent_colors(const BicoloredGraph& g, const Coloring& c, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    auto adj = adjacency(g);
    auto ids = adjacent_ids(adj, c.classes, v);
    return AdjacentSet(ids.begin(), ids.end());
}

BicoloredGraph quotient_graph(const BicoloredGraph& g, const Coloring& c) {
    validate_coloring(g, c);
    std::vector<Color> colors(static_cast<size_t>(c.class_count), Color::Black);
    for (int v = 0; v < g.vertex_count(); ++v)
        colors[static_cast<size_t>(c.classes[static_cast<size_t>(v)])] = g.color(v);
    BicoloredGraph q(colors);
    std::set<std::pair<int, int>> added;
    for (const auto& [e, m] : g.edge_multiset()) {
        int a = c.classes[static_cast<size_t>(e.first)], b = c.classes[static_cast<size_t>(e.second)];
        if (a > b) std::swap(a, b);
        if (added.insert({a, b}).second) q.add_edge(a, b);
    }
    return q;
}

VertexMap quotient_map(const Coloring& c, const BicoloredGraph& quotient) {
    return VertexMap{c.graph, quotient, c.classes};
}

bool is_weak_covering(const VertexMap& m) {
    const auto& src = m.source;
    const auto& tgt = m.target;
    if (static_cast<int>(m.map.size()) != src.vertex_count())
        throw std::invalid_argument("vertex map is not total");
    for (int v = 0; v < src.vertex_count(); ++v) {
        int fv = m.map[static_cast<size_t>(v)];
        if (fv < 0 || fv >= tgt.vertex_count()) throw std::invalid_argument("vertex map image out of range");
        if (src.color(v) != tgt.color(fv)) return false;
    }
    // homomorphism: every source edge lands on a target edge
    for (const auto& [e, mult] : src.edge_multiset())
        if (tgt.multiplicity(m.map[static_cast<size_t>(e.first)], m.map[static_cast<size_t>(e.second)]) == 0)
            return false;
    // lifting: every target edge at f(v) is the image of an edge at v
    auto tgt_adj = adjacency(tgt);
    auto src_adj = adjacency(src);
    for (int v = 0; v < src.vertex_count(); ++v) {
        int fv = m.map[static_cast<size_t>(v)];
        std::set<int> covered;
        for (int w : src_adj[static_cast<size_t>(v)]) covered.insert(m.map[static_cast<size_t>(w)]);
        for (int x : tgt_adj[static_cast<size_t>(fv)])
            if (!covered.count(x)) return false;
    }
    return true;
}

Coloring initial_coloring(const BicoloredGraph& g) {
    Coloring c{g, std::vector<int>(static_cast<size_t>(g.vertex_count())), 0};
    for (int v = 0; v < g.vertex_count(); ++v)
        c.classes[static_cast<size_t>(v)] = g.color(v) == Color::Black ? 0 : 1;
    normalize_ids(c.classes, c.class_count);
    return c;
}

Coloring refine_step(const BicoloredGraph& g, const Coloring& c) {
    auto adj = adjacency(g);
    std::map<std::pair<int, std::vector<int>>, int> key_id;
    Coloring out{g, std::vector<int>(static_cast<size_t>(g.vertex_count())), 0};
    std::vector<std::pair<int, std::vector<int>>> keys;
    keys.reserve(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        keys.emplace_back(c.classes[static_cast<size_t>(v)], adjacent_ids(adj, c.classes, v));
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [it, fresh] = key_id.emplace(keys[static_cast<size_t>(v)], static_cast<int>(key_id.size()));
        out.classes[static_cast<size_t>(v)] = it->second;
    }
    out.class_count = static_cast<int>(key_id.size());
    return out;
}

Coloring refine_steps(const BicoloredGraph& g, int rounds) {
    Coloring c = initial_coloring(g);
    for (int r = 0; r < rounds; ++r) {
        Coloring next = refine_step(g, c);
        if (next.class_count == c.class_count) return c;  // stable, later rounds are no-ops
        c = std::move(next);
    }
    return c;
}

Coloring stable_coloring(const BicoloredGraph& g) {
    Coloring c = initial_coloring(g);
    for (;;) {
        Coloring next = refine_step(g, c);
        if (next.class_count == c.class_count) return c;
        c = std::move(next);
    }
}

MinimizeResult minimize(const BicoloredGraph& g) {
    require_connected(g, "minimize");
    Coloring c = stable_coloring(g);
    return {quotient_graph(g, c), std::move(c)};
}

MinimizeResult minimize_faithful(const BicoloredGraph& g) {
    require_connected(g, "minimize_faithful");
    auto adj = adjacency(g);
    int n = g.vertex_count();

    std::vector<int> cls(static_cast<size_t>(n));
    bool has_black = false, has_white = false;
    for (int v = 0; v < n; ++v) {
        if (g.color(v) == Color::Black) has_black = true;
        else has_white = true;
    }
    for (int v = 0; v < n; ++v)
        cls[static_cast<size_t>(v)] = (g.color(v) == Color::Black || !has_black) ? 0 : 1;
    int max_color = (has_black && has_white) ? 1 : 0;

    int current = 0;
    while (current <= max_color) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (cls[static_cast<size_t>(v)] == current) members.push_back(v);
        std::vector<std::vector<int>> adjsets;
        adjsets.reserve(members.size());
        for (int v : members) adjsets.push_back(adjacent_ids(adj, cls, v));
        bool split = false;
        for (size_t i = 1; i < members.size(); ++i)
            if (adjsets[i] != adjsets[0]) {
                split = true;
                break;
            }
        if (split) {
            ++max_color;
            for (size_t i = 0; i < members.size(); ++i)
                if (adjsets[i] == adjsets[0]) cls[static_cast<size_t>(members[i])] = max_color;
            current = 0;
        } else {
            ++current;
        }
    }

    Coloring c{g, std::move(cls), 0};
    normalize_ids(c.classes, c.class_count);
    return {quotient_graph(g, c), std::move(c)};
}

bool is_minimal(const BicoloredGraph& g) {
    require_connected(g, "is_minimal");
    if (!g.is_simple()) return false;
    return stable_coloring(g).is_discrete();
}

std::optional<VertexMap> bisimilar(const BicoloredGraph& g1, const BicoloredGraph& g2) {
    require_connected(g1, "bisimilar");
    require_connected(g2, "bisimilar");
    auto m1 = minimize(g1);
    auto m2 = minimize(g2);
    return are_isomorphic(m1.graph, m2.graph);
}

// ---------------------------------------------------------------------------
// oracle: exhaustive search over color-pure partitions

namespace {

bool covering_onto_some_smaller(const BicoloredGraph& g, std::vector<int>& blocks, int used, int v) {
    int n = g.vertex_count();
    if (v == n) {
        if (used == n) return false;  // not strictly smaller
        Coloring c{g, blocks, used};
        BicoloredGraph q = quotient_graph(g, c);
        return is_weak_covering(quotient_map(c, q));
    }
    for (int b = 0; b <= used && b < n; ++b) {
        if (b < used) {
            // block must stay color-pure
            int rep = -1;
            for (int u = 0; u < v; ++u)
                if (blocks[static_cast<size_t>(u)] == b) {
                    rep = u;
                    break;
                }
            if (g.color(rep) != g.color(v)) continue;
        }
        blocks[static_cast<size_t>(v)] = b;
        if (covering_onto_some_smaller(g, blocks, std::max(used, b + 1), v + 1)) return true;
    }
    return false;
}

}  // namespace

bool brute_force_minimal_oracle(const BicoloredGraph& g) {
    require_connected(g, "brute_force_minimal_oracle");
    if (g.vertex_count() > 6)
        throw std::invalid_argument("brute_force_minimal_oracle limited to 6 vertices");
    std::vector<int> blocks(static_cast<size_t>(g.vertex_count()), 0);
    return !covering_onto_some_smaller(g, blocks, 0, 0);
}

}  // namespace bicolor
