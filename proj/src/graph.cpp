#include "bicolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "bicolor/refine.hpp"
#include "json.hpp"

namespace bicolor {

void BicoloredGraph::add_edge(int u, int v, int multiplicity) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
    if (u > v) std::swap(u, v);
    edges_[{u, v}] += multiplicity;
}

int BicoloredGraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
}

long long BicoloredGraph::edge_count() const {
    long long n = 0;
    for (const auto& [e, m] : edges_) n += m;
    return n;
}

bool BicoloredGraph::is_simple() const {
    for (const auto& [e, m] : edges_)
        if (m > 1) return false;
    return true;
}

std::vector<int> BicoloredGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [e, m] : edges_) {
        if (e.first == v && e.second != v) out.push_back(e.second);
        else if (e.second == v && e.first != v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int BicoloredGraph::degree(int v) const {
    int d = 0;
    for (const auto& [e, m] : edges_) {
        if (e.first == v) d += m;
        if (e.second == v) d += m;  // loops count twice
    }
    return d;
}

int BicoloredGraph::black_count() const {
    int b = 0;
    for (Color c : colors_)
        if (c == Color::Black) ++b;
    return b;
}

// ---------------------------------------------------------------------------
// parsing / serialization

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

ParsedGraph parse_graph_text(const std::string& text) {
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<Color> colors;
    std::vector<std::pair<int, int>> edges;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "bicolored-graph") continue;  // optional header
        if (tokens[0] == "v") {
            if (tokens.size() != 3) throw parse_error(lineno, "expected 'v <name> <b|w>'");
            if (index.count(tokens[1])) throw parse_error(lineno, "duplicate vertex '" + tokens[1] + "'");
            Color c;
            if (tokens[2] == "b") c = Color::Black;
            else if (tokens[2] == "w") c = Color::White;
            else throw parse_error(lineno, "unknown color token '" + tokens[2] + "'");
            index[tokens[1]] = static_cast<int>(names.size());
            names.push_back(tokens[1]);
            colors.push_back(c);
        } else if (tokens[0] == "e") {
            if (tokens.size() != 3) throw parse_error(lineno, "expected 'e <name> <name>'");
            for (int k = 1; k <= 2; ++k)
                if (!index.count(tokens[static_cast<size_t>(k)]))
                    throw parse_error(lineno, "unknown vertex '" + tokens[static_cast<size_t>(k)] + "'");
            edges.emplace_back(index[tokens[1]], index[tokens[2]]);
        } else {
            throw parse_error(lineno, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (colors.empty()) throw parse_error(0, "graph has no vertices");

    BicoloredGraph g(colors);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return {std::move(g), std::move(names)};
}

ParsedGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw parse_error(0, "expected object with a 'vertices' array");

    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<Color> colors;
    for (const auto& v : j["vertices"]) {
        std::string id = v.at("id").get<std::string>();
        std::string col = v.at("color").get<std::string>();
        Color c;
        if (col == "black") c = Color::Black;
        else if (col == "white") c = Color::White;
        else throw parse_error(0, "unknown color token '" + col + "'");
        if (index.count(id)) throw parse_error(0, "duplicate vertex '" + id + "'");
        index[id] = static_cast<int>(names.size());
        names.push_back(id);
        colors.push_back(c);
    }
    if (colors.empty()) throw parse_error(0, "graph has no vertices");

    BicoloredGraph g(colors);
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw parse_error(0, "edge must be a pair of vertex ids");
            std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
            if (!index.count(a)) throw parse_error(0, "unknown vertex '" + a + "'");
            if (!index.count(b)) throw parse_error(0, "unknown vertex '" + b + "'");
            g.add_edge(index[a], index[b]);
        }
    }
    return {std::move(g), std::move(names)};
}

}  // namespace

ParsedGraph parse_graph_with_names(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

BicoloredGraph parse_graph(const std::string& text) { return parse_graph_with_names(text).graph; }

std::string serialize_graph(const BicoloredGraph& g) {
    std::ostringstream out;
    out << "bicolored-graph v1\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "v " << v << ' ' << color_letter(g.color(v)) << '\n';
    for (const auto& [e, m] : g.edge_multiset())
        for (int k = 0; k < m; ++k) out << "e " << e.first << ' ' << e.second << '\n';
    return out.str();
}

std::string serialize_graph_json(const BicoloredGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        j["vertices"].push_back({{"id", std::to_string(v)},
                                 {"color", g.color(v) == Color::Black ? "black" : "white"}});
    j["edges"] = nlohmann::json::array();
    for (const auto& [e, m] : g.edge_multiset())
        for (int k = 0; k < m; ++k)
            j["edges"].push_back({std::to_string(e.first), std::to_string(e.second)});
    return j.dump();
}

// ---------------------------------------------------------------------------
// connectivity

bool is_connected(const BicoloredGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [e, m] : g.edge_multiset()) {
        if (e.first == e.second) continue;
        adj[static_cast<size_t>(e.first)].push_back(e.second);
        adj[static_cast<size_t>(e.second)].push_back(e.first);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

// ---------------------------------------------------------------------------
// canonical form for minimal graphs (key-sorted refinement)

namespace {

// One round of label-independent refinement. Keys are
// (previous rank, sorted neighbor ranks, loop flag); new ranks are assigned
// in sorted key order. Returns the number of distinct ranks.
int canonical_round(const BicoloredGraph& g, std::vector<int>& rank) {
    int n = g.vertex_count();
    using Key = std::tuple<int, std::vector<int>, bool>;
    std::vector<Key> keys(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (int w : g.neighbors(v)) nb.push_back(rank[static_cast<size_t>(w)]);
        std::sort(nb.begin(), nb.end());
        keys[static_cast<size_t>(v)] = {rank[static_cast<size_t>(v)], std::move(nb), g.has_loop(v)};
    }
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
        rank[static_cast<size_t>(v)] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<size_t>(v)]) - sorted.begin());
    return static_cast<int>(sorted.size());
}

std::vector<int> canonical_ranks(const BicoloredGraph& g) {
    int n = g.vertex_count();
    std::vector<int> rank(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) rank[static_cast<size_t>(v)] = g.color(v) == Color::Black ? 0 : 1;
    int classes = static_cast<int>(std::set<int>(rank.begin(), rank.end()).size());
    while (classes < n) {
        int next = canonical_round(g, rank);
        if (next == classes)
            throw std::invalid_argument("canonical_form requires a minimal graph");
        classes = next;
    }
    return rank;
}

}  // namespace

std::vector<int> canonical_order(const BicoloredGraph& g) {
    if (!is_minimal(g)) throw std::invalid_argument("canonical_form requires a minimal graph");
    auto rank = canonical_ranks(g);
    std::vector<int> order(rank.size());
    for (size_t v = 0; v < rank.size(); ++v) order[static_cast<size_t>(rank[v])] = static_cast<int>(v);
    return order;
}

BicoloredGraph canonical_form(const BicoloredGraph& g) {
    auto order = canonical_order(g);
    std::vector<int> new_index(order.size());
    for (size_t i = 0; i < order.size(); ++i) new_index[static_cast<size_t>(order[i])] = static_cast<int>(i);
    return apply_permutation(g, new_index);
}

BicoloredGraph apply_permutation(const BicoloredGraph& g, const std::vector<int>& new_index_of) {
    int n = g.vertex_count();
    std::vector<Color> colors(static_cast<size_t>(n), Color::Black);
    for (int v = 0; v < n; ++v) colors[static_cast<size_t>(new_index_of[static_cast<size_t>(v)])] = g.color(v);
    BicoloredGraph out(colors);
    for (const auto& [e, m] : g.edge_multiset())
        out.add_edge(new_index_of[static_cast<size_t>(e.first)], new_index_of[static_cast<size_t>(e.second)], m);
    return out;
}

// ---------------------------------------------------------------------------
// isomorphism and automorphisms

namespace {

// Tries every color-preserving bijection; returns the first edge-preserving one.
std::optional<std::vector<int>> brute_force_isomorphism(const BicoloredGraph& g1,
                                                        const BicoloredGraph& g2) {
    int n = g1.vertex_count();
    std::vector<int> blacks1, whites1, blacks2, whites2;
    for (int v = 0; v < n; ++v)
        (g1.color(v) == Color::Black ? blacks1 : whites1).push_back(v);
    for (int v = 0; v < n; ++v)
        (g2.color(v) == Color::Black ? blacks2 : whites2).push_back(v);

    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<int> pb(blacks2.size()), pw(whites2.size());
    std::iota(pb.begin(), pb.end(), 0);
    auto edges_match = [&]() {
        for (const auto& [e, m] : g1.edge_multiset())
            if (g2.multiplicity(map[static_cast<size_t>(e.first)], map[static_cast<size_t>(e.second)]) != m)
                return false;
        return g1.edge_count() == g2.edge_count();
    };
    do {
        for (size_t i = 0; i < blacks1.size(); ++i)
            map[static_cast<size_t>(blacks1[i])] = blacks2[static_cast<size_t>(pb[i])];
        std::iota(pw.begin(), pw.end(), 0);
        do {
            for (size_t i = 0; i < whites1.size(); ++i)
                map[static_cast<size_t>(whites1[i])] = whites2[static_cast<size_t>(pw[i])];
            if (edges_match()) return map;
        } while (std::next_permutation(pw.begin(), pw.end()));
    } while (std::next_permutation(pb.begin(), pb.end()));
    return std::nullopt;
}

bool same_degree_profile(const BicoloredGraph& g1, const BicoloredGraph& g2) {
    auto profile = [](const BicoloredGraph& g) {
        std::vector<std::pair<int, int>> p;
        for (int v = 0; v < g.vertex_count(); ++v)
            p.emplace_back(static_cast<int>(g.color(v)), g.degree(v));
        std::sort(p.begin(), p.end());
        return p;
    };
    return profile(g1) == profile(g2);
}

bool is_minimal_for_iso(const BicoloredGraph& g);

}  // namespace

std::optional<VertexMap> are_isomorphic(const BicoloredGraph& g1, const BicoloredGraph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return std::nullopt;
    if (g1.black_count() != g2.black_count()) return std::nullopt;
    if (g1.edge_count() != g2.edge_count()) return std::nullopt;
    if (g1.distinct_edge_count() != g2.distinct_edge_count()) return std::nullopt;
    if (!same_degree_profile(g1, g2)) return std::nullopt;

    if (is_minimal_for_iso(g1) && is_minimal_for_iso(g2)) {
        if (canonical_form(g1) != canonical_form(g2)) return std::nullopt;
        auto o1 = canonical_order(g1), o2 = canonical_order(g2);
        std::vector<int> map(o1.size());
        for (size_t p = 0; p < o1.size(); ++p) map[static_cast<size_t>(o1[p])] = o2[p];
        return VertexMap{g1, g2, std::move(map)};
    }

    if (g1.vertex_count() > 12)
        throw std::invalid_argument("are_isomorphic: non-minimal inputs limited to 12 vertices");
    auto map = brute_force_isomorphism(g1, g2);
    if (!map) return std::nullopt;
    return VertexMap{g1, g2, std::move(*map)};
}

long long automorphism_count(const BicoloredGraph& g) {
    int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("automorphism_count limited to 10 vertices");
    std::vector<int> blacks, whites;
    for (int v = 0; v < n; ++v) (g.color(v) == Color::Black ? blacks : whites).push_back(v);

    std::vector<int> map(static_cast<size_t>(n));
    std::vector<int> pb(blacks.size()), pw(whites.size());
    std::iota(pb.begin(), pb.end(), 0);
    long long count = 0;
    do {
        for (size_t i = 0; i < blacks.size(); ++i)
            map[static_cast<size_t>(blacks[i])] = blacks[static_cast<size_t>(pb[i])];
        std::iota(pw.begin(), pw.end(), 0);
        do {
            for (size_t i = 0; i < whites.size(); ++i)
                map[static_cast<size_t>(whites[i])] = whites[static_cast<size_t>(pw[i])];
            bool ok = true;
            for (const auto& [e, m] : g.edge_multiset())
                if (g.multiplicity(map[static_cast<size_t>(e.first)], map[static_cast<size_t>(e.second)]) != m) {
                    ok = false;
                    break;
                }
            if (ok) ++count;
        } while (std::next_permutation(pw.begin(), pw.end()));
    } while (std::next_permutation(pb.begin(), pb.end()));
    return count;
}

// ---------------------------------------------------------------------------

std::pair<BicoloredGraph, VertexMap> collapse_multiedges(const BicoloredGraph& g) {
    BicoloredGraph out(g.colors());
    for (const auto& [e, m] : g.edge_multiset()) out.add_edge(e.first, e.second, 1);
    std::vector<int> identity(static_cast<size_t>(g.vertex_count()));
    std::iota(identity.begin(), identity.end(), 0);
    return {out, VertexMap{g, out, std::move(identity)}};
}

std::string to_dot(const BicoloredGraph& g) {
    std::ostringstream out;
    out << "graph bicolored {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.color(v) == Color::Black)
            out << " [style=filled, fillcolor=black, fontcolor=white]";
        out << ";\n";
    }
    for (const auto& [e, m] : g.edge_multiset())
        for (int k = 0; k < m; ++k) out << "  " << e.first << " -- " << e.second << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

bool is_minimal_for_iso(const BicoloredGraph& g) {
    return is_connected(g) && is_minimal(g);
}

}  // namespace

}  // namespace bicolor
