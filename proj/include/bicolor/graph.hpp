#ifndef BICOLOR_GRAPH_HPP
#define BICOLOR_GRAPH_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bicolor {

enum class Color : unsigned char { Black, White };

inline char color_letter(Color c) { return c == Color::Black ? 'b' : 'w'; }

/// Error raised by the text/JSON graph parsers; carries a 1-based line number
/// (0 when the location is not line-addressable, e.g. JSON input).
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
};

/// Finite multigraph with loops, each vertex colored black or white.
/// Vertex identity is the index; the edge multiset is stored as
/// sorted pair -> multiplicity.
class BicoloredGraph {
public:
    using EdgeMap = std::map<std::pair<int, int>, int>;

    BicoloredGraph() = default;
    explicit BicoloredGraph(std::vector<Color> colors) : colors_(std::move(colors)) {}

    int vertex_count() const { return static_cast<int>(colors_.size()); }
    Color color(int v) const { return colors_.at(static_cast<size_t>(v)); }
    const std::vector<Color>& colors() const { return colors_; }

    /// Adds `multiplicity` parallel copies of the undirected edge {u,v}.
    void add_edge(int u, int v, int multiplicity = 1);

    int multiplicity(int u, int v) const;
    bool has_loop(int v) const { return multiplicity(v, v) > 0; }
    const EdgeMap& edge_multiset() const { return edges_; }

    /// Total edge count with multiplicity.
    long long edge_count() const;
    /// Number of distinct vertex pairs carrying an edge.
    int distinct_edge_count() const { return static_cast<int>(edges_.size()); }
    bool is_simple() const;

    /// Distinct neighbors of v, sorted, excluding v itself (see has_loop).
    std::vector<int> neighbors(int v) const;
    /// Degree counting multiplicity; a loop counts twice.
    int degree(int v) const;

    int black_count() const;

    bool operator==(const BicoloredGraph& other) const = default;

private:
    std::vector<Color> colors_;
    EdgeMap edges_;
};

/// Color-preserving vertex map between two graphs. Holds copies of both
/// graphs so the value never dangles.
struct VertexMap {
    BicoloredGraph source;
    BicoloredGraph target;
    std::vector<int> map;  // source vertex -> target vertex
};

struct ParsedGraph {
    BicoloredGraph graph;
    std::vector<std::string> names;  // original vertex names, by index
};

/// Parses the line-oriented graph format, or JSON when the first
/// non-space character is '{'. Throws parse_error.
BicoloredGraph parse_graph(const std::string& text);
ParsedGraph parse_graph_with_names(const std::string& text);

std::string serialize_graph(const BicoloredGraph& g);
std::string serialize_graph_json(const BicoloredGraph& g);

/// True iff every vertex is reachable from vertex 0 (edges undirected,
/// loops irrelevant).
bool is_connected(const BicoloredGraph& g);

/// Color-preserving bijection carrying the edge multiset of g1 onto g2,
/// or nullopt. Uses canonical forms when both graphs are minimal;
/// otherwise brute force, guarded at 12 vertices.
std::optional<VertexMap> are_isomorphic(const BicoloredGraph& g1, const BicoloredGraph& g2);

/// Number of color- and edge-multiset-preserving self-bijections.
/// Brute force; guarded at 10 vertices.
long long automorphism_count(const BicoloredGraph& g);

/// Label-independent relabeling of a minimal graph. Throws
/// std::invalid_argument when g is not minimal.
BicoloredGraph canonical_form(const BicoloredGraph& g);

/// The vertex order behind canonical_form: result[i] is the original
/// index of the vertex placed at position i.
std::vector<int> canonical_order(const BicoloredGraph& g);

/// Clamps every multiplicity to 1. The returned identity-on-vertices map
/// is a weak covering.
std::pair<BicoloredGraph, VertexMap> collapse_multiedges(const BicoloredGraph& g);

/// Undirected DOT document; black vertices filled, parallel edges and
/// loops emitted once per multiplicity.
std::string to_dot(const BicoloredGraph& g);

/// Relabels g: new_index_of[v] is the new position of old vertex v.
BicoloredGraph apply_permutation(const BicoloredGraph& g, const std::vector<int>& new_index_of);

}  // namespace bicolor

#endif
