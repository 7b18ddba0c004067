#ifndef BICOLOR_REFINE_HPP
#define BICOLOR_REFINE_HPP

#include <optional>
#include <set>

#include "bicolor/graph.hpp"

namespace bicolor {

/// Partition of a graph's vertices into classes refining the black/white
/// coloring. Class ids are dense, 0-based, and ordered by first occurrence.
struct Coloring {
    BicoloredGraph graph;
    std::vector<int> classes;  // vertex -> class id
    int class_count = 0;

    bool is_discrete() const { return class_count == static_cast<int>(classes.size()); }
};

using AdjacentSet = std::set<int>;

/// Classes adjacent to v under c, including c(v) itself when v has a loop.
/// Multiplicity is ignored.
AdjacentSet adjacent_colors(const BicoloredGraph& g, const Coloring& c, int v);

/// Graph on the classes of c: an edge joins two classes iff some edge of g
/// joins members of them. Output is simple (loops allowed).
BicoloredGraph quotient_graph(const BicoloredGraph& g, const Coloring& c);

/// Reads c as the map from its graph onto the given quotient.
VertexMap quotient_map(const Coloring& c, const BicoloredGraph& quotient);

/// True iff m preserves colors, maps every edge to an edge, and lifts every
/// target edge at f(v) to an edge at v.
bool is_weak_covering(const VertexMap& m);

/// The black/white partition itself (black class first when both occur).
Coloring initial_coloring(const BicoloredGraph& g);

/// One simultaneous round: splits every class by adjacent_colors.
Coloring refine_step(const BicoloredGraph& g, const Coloring& c);

/// `rounds` simultaneous rounds from the initial coloring.
Coloring refine_steps(const BicoloredGraph& g, int rounds);

/// Coarsest stable refinement of the black/white coloring (fixpoint of
/// refine_step). Works on disconnected graphs too.
Coloring stable_coloring(const BicoloredGraph& g);

struct MinimizeResult {
    BicoloredGraph graph;
    Coloring coloring;
};

/// Single-split scan with restart, exactly as the published loop: walk the
/// classes from 0; on the first class holding two vertices with different
/// adjacent sets, move the subclass matching the lowest-index witness to a
/// fresh class and restart the scan.
MinimizeResult minimize_faithful(const BicoloredGraph& g);

/// Optimized equivalent of minimize_faithful (simultaneous key-based
/// rounds); produces the identical partition.
MinimizeResult minimize(const BicoloredGraph& g);

/// True iff g is simple and its stable partition is discrete.
bool is_minimal(const BicoloredGraph& g);

/// Present iff the minimal graphs of g1 and g2 are isomorphic; the witness
/// is the (unique) isomorphism between them.
std::optional<VertexMap> bisimilar(const BicoloredGraph& g1, const BicoloredGraph& g2);

/// Independent oracle for is_minimal: searches every color-pure partition
/// of V(g) with fewer classes for a quotient that g weakly covers.
/// Guarded at 6 vertices.
bool brute_force_minimal_oracle(const BicoloredGraph& g);

}  // namespace bicolor

#endif
