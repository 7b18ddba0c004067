#ifndef BICOLOR_UNFOLD_HPP
#define BICOLOR_UNFOLD_HPP

#include <memory>
#include <string>

#include "bicolor/graph.hpp"

namespace bicolor {

namespace detail {
struct UnfoldNode;
struct UnfoldPool;
}  // namespace detail

/// Depth-k isomorphism type of the countable-multiplicity cover tree at a
/// vertex. Children form a set: duplicate child types collapse, which is the
/// finite shadow of duplicating every edge countably often. Values share
/// structure internally; copies are cheap.
class UnfoldingType {
public:
    Color color() const;
    int depth() const;
    int child_count() const;
    UnfoldingType child(int i) const;

    /// Structural equality (works across values built from different graphs).
    bool operator==(const UnfoldingType& other) const;
    bool operator!=(const UnfoldingType& other) const { return !(*this == other); }

private:
    friend UnfoldingType unfolding(const BicoloredGraph&, int, int);
    friend std::string unfolding_key(const UnfoldingType&);
    UnfoldingType(std::shared_ptr<const detail::UnfoldPool> pool, const detail::UnfoldNode* node)
        : pool_(std::move(pool)), node_(node) {}

    std::shared_ptr<const detail::UnfoldPool> pool_;
    const detail::UnfoldNode* node_;
};

/// Depth-`depth` type at vertex v: the color of v together with the set of
/// depth-(depth-1) types of its neighbors (v itself included when it has a
/// loop). Memoized per (vertex, depth).
UnfoldingType unfolding(const BicoloredGraph& g, int v, int depth);

/// Canonical serialization; equal keys iff structurally equal types.
/// Beware: key length can grow quickly with depth on dense graphs.
std::string unfolding_key(const UnfoldingType& t);

/// Explicit cover tree with every edge duplicated `multiplicity` times,
/// rendered as DOT. Visualization only: unlike UnfoldingType, finite
/// multiplicities are not a bisimilarity invariant.
std::string unfolding_tree_dot(const BicoloredGraph& g, int v, int depth, int multiplicity = 1);

}  // namespace bicolor

#endif
