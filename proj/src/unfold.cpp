#include "bicolor/unfold.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace bicolor {

namespace detail {

struct UnfoldNode {
    Color color;
    int depth;
    std::vector<const UnfoldNode*> children;  // interned, sorted, deduplicated
};

struct UnfoldPool {
    std::vector<std::unique_ptr<UnfoldNode>> nodes;
};

namespace {

// Structural three-way comparison; nodes from one pool are interned, so
// pointer equality short-circuits. Both nodes must have equal depth.
int compare_nodes(const UnfoldNode* a, const UnfoldNode* b,
                  std::map<std::pair<const UnfoldNode*, const UnfoldNode*>, int>& memo) {
    if (a == b) return 0;
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    int r = 0;
    if (a->color != b->color) {
        r = a->color == Color::Black ? -1 : 1;
    } else {
        size_t k = std::min(a->children.size(), b->children.size());
        for (size_t i = 0; i < k && r == 0; ++i)
            r = compare_nodes(a->children[i], b->children[i], memo);
        if (r == 0 && a->children.size() != b->children.size())
            r = a->children.size() < b->children.size() ? -1 : 1;
    }
    memo[{a, b}] = r;
    return r;
}

}  // namespace
}  // namespace detail

namespace {

using detail::UnfoldNode;
using detail::UnfoldPool;

// Builds all types of one graph, interning structurally equal nodes so that
// equality within the pool is pointer equality.
class UnfoldBuilder {
public:
    explicit UnfoldBuilder(const BicoloredGraph& g) : g_(g), pool_(std::make_shared<UnfoldPool>()) {
        adj_.resize(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            adj_[static_cast<size_t>(v)] = g.neighbors(v);
            if (g.has_loop(v)) adj_[static_cast<size_t>(v)].push_back(v);
        }
    }

    const UnfoldNode* type_of(int v, int depth) {
        auto it = memo_.find({v, depth});
        if (it != memo_.end()) return it->second;
        std::vector<const UnfoldNode*> children;
        if (depth > 0) {
            for (int w : adj_[static_cast<size_t>(v)]) children.push_back(type_of(w, depth - 1));
            std::sort(children.begin(), children.end(),
                      [this](const UnfoldNode* a, const UnfoldNode* b) {
                          return detail::compare_nodes(a, b, cmp_memo_) < 0;
                      });
            children.erase(std::unique(children.begin(), children.end()), children.end());
        }
        const UnfoldNode* node = intern(g_.color(v), depth, std::move(children));
        memo_[{v, depth}] = node;
        return node;
    }

    std::shared_ptr<const UnfoldPool> pool() const { return pool_; }

private:
    const UnfoldNode* intern(Color color, int depth, std::vector<const UnfoldNode*> children) {
        auto key = std::make_pair(color, children);
        auto it = interned_.find(key);
        if (it != interned_.end()) return it->second;
        pool_->nodes.push_back(std::make_unique<UnfoldNode>(UnfoldNode{color, depth, std::move(children)}));
        const UnfoldNode* node = pool_->nodes.back().get();
        interned_.emplace(std::move(key), node);
        return node;
    }

    const BicoloredGraph& g_;
    std::shared_ptr<UnfoldPool> pool_;
    std::vector<std::vector<int>> adj_;
    std::map<std::pair<int, int>, const UnfoldNode*> memo_;
    std::map<std::pair<Color, std::vector<const UnfoldNode*>>, const UnfoldNode*> interned_;
    std::map<std::pair<const UnfoldNode*, const UnfoldNode*>, int> cmp_memo_;
};

}  // namespace

Color UnfoldingType::color() const { return node_->color; }
int UnfoldingType::depth() const { return node_->depth; }
int UnfoldingType::child_count() const { return static_cast<int>(node_->children.size()); }

UnfoldingType UnfoldingType::child(int i) const {
    return UnfoldingType(pool_, node_->children.at(static_cast<size_t>(i)));
}

bool UnfoldingType::operator==(const UnfoldingType& other) const {
    if (node_->depth != other.node_->depth) return false;
    std::map<std::pair<const UnfoldNode*, const UnfoldNode*>, int> memo;
    return detail::compare_nodes(node_, other.node_, memo) == 0;
}

UnfoldingType unfolding(const BicoloredGraph& g, int v, int depth) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    UnfoldBuilder builder(g);
    const UnfoldNode* root = builder.type_of(v, depth);
    return UnfoldingType(builder.pool(), root);
}

namespace {

std::string key_of(const UnfoldNode* node, std::map<const UnfoldNode*, std::string>& memo) {
    auto it = memo.find(node);
    if (it != memo.end()) return it->second;
    std::vector<std::string> parts;
    for (const UnfoldNode* c : node->children) parts.push_back(key_of(c, memo));
    std::sort(parts.begin(), parts.end());
    std::string key(1, color_letter(node->color));
    key += '[';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) key += ',';
        key += parts[i];
    }
    key += ']';
    memo[node] = key;
    return key;
}

}  // namespace

std::string unfolding_key(const UnfoldingType& t) {
    std::map<const UnfoldNode*, std::string> memo;
    return key_of(t.node_, memo);
}

// ---------------------------------------------------------------------------
// explicit cover tree, for pictures only

namespace {

struct TreeEmitter {
    const BicoloredGraph& g;
    int multiplicity;
    std::ostringstream out;
    int next_id = 0;

    // Edge ends at v: (other endpoint, copies). A loop contributes two ends.
    std::vector<std::pair<int, int>> ends_at(int v) const {
        std::vector<std::pair<int, int>> ends;
        for (const auto& [e, m] : g.edge_multiset()) {
            if (e.first == v && e.second == v) ends.emplace_back(v, 2 * m * multiplicity);
            else if (e.first == v) ends.emplace_back(e.second, m * multiplicity);
            else if (e.second == v) ends.emplace_back(e.first, m * multiplicity);
        }
        return ends;
    }

    int emit_vertex(int v) {
        int id = next_id++;
        out << "  n" << id << " [label=\"" << color_letter(g.color(v)) << "\"";
        if (g.color(v) == Color::Black) out << ", style=filled, fillcolor=black, fontcolor=white";
        out << "];\n";
        return id;
    }

    // parent < 0 at the root; otherwise one edge end toward the parent is
    // already used up by the edge we arrived along
    void expand(int v, int id, int depth, int parent) {
        if (depth == 0) return;
        for (auto [w, copies] : ends_at(v)) {
            int take = copies - (w == parent ? 1 : 0);
            for (int k = 0; k < take; ++k) {
                int cid = emit_vertex(w);
                out << "  n" << id << " -- n" << cid << ";\n";
                expand(w, cid, depth - 1, v);
            }
        }
    }
};

}  // namespace

std::string unfolding_tree_dot(const BicoloredGraph& g, int v, int depth, int multiplicity) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    TreeEmitter emitter{g, multiplicity};
    emitter.out << "graph cover_tree {\n  node [shape=circle];\n";
    int root = emitter.emit_vertex(v);
    emitter.expand(v, root, depth, -1);
    emitter.out << "}\n";
    return emitter.out.str();
}

}  // namespace bicolor
