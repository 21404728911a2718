#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planeheight {

using VertexId = int;
using EdgeId = int;

/// A dart is an edge with a direction: dart 2e runs parent -> child of edge e,
/// dart 2e+1 runs child -> parent.
using Dart = int;

inline constexpr Dart dart_of(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
inline constexpr EdgeId dart_edge(Dart d) { return d / 2; }
inline constexpr Dart dart_reverse(Dart d) { return d ^ 1; }

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

struct TreeEdge {
  VertexId parent;
  VertexId child;
};

/// Plane (ordered) tree. Vertex ids are preorder, edge e joins parent(e+1) to
/// vertex e+1, and every rotation lists incident edge ids clockwise. For a
/// non-root vertex the rotation starts with the parent edge.
class OrderedTree {
public:
  OrderedTree() : OrderedTree(1, {}, {{}}) {}
  OrderedTree(int vertex_count, std::vector<TreeEdge> edges, std::vector<std::vector<EdgeId>> rotation);

  int vertex_count() const { return n_; }
  int edge_count() const { return n_ - 1; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const TreeEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<EdgeId>& rotation(VertexId v) const { return rotation_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].parent == v ? edges_[e].child : edges_[e].parent;
  }
  bool incident(EdgeId e, VertexId v) const { return edges_[e].parent == v || edges_[e].child == v; }

  /// Index of edge e in the rotation of v.
  int rotation_index(VertexId v, EdgeId e) const;

  VertexId dart_tail(Dart d) const { return (d & 1) ? edges_[d / 2].child : edges_[d / 2].parent; }
  VertexId dart_head(Dart d) const { return (d & 1) ? edges_[d / 2].parent : edges_[d / 2].child; }
  /// The dart along edge e leaving vertex v.
  Dart dart_from(EdgeId e, VertexId v) const { return dart_of(e, edges_[e].child == v); }

  /// Number of vertices on the head side of the dart (the subtree it points into).
  int subtree_size(Dart d) const { return subtree_size_[d]; }

  bool operator==(const OrderedTree& other) const {
    return n_ == other.n_ && rotation_ == other.rotation_ && edges_ == other.edges_;
  }

private:
  int n_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<EdgeId>> rotation_;
  std::vector<int> subtree_size_;
};

inline bool operator==(const TreeEdge& a, const TreeEdge& b) { return a.parent == b.parent && a.child == b.child; }

/// Canonical balanced-parenthesis text: vertex ::= '(' vertex* ')'.
OrderedTree parse_tree(std::string_view text);
std::string serialize_tree(const OrderedTree& t);

/// Same plane tree relabelled so that v becomes vertex 0. The root's children
/// are read starting at rotation(v)[0]. If old_ids is given it receives, for
/// each new vertex id, the id the vertex had in t.
OrderedTree reroot(const OrderedTree& t, VertexId v, std::vector<VertexId>* old_ids = nullptr);

/// Reflection of the plane: every rotation reversed.
OrderedTree mirror(const OrderedTree& t);

/// The tree without a degree-one vertex (the root included). Needs n >= 2.
OrderedTree remove_leaf(const OrderedTree& t, VertexId leaf);

/// Uniform random rooted ordered tree with the given number of edges.
OrderedTree random_tree(int edges, std::uint64_t seed);

/// All rooted ordered trees with the given number of edges, in lexicographic
/// order of their text form.
std::vector<OrderedTree> enumerate_trees(int edges);

/// Reads one tree per non-empty line; lines starting with '#' are skipped.
std::vector<OrderedTree> parse_tree_list(std::string_view text);

struct TreePath {
  std::vector<VertexId> vertices;
};

/// Anchor edges of a path in clockwise order around the contracted path,
/// stored as darts pointing away from the path.
struct AnchorFan {
  TreePath path;
  std::vector<Dart> anchors;
};

bool is_simple_path(const OrderedTree& t, const TreePath& p);

/// The vertices of the unique path between two vertices, inclusive.
TreePath path_between(const OrderedTree& t, VertexId from, VertexId to);

AnchorFan anchor_fan(const OrderedTree& t, const TreePath& p);

struct AnchoredSubtree {
  OrderedTree tree;  ///< rooted at the anchor's far endpoint
  std::vector<VertexId> vertices;  ///< original ids, in the subtree's preorder
};

AnchoredSubtree anchored_subtree(const OrderedTree& t, const TreePath& p, EdgeId anchor);

/// Vertices on the head side of a dart (the dart's subtree), in preorder from the head.
std::vector<VertexId> side_vertices(const OrderedTree& t, Dart d);

}  // namespace planeheight
