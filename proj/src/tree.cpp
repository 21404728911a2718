#include "planeheight/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace planeheight {

OrderedTree::OrderedTree(int vertex_count, std::vector<TreeEdge> edges, std::vector<std::vector<EdgeId>> rotation)
    : n_(vertex_count), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (n_ < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (static_cast<int>(edges_.size()) != n_ - 1) throw std::invalid_argument("tree needs exactly n-1 edges");
  if (static_cast<int>(rotation_.size()) != n_) throw std::invalid_argument("one rotation per vertex required");
  std::vector<int> seen(edges_.size(), 0);
  for (VertexId v = 0; v < n_; ++v) {
    for (EdgeId e : rotation_[v]) {
      if (e < 0 || e >= edge_count() || !incident(e, v)) throw std::invalid_argument("rotation lists a non-incident edge");
      ++seen[e];
    }
  }
  for (int c : seen)
    if (c != 2) throw std::invalid_argument("every edge must appear in both endpoint rotations");

  // Sizes of the subtrees hanging below each vertex (rooted at 0); edges point
  // from lower to higher preorder ids, so a reverse sweep accumulates them.
  std::vector<int> below(n_, 1);
  for (EdgeId e = edge_count() - 1; e >= 0; --e) {
    if (edges_[e].parent >= edges_[e].child) throw std::invalid_argument("edges must run from a lower to a higher preorder id");
    below[edges_[e].parent] += below[edges_[e].child];
  }
  if (below[0] != n_) throw std::invalid_argument("tree is not connected");
  subtree_size_.resize(2 * edges_.size());
  for (EdgeId e = 0; e < edge_count(); ++e) {
    subtree_size_[dart_of(e, false)] = below[edges_[e].child];
    subtree_size_[dart_of(e, true)] = n_ - below[edges_[e].child];
  }
}

int OrderedTree::rotation_index(VertexId v, EdgeId e) const {
  const auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), e);
  if (it == rot.end()) throw std::invalid_argument("edge not incident to vertex");
  return static_cast<int>(it - rot.begin());
}

namespace {

struct Canonical {
  OrderedTree tree;
  std::vector<VertexId> old_ids;
};

// Relabels the part of `t` reachable from `root` without crossing `blocked`
// into canonical preorder form. `start` is the rotation index at which the
// root's children begin.
Canonical build_canonical(const OrderedTree& t, const std::vector<std::vector<EdgeId>>& rot, VertexId root, int start,
                          EdgeId blocked) {
  std::vector<VertexId> old_ids;
  std::vector<TreeEdge> edges;
  std::vector<std::vector<EdgeId>> rotation;
  struct Frame {
    VertexId old;
    VertexId fresh;
    EdgeId via;  // edge from parent in the old tree, -1 at the root
  };
  std::vector<Frame> stack;
  old_ids.push_back(root);
  rotation.emplace_back();
  stack.push_back({root, 0, blocked});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const auto& r = rot[f.old];
    const int d = static_cast<int>(r.size());
    int first = start;
    if (f.fresh != 0 || blocked >= 0) {
      if (f.via >= 0) {
        auto it = std::find(r.begin(), r.end(), f.via);
        first = static_cast<int>(it - r.begin()) + 1;
      }
    }
    std::vector<Frame> children;
    for (int i = 0; i < d; ++i) {
      EdgeId e = r[(first + i) % d];
      if (e == f.via) continue;
      VertexId w = t.other_end(e, f.old);
      VertexId fresh = static_cast<VertexId>(old_ids.size());
      old_ids.push_back(w);
      rotation.emplace_back();
      EdgeId ne = static_cast<EdgeId>(edges.size());
      edges.push_back({f.fresh, fresh});
      rotation[f.fresh].push_back(ne);
      rotation[fresh].push_back(ne);
      children.push_back({w, fresh, e});
    }
    // Preorder needs children of a vertex numbered before grandchildren of
    // earlier siblings; renumber afterwards instead of juggling the stack.
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  // The construction above is breadth-like per vertex; renumber into true preorder.
  const int n = static_cast<int>(old_ids.size());
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<VertexId> perm(n, -1);
  std::function<void(VertexId)> visit = [&](VertexId v) {
    perm[v] = static_cast<VertexId>(order.size());
    order.push_back(v);
    const auto& rv = rotation[v];
    for (EdgeId e : rv) {
      VertexId w = edges[e].parent == v ? edges[e].child : edges[e].parent;
      if (w != v && perm[w] < 0 && edges[e].parent == v) visit(w);
    }
  };
  visit(0);
  std::vector<TreeEdge> edges2(n - 1);
  std::vector<std::vector<EdgeId>> rotation2(n);
  std::vector<VertexId> old2(n);
  for (VertexId v = 0; v < n; ++v) old2[perm[v]] = old_ids[v];
  std::vector<EdgeId> edge_map(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    VertexId c = perm[edges[e].child];
    edge_map[e] = c - 1;
    edges2[c - 1] = {perm[edges[e].parent], c};
  }
  for (VertexId v = 0; v < n; ++v)
    for (EdgeId e : rotation[v]) rotation2[perm[v]].push_back(edge_map[e]);
  return {OrderedTree(n, std::move(edges2), std::move(rotation2)), std::move(old2)};
}

std::vector<std::vector<EdgeId>> rotations_of(const OrderedTree& t) {
  std::vector<std::vector<EdgeId>> rot(t.vertex_count());
  for (VertexId v = 0; v < t.vertex_count(); ++v) rot[v] = t.rotation(v);
  return rot;
}

}  // namespace

OrderedTree parse_tree(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw ParseError("empty tree text", begin);
  if (text[begin] != '(') throw ParseError("expected '('", begin);

  std::vector<TreeEdge> edges;
  std::vector<std::vector<EdgeId>> rotation;
  std::vector<VertexId> stack;
  bool closed_root = false;
  for (std::size_t i = begin; i < end; ++i) {
    char c = text[i];
    if (closed_root) throw ParseError("trailing characters after the root", i);
    if (c == '(') {
      VertexId v = static_cast<VertexId>(rotation.size());
      rotation.emplace_back();
      if (!stack.empty()) {
        EdgeId e = static_cast<EdgeId>(edges.size());
        edges.push_back({stack.back(), v});
        rotation[stack.back()].push_back(e);
        rotation[v].push_back(e);
      }
      stack.push_back(v);
    } else if (c == ')') {
      if (stack.empty()) throw ParseError("unbalanced ')'", i);
      stack.pop_back();
      if (stack.empty()) closed_root = true;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (!stack.empty()) throw ParseError("unbalanced '('", end);
  const int n = static_cast<int>(rotation.size());
  return OrderedTree(n, std::move(edges), std::move(rotation));
}

std::string serialize_tree(const OrderedTree& t) {
  std::string out;
  out.reserve(2 * t.vertex_count());
  std::function<void(VertexId)> emit = [&](VertexId v) {
    out.push_back('(');
    for (EdgeId e : t.rotation(v))
      if (t.edge(e).parent == v) emit(t.edge(e).child);
    out.push_back(')');
  };
  emit(0);
  return out;
}

OrderedTree reroot(const OrderedTree& t, VertexId v, std::vector<VertexId>* old_ids) {
  if (v < 0 || v >= t.vertex_count()) throw std::out_of_range("reroot: vertex out of range");
  auto c = build_canonical(t, rotations_of(t), v, 0, -1);
  if (old_ids) *old_ids = std::move(c.old_ids);
  return std::move(c.tree);
}

OrderedTree remove_leaf(const OrderedTree& t, VertexId leaf) {
  if (leaf < 0 || leaf >= t.vertex_count() || t.degree(leaf) != 1) throw std::invalid_argument("not a leaf");
  if (leaf == 0) {
    std::vector<VertexId> old;
    OrderedTree r = reroot(t, t.other_end(t.rotation(0)[0], 0), &old);
    return remove_leaf(r, static_cast<VertexId>(std::find(old.begin(), old.end(), 0) - old.begin()));
  }
  // vertex v owns the v-th opening bracket; a leaf's is followed by its close
  std::string text = serialize_tree(t);
  std::size_t at = 0;
  for (int seen = -1; at < text.size(); ++at)
    if (text[at] == '(' && ++seen == leaf) break;
  text.erase(at, 2);
  return parse_tree(text);
}

OrderedTree mirror(const OrderedTree& t) {
  auto rot = rotations_of(t);
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return build_canonical(t, rot, 0, 0, -1).tree;
}

OrderedTree random_tree(int edges, std::uint64_t seed) {
  if (edges < 0) throw std::invalid_argument("random_tree: negative edge count");
  // Cycle lemma: a uniformly shuffled word with k up-steps and k+1 down-steps
  // has exactly one rotation whose proper prefixes stay non-negative.
  std::vector<int> steps(2 * edges + 1, -1);
  std::fill(steps.begin(), steps.begin() + edges, 1);
  std::mt19937_64 rng(seed);
  std::shuffle(steps.begin(), steps.end(), rng);
  int sum = 0, best = 1, at = 0;
  for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
    sum += steps[i];
    if (sum < best) {
      best = sum;
      at = i;
    }
  }
  std::string text = "(";
  for (int i = 1; i < static_cast<int>(steps.size()); ++i)
    text.push_back(steps[(at + i) % steps.size()] > 0 ? '(' : ')');
  text.push_back(')');
  return parse_tree(text);
}

std::vector<OrderedTree> enumerate_trees(int edges) {
  std::vector<OrderedTree> out;
  std::string word;
  std::function<void(int, int)> rec = [&](int open, int close) {
    if (open == edges && close == edges) {
      out.push_back(parse_tree("(" + word + ")"));
      return;
    }
    if (open < edges) {
      word.push_back('(');
      rec(open + 1, close);
      word.pop_back();
    }
    if (close < open) {
      word.push_back(')');
      rec(open, close + 1);
      word.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<OrderedTree> parse_tree_list(std::string_view text) {
  std::vector<OrderedTree> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_tree(line));
  }
  return out;
}

bool is_simple_path(const OrderedTree& t, const TreePath& p) {
  if (p.vertices.empty()) return false;
  std::vector<char> seen(t.vertex_count(), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    VertexId v = p.vertices[i];
    if (v < 0 || v >= t.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0) {
      bool adjacent = false;
      for (EdgeId e : t.rotation(v))
        if (t.other_end(e, v) == p.vertices[i - 1]) adjacent = true;
      if (!adjacent) return false;
    }
  }
  return true;
}

TreePath path_between(const OrderedTree& t, VertexId from, VertexId to) {
  std::vector<VertexId> parent(t.vertex_count(), -1);
  std::vector<VertexId> queue{from};
  parent[from] = from;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId v = queue[i];
    for (EdgeId e : t.rotation(v)) {
      VertexId w = t.other_end(e, v);
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  TreePath p;
  for (VertexId v = to; v != from; v = parent[v]) p.vertices.push_back(v);
  p.vertices.push_back(from);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

namespace {
EdgeId edge_between(const OrderedTree& t, VertexId a, VertexId b) {
  for (EdgeId e : t.rotation(a))
    if (t.other_end(e, a) == b) return e;
  throw std::invalid_argument("vertices are not adjacent");
}
}  // namespace

AnchorFan anchor_fan(const OrderedTree& t, const TreePath& p) {
  if (!is_simple_path(t, p)) throw std::invalid_argument("anchor_fan: not a simple path");
  AnchorFan fan{p, {}};
  const auto& P = p.vertices;
  const int k = static_cast<int>(P.size());
  // Sweep v clockwise strictly after edge `from` up to (not including) edge `to`;
  // from == to sweeps everything but that edge, from < 0 sweeps the whole rotation.
  auto sweep = [&](VertexId v, EdgeId from, EdgeId to) {
    const auto& r = t.rotation(v);
    const int d = static_cast<int>(r.size());
    if (d == 0) return;
    int i = from < 0 ? 0 : (t.rotation_index(v, from) + 1) % d;
    for (int steps = 0; steps < d; ++steps, i = (i + 1) % d) {
      if (r[i] == to) break;
      fan.anchors.push_back(t.dart_from(r[i], v));
    }
  };
  if (k == 1) {
    sweep(P[0], -1, -1);
    return fan;
  }
  std::vector<EdgeId> pe(k - 1);
  for (int i = 0; i + 1 < k; ++i) pe[i] = edge_between(t, P[i], P[i + 1]);
  sweep(P[0], pe[0], pe[0]);
  for (int i = 1; i + 1 < k; ++i) sweep(P[i], pe[i - 1], pe[i]);
  sweep(P[k - 1], pe[k - 2], pe[k - 2]);
  for (int i = k - 2; i >= 1; --i) sweep(P[i], pe[i], pe[i - 1]);
  return fan;
}

AnchoredSubtree anchored_subtree(const OrderedTree& t, const TreePath& p, EdgeId anchor) {
  AnchorFan fan = anchor_fan(t, p);
  auto it = std::find_if(fan.anchors.begin(), fan.anchors.end(), [&](Dart d) { return dart_edge(d) == anchor; });
  if (it == fan.anchors.end()) throw std::invalid_argument("anchored_subtree: edge is not an anchor of the path");
  VertexId root = t.dart_head(*it);
  auto c = build_canonical(t, rotations_of(t), root, 0, anchor);
  return {std::move(c.tree), std::move(c.old_ids)};
}

std::vector<VertexId> side_vertices(const OrderedTree& t, Dart d) {
  std::vector<VertexId> out{t.dart_head(d)};
  std::vector<char> seen(t.vertex_count(), 0);
  seen[t.dart_head(d)] = 1;
  seen[t.dart_tail(d)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (EdgeId e : t.rotation(out[i])) {
      VertexId w = t.other_end(e, out[i]);
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  return out;
}

}  // namespace planeheight
