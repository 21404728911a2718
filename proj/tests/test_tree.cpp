#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "planeheight/tree.hpp"

#include <map>
#include <set>

using namespace planeheight;

TEST_CASE("parse small trees") {
  auto a = parse_tree("()");
  CHECK(a.vertex_count() == 1);
  CHECK(a.edge_count() == 0);

  auto b = parse_tree("(())");
  CHECK(b.vertex_count() == 2);
  CHECK(b.edge(0).parent == 0);
  CHECK(b.edge(0).child == 1);

  auto star = parse_tree("(()()())");
  CHECK(star.degree(0) == 3);
  CHECK(star.rotation(0) == std::vector<EdgeId>{0, 1, 2});
  for (EdgeId e = 0; e < 3; ++e) CHECK(star.edge(e).child == e + 1);
}

TEST_CASE("non-root rotation starts at the parent edge") {
  auto t = parse_tree("((()()))");
  CHECK(t.rotation(1) == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_tree("   "), ParseError);
  try {
    parse_tree("(()");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  try {
    parse_tree("())");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_tree("(x)");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("serialize round trip") {
  CHECK(serialize_tree(OrderedTree()) == "()");
  CHECK(serialize_tree(parse_tree("((())())")) == "((())())");
  CHECK(serialize_tree(parse_tree("(()()())")) == "(()()())");
  for (int k = 0; k <= 8; ++k)
    for (const auto& t : enumerate_trees(k)) CHECK(parse_tree(serialize_tree(t)) == t);
}

TEST_CASE("enumeration counts are Catalan") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int k = 0; k <= 8; ++k) {
    auto all = enumerate_trees(k);
    CHECK(static_cast<int>(all.size()) == catalan[k]);
    std::set<std::string> distinct;
    for (const auto& t : all) distinct.insert(serialize_tree(t));
    CHECK(static_cast<int>(distinct.size()) == catalan[k]);
  }
}

TEST_CASE("reroot") {
  CHECK(serialize_tree(reroot(parse_tree("(())"), 1)) == "(())");
  auto t = parse_tree("((())())");
  CHECK(reroot(t, 0) == t);
  CHECK(serialize_tree(reroot(parse_tree("((()))"), 1)) == "(()())");
  CHECK_THROWS(reroot(t, 7));
}

namespace {
// Rotation of each vertex as a cyclic list of neighbour ids, rotated so the
// smallest neighbour comes first. Two trees with a vertex bijection must agree.
std::vector<std::vector<VertexId>> cyclic_neighbours(const OrderedTree& t, const std::vector<VertexId>& relabel) {
  std::vector<std::vector<VertexId>> out(t.vertex_count());
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    std::vector<VertexId> nb;
    for (EdgeId e : t.rotation(v)) nb.push_back(relabel[t.other_end(e, v)]);
    if (!nb.empty()) std::rotate(nb.begin(), std::min_element(nb.begin(), nb.end()), nb.end());
    out[relabel[v]] = nb;
  }
  return out;
}
}  // namespace

TEST_CASE("reroot preserves cyclic rotations") {
  for (int k = 0; k <= 6; ++k)
    for (const auto& t : enumerate_trees(k))
      for (VertexId v = 0; v < t.vertex_count(); ++v) {
        std::vector<VertexId> old;
        auto r = reroot(t, v, &old);
        REQUIRE(old[0] == v);
        std::vector<VertexId> identity(t.vertex_count());
        for (VertexId u = 0; u < t.vertex_count(); ++u) identity[u] = u;
        CHECK(cyclic_neighbours(r, old) == cyclic_neighbours(t, identity));
        // back to the original root: same plane tree, and the same ordered tree
        // once the root's first edge is the one the original started with
        VertexId home = static_cast<VertexId>(std::find(old.begin(), old.end(), 0) - old.begin());
        std::vector<VertexId> old2;
        auto back = reroot(r, home, &old2);
        std::vector<VertexId> composed(t.vertex_count());
        for (VertexId u = 0; u < t.vertex_count(); ++u) composed[u] = old[old2[u]];
        CHECK(cyclic_neighbours(back, composed) == cyclic_neighbours(t, identity));
        if (t.degree(0) > 0 && t.other_end(t.rotation(0)[0], 0) == old[r.other_end(r.rotation(home)[0], home)])
          CHECK(back == t);
      }
}

TEST_CASE("mirror") {
  CHECK(serialize_tree(mirror(parse_tree("(()()())"))) == "(()()())");
  CHECK(serialize_tree(mirror(parse_tree("((())())"))) == "(()(()))");
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto t = random_tree(static_cast<int>(s % 12), s);
    CHECK(mirror(mirror(t)) == t);
  }
}

TEST_CASE("random trees") {
  CHECK(serialize_tree(random_tree(0, 5)) == "()");
  CHECK(serialize_tree(random_tree(1, 5)) == "(())");
  CHECK(random_tree(9, 42) == random_tree(9, 42));
  std::map<std::string, int> freq;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++freq[serialize_tree(random_tree(3, 1000 + i))];
  CHECK(freq.size() == 5);
  for (const auto& [text, count] : freq) {
    INFO(text);
    CHECK(std::abs(count / double(draws) - 0.2) <= 0.01);
  }
}

TEST_CASE("anchor fans") {
  auto star = parse_tree("(()()())");
  auto f = anchor_fan(star, TreePath{{0}});
  CHECK(f.anchors == std::vector<Dart>{0, 2, 4});

  auto path = parse_tree("((()))");
  CHECK(anchor_fan(path, TreePath{{0, 1, 2}}).anchors.empty());
  CHECK_THROWS(anchor_fan(path, TreePath{{0, 2}}));

  // vertex 1 has children 2,3; root has children 1,4
  auto t = parse_tree("((()())())");
  auto g = anchor_fan(t, TreePath{{0, 1}});
  std::vector<VertexId> heads;
  for (Dart d : g.anchors) heads.push_back(t.dart_head(d));
  // walking clockwise around the contracted pair: root's edges after e(0,1),
  // then vertex 1's edges after its parent edge
  CHECK(heads == std::vector<VertexId>{4, 2, 3});
}

TEST_CASE("anchored subtrees partition the tree") {
  auto star = parse_tree("(()()())");
  for (EdgeId e = 0; e < 3; ++e) CHECK(anchored_subtree(star, TreePath{{0}}, e).tree.vertex_count() == 1);
  auto t = parse_tree("((())())");
  auto s = anchored_subtree(t, TreePath{{0}}, 0);
  CHECK(serialize_tree(s.tree) == "(())");
  CHECK(s.vertices == std::vector<VertexId>{1, 2});
  CHECK_THROWS(anchored_subtree(t, TreePath{{0, 1}}, 0));

  for (int k = 0; k <= 6; ++k)
    for (const auto& tree : enumerate_trees(k))
      for (VertexId a = 0; a < tree.vertex_count(); ++a)
        for (VertexId b = a; b < tree.vertex_count(); ++b) {
          auto p = path_between(tree, a, b);
          auto fan = anchor_fan(tree, p);
          int vertices = 0, interior = 0;
          std::set<EdgeId> seen;
          for (Dart d : fan.anchors) {
            CHECK(seen.insert(dart_edge(d)).second);
            auto sub = anchored_subtree(tree, p, dart_edge(d));
            vertices += sub.tree.vertex_count();
            interior += sub.tree.edge_count();
            CHECK(sub.tree.vertex_count() == tree.subtree_size(d));
          }
          CHECK(vertices == tree.vertex_count() - static_cast<int>(p.vertices.size()));
          CHECK(static_cast<int>(fan.anchors.size()) + static_cast<int>(p.vertices.size()) - 1 + interior ==
                tree.edge_count());
        }
}

TEST_CASE("tree list parsing skips comments") {
  auto list = parse_tree_list("# header\n()\n\n(())\n  # indented\n(()())\n");
  CHECK(list.size() == 3);
}

TEST_CASE("remove_leaf") {
  auto t = parse_tree("((()())())");
  CHECK(serialize_tree(remove_leaf(t, 3)) == "((())())");
  CHECK(serialize_tree(remove_leaf(t, 4)) == "((()()))");
  auto path = parse_tree("((()))");
  auto r = remove_leaf(path, 0);
  CHECK(r.vertex_count() == 2);
  CHECK(r.edge_count() == 1);
  CHECK_THROWS(remove_leaf(t, 1));
  CHECK_THROWS(remove_leaf(parse_tree("()"), 0));
  // every leaf of every small tree
  for (const auto& u : enumerate_trees(5))
    for (VertexId v = 0; v < u.vertex_count(); ++v)
      if (u.degree(v) == 1) CHECK(remove_leaf(u, v).vertex_count() == 5);
}
