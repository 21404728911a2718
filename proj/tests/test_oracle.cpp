#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "planeheight/oracle.hpp"

using namespace planeheight;

namespace {

std::string star(int k) {
  std::string s = "(";
  for (int i = 0; i < k; ++i) s += "()";
  return s + ")";
}

int opt(const std::string& text) { return optimal_height_exact(LocalDisk::whole(parse_tree(text))).height; }

void check_witness(const OracleResult& r) {
  REQUIRE_NOTHROW(replay(r.witness));
  CHECK(height_of(r.witness) == r.height);
  auto g = render(r.witness);
  CHECK(verify_rendering(g) == r.height);
  CHECK(is_planar(g));
}

}  // namespace

TEST_CASE("small whole trees") {
  CHECK(opt("()") == 1);
  CHECK(opt("(())") == 1);
  CHECK(opt("((()))") == 1);
  for (int k = 2; k <= 7; ++k) {
    INFO(k);
    auto r = optimal_height_exact(LocalDisk::whole(parse_tree(star(k))));
    CHECK(r.height == (k + 1) / 2);
    check_witness(r);
  }
}

TEST_CASE("exposed heights") {
  // the anchor is the edge from the artificial root into the subtree
  CHECK(exposed_height_exact(parse_tree("(())"), dart_of(0, false)) == 1);
  CHECK(exposed_height_exact(parse_tree("((()))"), dart_of(0, false)) == 1);
  CHECK(exposed_height_exact(parse_tree("((()()()))"), dart_of(0, false)) == 2);
  // reflection: same bubble with the anchor on the left
  auto t = parse_tree("((()()()))");
  LocalDisk left = bubble_disk(t, dart_of(0, false));
  std::swap(left.left, left.right);
  CHECK(optimal_height_exact(left).height == 2);
}

TEST_CASE("bend-free search") {
  CHECK(optimal_height_bendfree(LocalDisk::whole(parse_tree("((()))"))).height == 1);
  CHECK(optimal_height_bendfree(LocalDisk::whole(parse_tree(star(4)))).height == 2);
  auto r = optimal_height_bendfree(LocalDisk::whole(parse_tree("((()())(()()))")));
  for (const auto& m : r.witness.moves) CHECK_FALSE(m.is_bend());
  check_witness(r);
}

TEST_CASE("cap and errors") {
  CHECK_THROWS_AS(optimal_height_exact(LocalDisk::whole(parse_tree(star(9)))), OracleScaleExceeded);
  OracleOptions big;
  big.edge_cap = 9;
  CHECK(optimal_height_exact(LocalDisk::whole(parse_tree(star(9))), big).height == 5);
  LocalDisk bad = LocalDisk::whole(parse_tree("(())"));
  bad.interior[1] = 0;
  CHECK_THROWS_AS(optimal_height_exact(bad), std::invalid_argument);
}

TEST_CASE("lower bound, invariance and witnesses on small trees") {
  for (int k = 0; k <= 5; ++k)
    for (const auto& t : enumerate_trees(k)) {
      INFO(serialize_tree(t));
      auto r = optimal_height_exact(LocalDisk::whole(t));
      CHECK(r.height >= height_lower_bound(LocalDisk::whole(t)));
      check_witness(r);
      CHECK(optimal_height_exact(LocalDisk::whole(mirror(t))).height == r.height);
      for (VertexId v = 0; v < t.vertex_count(); ++v)
        CHECK(optimal_height_exact(LocalDisk::whole(reroot(t, v))).height == r.height);
    }
}
