#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "planeheight/dp.hpp"
#include "planeheight/oracle.hpp"

using namespace planeheight;

namespace {

std::string star(int k) {
  std::string s = "(";
  for (int i = 0; i < k; ++i) s += "()";
  return s + ")";
}

void check_drawing(const Drawing& d, int h) {
  REQUIRE_NOTHROW(replay(d));
  CHECK(height_of(d) == h);
  auto g = render(d);
  CHECK(verify_rendering(g) == h);
  CHECK(is_planar(g));
}

}  // namespace

TEST_CASE("closed forms") {
  for (const char* p : {"()", "(())", "((()))", "(((((())))))"}) {
    CHECK(solve_topdown(parse_tree(p)).height == 1);
    CHECK(solve_bottomup(parse_tree(p)).height == 1);
  }
  for (int k = 2; k <= 9; ++k) {
    auto t = parse_tree(star(k));
    CHECK(solve_bottomup(t).height == (k + 1) / 2);
    CHECK(solve_topdown(t).height == (k + 1) / 2);
  }
}

TEST_CASE("both modes match the oracle on whole trees") {
  for (int e = 0; e <= 6; ++e)
    for (const auto& t : enumerate_trees(e)) {
      CAPTURE(serialize_tree(t));
      const int h = optimal_height_exact(LocalDisk::whole(t)).height;
      auto td = solve_topdown(t);
      auto bu = solve_bottomup(t);
      CHECK(td.height == h);
      CHECK(bu.height == h);
      check_drawing(reconstruct_drawing(t, td.table), h);
      check_drawing(reconstruct_drawing(t, bu.table), h);
    }
}

TEST_CASE("every top-down entry matches the oracle and redraws") {
  for (int e = 1; e <= 5; ++e)
    for (const auto& t : enumerate_trees(e)) {
      auto td = solve_topdown(t);
      for (const auto& row : td.table.rows)
        for (const auto& [k, rec] : row) {
          CAPTURE(serialize_tree(t));
          CAPTURE(descriptor_json(t, k));
          CHECK(rec.height == optimal_height_exact(to_local_disk(t, k)).height);
          check_drawing(reconstruct_drawing(t, td.table, k), rec.height);
          check_drawing(reconstruct_drawing(t, td.table, rotated(k)), rec.height);
        }
    }
}

TEST_CASE("row one") {
  auto t = parse_tree(star(4));
  auto row = seed_row_one(t);
  // centre: 4 ways to split 2|2 up to half turns, leaves: one disk each
  CHECK(row.size() == 2 + 4);
  for (const auto& k : row) CHECK(interior_vertex_count(t, k) == 1);
  auto bu = solve_bottomup(t);
  auto cand = enumerate_candidates(t, 1, bu.table, bu.height_cap);
  for (const auto& k : row) CHECK(std::find(cand.begin(), cand.end(), k) != cand.end());
}

TEST_CASE("forced boundary and light edges") {
  // spider: centre 0 with legs of length 3, 1, 1
  auto t = parse_tree("((())()())");
  auto fan = anchor_fan(t, TreePath{{0}});
  auto f = forced_boundary(t, fan, 1, 2);
  REQUIRE(f);
  CHECK(f->size() == 1);
  CHECK(t.subtree_size(f->front()) == 2);
  CHECK_FALSE(forced_boundary(t, fan, 1, 1));
  CHECK(forced_boundary(t, fan, 2, 1)->size() == 3);
  CHECK(forced_boundary(t, fan, 2, 4)->empty());

  CHECK(is_light(1, 2, 2));
  CHECK_FALSE(is_light(2, 2, 2));
  CHECK(is_light(2, 3, 2));
  // leaf anchor at H = b
  CHECK(is_light(1, 3, 3));
  // exposed height H - b + 2 is too much
  CHECK_FALSE(is_light(3, 4, 3));
}

TEST_CASE("top-down winning structure lies in the candidate rows") {
  for (int e = 0; e <= 6; ++e)
    for (const auto& t : enumerate_trees(e)) {
      auto td = solve_topdown(t);
      auto bu = solve_bottomup(t);
      for (const auto& k : td.reachable) {
        CAPTURE(serialize_tree(t));
        CAPTURE(descriptor_json(t, k));
        const int m = k.whole() ? t.vertex_count() : interior_vertex_count(t, k);
        auto cand = enumerate_candidates(t, m, bu.table, bu.height_cap);
        CHECK(std::binary_search(cand.begin(), cand.end(), k));
      }
    }
}

TEST_CASE("table dump") {
  auto t = parse_tree("(()())");
  auto bu = solve_bottomup(t);
  auto text = dump_table(t, bu.table);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(bu.table.size()));
  CHECK(text.find("\"case_tag\"") != std::string::npos);
}

TEST_CASE("random trees: modes agree") {
  for (int seed = 1; seed <= 30; ++seed) {
    auto t = random_tree(9 + seed % 6, seed);
    auto td = solve_topdown(t);
    auto bu = solve_bottomup(t);
    CAPTURE(serialize_tree(t));
    CHECK(td.height == bu.height);
    check_drawing(reconstruct_drawing(t, bu.table), bu.height);
  }
}
