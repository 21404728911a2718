// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "planeheight/dp.hpp"
#include "planeheight/oracle.hpp"

using namespace planeheight;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;
  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

std::string star(int k) {
  std::string s = "(";
  for (int i = 0; i < k; ++i) s += "()";
  return s + ")";
}

std::string path_text(int edges) { return std::string(edges + 1, '(') + std::string(edges + 1, ')'); }

// legal, height as reported, planar, and the rendering measures the same
bool witness_ok(const Drawing& d, int h) {
  try {
    replay(d);
  } catch (const IllegalMove&) {
    return false;
  }
  if (height_of(d) != h) return false;
  auto g = render(d);
  return is_planar(g) && verify_rendering(g) == h;
}

// leaves above the centre first, then the centre, then the rest
Drawing star_witness(int k) {
  Drawing d{LocalDisk::whole(parse_tree(star(k))), {}};
  const int left = k / 2;
  for (int j = 0; j < left; ++j) d.moves.push_back(Move::vertex_move(j + 1, 0, 0, 0));
  d.moves.push_back(Move::vertex_move(0, 0, left, 0));
  for (int j = left; j < k; ++j) d.moves.push_back(Move::vertex_move(j + 1, 0, 1, 0));
  return d;
}

void exactness(Outcome& o) {
  int trees = 0;
  for (int e = 0; e <= 7; ++e)
    for (const auto& t : enumerate_trees(e)) {
      ++trees;
      const int h = optimal_height_exact(LocalDisk::whole(t)).height;
      const int td = solve_topdown(t).height, bu = solve_bottomup(t).height;
      if (td != h || bu != h)
        o.fail(serialize_tree(t) + " oracle " + std::to_string(h) + " top-down " + std::to_string(td) + " bottom-up " +
               std::to_string(bu));
    }
  o.detail << trees << " trees with <= 7 edges, bottom-up = top-down = oracle";
}

void closed_forms(Outcome& o) {
  for (int e = 0; e <= 40; ++e) {
    auto t = parse_tree(path_text(e));
    if (solve_bottomup(t).height != 1) o.fail("path with " + std::to_string(e) + " edges");
    if (e <= 12 && solve_topdown(t).height != 1) o.fail("path (top-down) " + std::to_string(e));
  }
  for (int k = 2; k <= 9; ++k) {
    auto t = parse_tree(star(k));
    const int want = (k + 1) / 2;
    if (solve_bottomup(t).height != want || solve_topdown(t).height != want) o.fail("dp on star " + std::to_string(k));
    if (k <= 7) {
      if (optimal_height_exact(LocalDisk::whole(t)).height != want) o.fail("oracle on star " + std::to_string(k));
    } else {
      Drawing w = star_witness(k);
      if (height_lower_bound(LocalDisk::whole(t)) != want) o.fail("lower bound on star " + std::to_string(k));
      if (!witness_ok(w, want) || !is_balanced(w)) o.fail("balanced witness on star " + std::to_string(k));
    }
  }
  o.detail << "paths 0..40 edges -> 1, single vertex -> 1, stars 2..9 -> ceil(k/2) (oracle to 7, bound + witness 8, 9)";
}

void simplification(Outcome& o) {
  std::mt19937_64 rng(2024);
  int drawings = 0, lowered = 0;
  long long worst_steps = 0;
  for (int i = 0; i < 1000; ++i) {
    const int edges = 1 + static_cast<int>(rng() % 8);
    auto t = random_tree(edges, rng());
    const LocalDisk disk = LocalDisk::whole(t);
    std::optional<Drawing> d;
    for (int tries = 0; !d && tries < 50; ++tries) d = random_drawing(disk, rng());
    if (!d) {
      o.fail("no random drawing for " + serialize_tree(t));
      continue;
    }
    ++drawings;
    int bends = 0;
    for (const auto& m : d->moves) bends += m.is_bend();
    const long long M = static_cast<long long>(d->moves.size());
    SimplifyStats st;
    Drawing s;
    try {
      s = simplify(*d, SimplifyMode::All, &st);
      replay(s);
    } catch (const std::exception& e) {
      o.fail(serialize_tree(t) + ": " + e.what());
      continue;
    }
    const int h0 = height_of(*d), h1 = height_of(s);
    const long long n = t.vertex_count();
    if (h1 > h0) o.fail("height raised on " + serialize_tree(t));
    if (static_cast<long long>(s.moves.size()) > (h1 + 1) * n) o.fail("too many moves on " + serialize_tree(t));
    // each exchange walks a bend one step towards its end, each cancellation deletes moves
    if (st.steps > (bends + 1) * M) o.fail("rewrite ran past its potential on " + serialize_tree(t));
    worst_steps = std::max<long long>(worst_steps, st.steps);
    lowered += h1 < h0;
  }
  o.detail << drawings << " random trees/drawings, moves <= (H+1)n, height never raised (" << lowered
           << " lowered), max rewrite steps " << worst_steps;
}

void bend_necessity(Outcome& o) {
  int trees = 0, found = 0, top = 0;
  std::string example;
  for (int e = 0; e <= 8; ++e)
    for (const auto& t : enumerate_trees(e)) {
      ++trees;
      const int h = optimal_height_exact(LocalDisk::whole(t)).height;
      const int hb = optimal_height_bendfree(LocalDisk::whole(t)).height;
      top = std::max(top, h);
      if (hb > h && found++ == 0) example = serialize_tree(t);
    }
  o.detail << trees << " trees with <= 8 edges scanned, " << found << " need a bend";
  if (found) o.detail << " (e.g. " << example << ")";
  else o.fail("every tree has a bend-free optimal drawing; largest optimum seen is " + std::to_string(top));
}

void witnesses(Outcome& o) {
  int checked = 0;
  auto both = [&](const OrderedTree& t) {
    for (const DpResult& r : {solve_topdown(t), solve_bottomup(t)}) {
      ++checked;
      if (!witness_ok(reconstruct_drawing(t, r.table), r.height)) o.fail("witness of " + serialize_tree(t));
    }
  };
  for (int e = 0; e <= 7; ++e)
    for (const auto& t : enumerate_trees(e)) both(t);
  for (int e = 8; e <= 40; e += 4) both(parse_tree(path_text(e)));
  for (int k = 8; k <= 9; ++k) both(parse_tree(star(k)));
  o.detail << checked << " reconstructed drawings replayed, measured, rendered and checked planar";
}

void superset(Outcome& o) {
  int descriptors = 0;
  for (int e = 0; e <= 6; ++e)
    for (const auto& t : enumerate_trees(e)) {
      auto td = solve_topdown(t);
      auto bu = solve_bottomup(t);
      std::map<int, std::vector<DiskKey>> rows;
      for (const auto& k : td.reachable) {
        const int m = k.whole() ? t.vertex_count() : interior_vertex_count(t, k);
        if (!rows.count(m)) rows[m] = enumerate_candidates(t, m, bu.table, bu.height_cap);
        ++descriptors;
        if (!std::binary_search(rows[m].begin(), rows[m].end(), k))
          o.fail(serialize_tree(t) + " " + descriptor_json(t, k));
      }
    }
  o.detail << descriptors << " winning-structure descriptors over trees <= 6 edges, all among the candidates";
}

void invariance(Outcome& o) {
  int trees = 0;
  for (int e = 0; e <= 6; ++e)
    for (const auto& t : enumerate_trees(e)) {
      ++trees;
      const int h = solve_bottomup(t).height;
      if (solve_bottomup(mirror(t)).height != h) o.fail("mirror of " + serialize_tree(t));
      for (VertexId v = 0; v < t.vertex_count(); ++v)
        if (solve_bottomup(reroot(t, v)).height != h) o.fail("reroot of " + serialize_tree(t));
    }
  std::mt19937_64 rng(77);
  int deletions = 0;
  for (int i = 0; i < 1000; ++i) {
    auto t = random_tree(1 + static_cast<int>(rng() % 14), rng());
    const int h = solve_bottomup(t).height;
    for (VertexId v = 0; v < t.vertex_count(); ++v)
      if (t.degree(v) == 1) {
        ++deletions;
        if (solve_bottomup(remove_leaf(t, v)).height > h) o.fail("leaf deletion raised " + serialize_tree(t));
      }
  }
  o.detail << trees << " trees invariant under reroot and mirror; " << deletions
           << " leaf deletions over 1000 random trees never raised the height";
}

void scaling(Outcome& o) {
  std::vector<double> ln_n, ln_size, ns;
  o.detail << "n:size:seconds";
  for (int n = 10; n <= 100; n += 10) {
    auto t = random_tree(n - 1, 1);
    auto t0 = std::chrono::steady_clock::now();
    auto r = solve_bottomup(t);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.detail << " " << n << ":" << r.table.size() << ":" << std::round(secs * 10) / 10;
    if (n == 100 && secs > 600) o.fail("n = 100 took " + std::to_string(secs) + " s");
    if (!witness_ok(reconstruct_drawing(t, r.table), r.height)) o.fail("witness at n = " + std::to_string(n));
    ns.push_back(n);
    ln_n.push_back(std::log(n));
    ln_size.push_back(std::log(static_cast<double>(r.table.size())));
  }
  auto slope = [](const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= x.size(), my /= y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
    return sxy / sxx;
  };
  const double degree = slope(ln_n, ln_size), rate = slope(ns, ln_size);
  char buf[128];
  std::snprintf(buf, sizeof buf, "; log-log slope %.2f, per-vertex growth factor %.3f", degree, std::exp(rate));
  o.detail << buf;
  if (degree > 11) o.fail("table grows faster than n^11");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"exhaustive exactness", exactness},
      {"closed forms", closed_forms},
      {"simplification bound", simplification},
      {"bend necessity", bend_necessity},
      {"witness integrity", witnesses},
      {"candidate superset", superset},
      {"invariance", invariance},
      {"scaling", scaling},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("%s %d %s [%.1f s]: %s\n", o.pass ? "PASS" : "FAIL", ++index, name.c_str(), secs,
                (o.detail.str() + (o.pass ? "" : "; failure: " + o.first_failure)).c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
